#include "sigmalab/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "sigmalab/atlas.hpp"
#include "sigmalab/ln_factorial.hpp"
#include "sigmalab/sigma.hpp"

namespace sigmalab::verify {

using atlas::FunctionId;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Points and grids

Point Point::rational(const mpq_class& q, std::string label) {
  if (label.empty()) label = q.get_str();
  return Point(Kind::Rational, q, std::move(label));
}

Point Point::decimal(std::string_view text) {
  return Point(Kind::Rational, parse_decimal(text), std::string(text));
}

Point Point::dyadic(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return Point(Kind::Rational, mpq_class(v), std::string(buf, res.ptr));
}

Point Point::e_over_2() { return Point(Kind::EHalf, 0, "e/2"); }
Point Point::e() { return Point(Kind::E, 0, "e"); }
Point Point::e_squared_over_2() { return Point(Kind::ESquaredHalf, 0, "e^2/2"); }

BoundedReal Point::at(unsigned bits) const {
  switch (kind_) {
    case Kind::Rational: return BoundedReal::rational(value_, bits);
    case Kind::EHalf: return BoundedReal::e(bits) / 2;
    case Kind::E: return BoundedReal::e(bits);
    case Kind::ESquaredHalf: return sqr(BoundedReal::e(bits)) / 2;
  }
  throw std::logic_error("bad point kind");
}

Grid geometric_grid(const Point& from, const Point& to, int per_decade) {
  if (per_decade < 1) throw std::invalid_argument("per_decade must be positive");
  const BoundedReal lo = from.at(64);
  const BoundedReal hi = to.at(64);
  if (compare_certified(lo, hi) != Comparison::Less) throw std::invalid_argument("grid needs from < to");
  const double step = std::pow(10.0, 1.0 / per_decade);
  const double stop = hi.lo() / std::pow(10.0, 0.25 / per_decade);
  Grid grid{from};
  for (double x = lo.hi() * step; x < stop; x *= step) grid.push_back(Point::dyadic(x));
  grid.push_back(to);
  return grid;
}

Grid powers_of_two(int max_exp) {
  Grid grid;
  for (int k = 0; k <= max_exp; ++k) grid.push_back(Point::dyadic(std::ldexp(1.0, k)));
  return grid;
}

Point default_grid_top() { return Point::rational(mpq_class(1 << 20), "2^20"); }

Point limit_point() { return Point::rational(mpq_class(1UL << 30), "2^30"); }

namespace {

using PairAt = std::function<std::pair<BoundedReal, BoundedReal>(unsigned)>;

// Accumulates certified claims for one report.
class Audit {
 public:
  Audit(std::string id, const PrecisionPolicy& policy) : policy_(policy) {
    report_.check_id = std::move(id);
  }

  void param(std::string key, std::string value) { report_.params.emplace_back(std::move(key), std::move(value)); }

  void witness(std::string label, BoundedReal value) {
    report_.witnesses.push_back(Witness{std::move(label), std::move(value), {}});
  }

  void note(std::string label, std::string text) {
    report_.witnesses.push_back(Witness{std::move(label), std::nullopt, std::move(text)});
  }

  Comparison less(const std::string& label, const PairAt& at, bool show = false) {
    return expect(label, Comparison::Less, at, show);
  }

  Comparison greater(const std::string& label, const PairAt& at, bool show = false) {
    return expect(label, Comparison::Greater, at, show);
  }

  // Two routes to the same real number must produce overlapping enclosures.
  bool overlap(const std::string& label, const PairAt& at) {
    ++report_.claims;
    const auto [a, b] = at(policy_.initial_bits);
    if (a.overlaps(b)) return true;
    ++fails_;
    if (recorded_ < kMaxRecorded) {
      ++recorded_;
      witness(label + " [FAIL: disjoint] first", a);
      witness(label + " [FAIL: disjoint] second", b);
    }
    return false;
  }

  void mark_undecided() { ++undecided_; }

  /// Decides lhs vs rhs without counting it as a claim.
  Comparison observe(const PairAt& at) { return run(at).first; }

  CheckReport finish() {
    report_.verdict = fails_ > 0 ? Verdict::Fail : undecided_ > 0 ? Verdict::Undecided : Verdict::Pass;
    report_.params.emplace_back("claims", std::to_string(report_.claims));
    return std::move(report_);
  }

 private:
  static constexpr int kMaxRecorded = 24;

  std::pair<Comparison, std::optional<std::pair<BoundedReal, BoundedReal>>> run(const PairAt& at) {
    std::optional<std::pair<BoundedReal, BoundedReal>> last;
    Comparison c = Comparison::Undecided;
    for (unsigned bits : policy_.levels()) {
      last = at(bits);
      c = compare_certified(last->first, last->second);
      if (c != Comparison::Undecided) break;
    }
    return {c, std::move(last)};
  }

  Comparison expect(const std::string& label, Comparison want, const PairAt& at, bool show) {
    ++report_.claims;
    auto [got, sides] = run(at);
    const bool ok = got == want;
    if (got == Comparison::Undecided) {
      ++undecided_;
    } else if (!ok) {
      ++fails_;
    }
    if (show || (!ok && recorded_ < kMaxRecorded)) {
      if (!ok) ++recorded_;
      const std::string tag = ok ? "" : got == Comparison::Undecided ? " [UNDECIDED]" : " [FAIL]";
      witness(label + tag + " lhs", sides->first);
      witness(label + tag + " rhs", sides->second);
    }
    return got;
  }

  PrecisionPolicy policy_;
  CheckReport report_;
  int fails_ = 0;
  int undecided_ = 0;
  int recorded_ = 0;
};

BoundedReal at_int(std::uint64_t n, unsigned bits) {
  return BoundedReal::integer(static_cast<std::int64_t>(n), bits);
}

BoundedReal tol(unsigned bits) { return BoundedReal::decimal("0.001", bits); }

// |value(bits)| < tolerance, as two strict claims.
void within(Audit& audit, const std::string& label, const std::function<BoundedReal(unsigned)>& value) {
  audit.less(label + " < 1e-3", [&](unsigned b) { return std::pair{value(b), tol(b)}; }, true);
  audit.greater(label + " > -1e-3", [&](unsigned b) { return std::pair{value(b), -tol(b)}; });
}

// Strict decrease of f along consecutive grid points.
void decreasing(Audit& audit, const std::string& name, const Grid& grid,
                const std::function<BoundedReal(const BoundedReal&)>& f) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    audit.greater(name + "(" + grid[i].label() + ") > " + name + "(" + grid[i + 1].label() + ")",
                  [&](unsigned b) { return std::pair{f(grid[i].at(b)), f(grid[i + 1].at(b))}; });
  }
}

void increasing(Audit& audit, const std::string& name, const Grid& grid,
                const std::function<BoundedReal(const BoundedReal&)>& f) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    audit.less(name + "(" + grid[i].label() + ") < " + name + "(" + grid[i + 1].label() + ")",
               [&](unsigned b) { return std::pair{f(grid[i].at(b)), f(grid[i + 1].at(b))}; });
  }
}

BoundedReal a_of(FunctionId f, const BoundedReal& x) { return atlas::a_transform(f, x); }

BoundedReal a_sl_minus_ap(const BoundedReal& x) { return a_of(FunctionId::scriptL, x) - a_of(FunctionId::p, x); }
BoundedReal a_sr_minus_ap(const BoundedReal& x) { return a_of(FunctionId::scriptR, x) - a_of(FunctionId::p, x); }

BoundedReal ln2x_ql(const BoundedReal& x) { return ln(2 * x) * atlas::eval(FunctionId::QL, x); }
BoundedReal ln2x_qr(const BoundedReal& x) { return ln(2 * x) * atlas::eval(FunctionId::QR, x); }

}  // namespace

// ---------------------------------------------------------------------------

CheckReport check_robbins(std::uint64_t n_lo, std::uint64_t n_hi, const PrecisionPolicy& policy) {
  if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("check_robbins needs 1 <= n_lo <= n_hi");
  Audit audit("robbins", policy);
  audit.param("n_lo", std::to_string(n_lo));
  audit.param("n_hi", std::to_string(n_hi));
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    const bool show = n == n_lo || n == n_hi;
    // e (n!)^(1/n) / n
    auto middle = [n](unsigned b) { return t_value(n, b) / at_int(n, b); };
    audit.less("L(n)P(2n) < T_n/n at n=" + std::to_string(n),
               [&](unsigned b) { return std::pair{atlas::eval(FunctionId::scriptL, at_int(n, b)), middle(b)}; },
               show);
    audit.less("T_n/n < R(n)P(2n) at n=" + std::to_string(n),
               [&](unsigned b) { return std::pair{middle(b), atlas::eval(FunctionId::scriptR, at_int(n, b))}; },
               show);
  }
  return audit.finish();
}

CheckReport check_lemma1(const Grid& order_grid, const Grid& decrease_grid, const Point& limit_at,
                         const PrecisionPolicy& policy) {
  Audit audit("lemma1", policy);
  audit.param("order_points", std::to_string(order_grid.size()));
  audit.param("decrease_points", std::to_string(decrease_grid.size()));
  audit.param("limit_at", limit_at.label());

  for (const Point& pt : order_grid) {
    const std::string at = " at x=" + pt.label();
    audit.greater("a_scriptR > a_scriptL" + at, [&](unsigned b) {
      const BoundedReal x = pt.at(b);
      return std::pair{a_of(FunctionId::scriptR, x), a_of(FunctionId::scriptL, x)};
    });
    audit.greater("a_scriptL > a_p" + at, [&](unsigned b) {
      const BoundedReal x = pt.at(b);
      return std::pair{a_of(FunctionId::scriptL, x), a_of(FunctionId::p, x)};
    });
    audit.greater("a_p > 0" + at, [&](unsigned b) {
      return std::pair{a_of(FunctionId::p, pt.at(b)), BoundedReal::integer(0, b)};
    });
  }
  // P(1) = 1 makes a_p vanish at x = 1/2; the ordering is only strict above it.
  audit.witness("a_p(1/2)", a_of(FunctionId::p, BoundedReal::rational(mpq_class(1, 2), policy.initial_bits)));

  decreasing(audit, "a_scriptL-a_p", decrease_grid, a_sl_minus_ap);
  decreasing(audit, "a_scriptR-a_p", decrease_grid, a_sr_minus_ap);

  const auto al = [](unsigned b) { return atlas::alpha(b); };
  within(audit, "a_scriptL-a_p-alpha at " + limit_at.label(),
         [&](unsigned b) { return a_sl_minus_ap(limit_at.at(b)) - al(b); });
  within(audit, "a_scriptR-a_p-alpha at " + limit_at.label(),
         [&](unsigned b) { return a_sr_minus_ap(limit_at.at(b)) - al(b); });
  within(audit, "delta at " + limit_at.label(), [&](unsigned b) { return atlas::delta(limit_at.at(b)); });
  return audit.finish();
}

CheckReport check_lemma1(const PrecisionPolicy& policy) {
  return check_lemma1(powers_of_two(20), geometric_grid(Point::e_over_2(), default_grid_top()), limit_point(),
                      policy);
}

CheckReport check_prop1_limits(const Point& limit_at, const PrecisionPolicy& policy) {
  Audit audit("prop1", policy);
  audit.param("limit_at", limit_at.label());
  const mpq_class half(1, 2);
  within(audit, "QL-1/2 at " + limit_at.label(), [&](unsigned b) {
    return atlas::eval(FunctionId::QL, limit_at.at(b)) - BoundedReal::rational(half, b);
  });
  within(audit, "QR-1/2 at " + limit_at.label(), [&](unsigned b) {
    return atlas::eval(FunctionId::QR, limit_at.at(b)) - BoundedReal::rational(half, b);
  });
  within(audit, "D-(1-alpha) at " + limit_at.label(), [&](unsigned b) {
    return atlas::eval(FunctionId::D, limit_at.at(b)) - (1 - atlas::alpha(b));
  });
  return audit.finish();
}

CheckReport check_cor1_thresholds(const PrecisionPolicy& policy) {
  Audit audit("cor1", policy);
  const Point lo = Point::decimal("3.92465");
  const Point hi = Point::decimal("3.92466");
  auto d_at = [](const Point& p) {
    return [&p](unsigned b) { return std::pair{atlas::eval(FunctionId::D, p.at(b)), BoundedReal::integer(1, b)}; };
  };
  audit.greater("D(3.92465) > 1", d_at(lo), true);
  audit.less("D(3.92466) < 1", d_at(hi), true);
  audit.greater("3.92466 > e^2/2", [&](unsigned b) {
    return std::pair{hi.at(b), Point::e_squared_over_2().at(b)};
  }, true);

  const Grid grid = geometric_grid(Point::e_squared_over_2(), default_grid_top());
  audit.param("decrease_points", std::to_string(grid.size()));
  decreasing(audit, "D", grid, [](const BoundedReal& x) { return atlas::eval(FunctionId::D, x); });

  for (const char* text : {"4", "10", "100", "1000000"}) {
    const Point p = Point::decimal(text);
    audit.less(std::string("D(") + text + ") < 1", d_at(p), std::string_view(text) == "1000000");
    // Lower end consistent with D -> 1 - alpha from above.
    audit.greater(std::string("D(") + text + ")+1 > 2-alpha", [&](unsigned b) {
      return std::pair{atlas::eval(FunctionId::D, p.at(b)) + 1, 2 - atlas::alpha(b)};
    });
  }

  // The two algebraic routes to the bracket ends and to D agree.
  for (const Point& p : grid) {
    audit.overlap("ln(2x)QR(x) closed form at x=" + p.label(), [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{ln2x_qr(x), atlas::ln2x_qr_closed(x)};
    });
    audit.overlap("ln(2x)QL(x) closed form at x=" + p.label(), [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{ln2x_ql(x), atlas::ln2x_ql_closed(x)};
    });
    audit.overlap("D closed form at x=" + p.label(), [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{atlas::eval(FunctionId::D, x), atlas::d_closed(x)};
    });
  }

  // 0.57236 < alpha < 0.57237 holds; the same bounds for 1 - alpha do not.
  const auto c_lo = [](unsigned b) { return BoundedReal::decimal("0.57236", b); };
  const auto c_hi = [](unsigned b) { return BoundedReal::decimal("0.57237", b); };
  audit.greater("alpha > 0.57236", [&](unsigned b) { return std::pair{atlas::alpha(b), c_lo(b)}; }, true);
  audit.less("alpha < 0.57237", [&](unsigned b) { return std::pair{atlas::alpha(b), c_hi(b)}; });
  const unsigned b0 = policy.initial_bits;
  const BoundedReal one_minus_alpha = 1 - atlas::alpha(b0);
  audit.witness("1-alpha", one_minus_alpha);
  const bool literal = compare_certified(one_minus_alpha, c_lo(b0)) == Comparison::Greater &&
                      compare_certified(one_minus_alpha, c_hi(b0)) == Comparison::Less;
  audit.note("reading 0.57236 < 1-alpha < 0.57237", literal ? "holds" : "does not hold (bounds fit alpha)");
  audit.note("reading 1.57236 < D(x)+1 for x >= 3.92466",
             "not implied; D(x)+1 decreases to 2-alpha = 1.42763...");
  return audit.finish();
}

CheckReport check_gn_and_F(const PrecisionPolicy& policy) {
  Audit audit("gn", policy);
  const Point y_lo = Point::decimal("1.67834");
  const Point y_hi = Point::decimal("1.67845");
  auto zero = [](unsigned b) { return BoundedReal::integer(0, b); };
  audit.less("GN'(1.67834) < 0", [&](unsigned b) { return std::pair{atlas::gn_derivative(y_lo.at(b)), zero(b)}; },
             true);
  audit.greater("GN'(1.67845) > 0",
                [&](unsigned b) { return std::pair{atlas::gn_derivative(y_hi.at(b)), zero(b)}; }, true);
  audit.greater("GN(1.67845) > 0",
                [&](unsigned b) { return std::pair{atlas::eval(FunctionId::GN, y_hi.at(b)), zero(b)}; }, true);
  // The quoted bound 2.6784 > e^r/2 is off: e^r/2 is about 2.67862, so the
  // F grid below starts a little under e^r/2. Reported, not asserted.
  audit.witness("e^1.67845/2", exp(y_hi.at(policy.initial_bits)) / 2);
  audit.less("F(3) < F(4)", [](unsigned b) {
    return std::pair{atlas::eval(FunctionId::F, at_int(3, b)), atlas::eval(FunctionId::F, at_int(4, b))};
  }, true);
  const Grid grid = geometric_grid(Point::decimal("2.6785"), default_grid_top());
  audit.param("increase_points", std::to_string(grid.size()));
  increasing(audit, "F", grid, [](const BoundedReal& x) { return atlas::eval(FunctionId::F, x); });
  return audit.finish();
}

CheckReport check_y_threshold(const PrecisionPolicy& policy) {
  Audit audit("threshold", policy);
  audit.param("a", "ln 3");
  audit.param("A", "3");
  // B0(y)/e^y + C0(y)/e^(2y) against A (ln pi - a)
  auto sides = [](const Point& y) {
    return [&y](unsigned b) {
      const BoundedReal v = y.at(b);
      const BoundedReal ey = exp(v);
      const BoundedReal lhs = atlas::eval(FunctionId::B0, v) / ey + atlas::eval(FunctionId::C0, v) / sqr(ey);
      const BoundedReal three = BoundedReal::integer(3, b);
      return std::pair{lhs, three * (atlas::ln_pi(b) - ln(three))};
    };
  };
  const Point y_fail = Point::decimal("6.06520");
  const Point y_hold = Point::decimal("6.06521");
  audit.greater("inequality fails at y=6.06520", sides(y_fail), true);
  audit.less("inequality holds at y=6.06521", sides(y_hold), true);
  auto half_exp = [&](unsigned b) { return exp(y_hold.at(b)) / 2; };
  audit.greater("e^6.06521/2 > 215.30654",
                [&](unsigned b) { return std::pair{half_exp(b), BoundedReal::decimal("215.30654", b)}; }, true);
  audit.less("e^6.06521/2 < 215.30655",
             [&](unsigned b) { return std::pair{half_exp(b), BoundedReal::decimal("215.30655", b)}; });
  return audit.finish();
}

CheckReport check_f3x(const Grid& grid, const PrecisionPolicy& policy) {
  Audit audit("f3x", policy);
  audit.param("points", std::to_string(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& p = grid[i];
    audit.less("F(3x) < ln(2x)QL(x) at x=" + p.label(), [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{atlas::eval(FunctionId::F, 3 * x), ln2x_ql(x)};
    }, i == 0);
  }
  return audit.finish();
}

CheckReport check_f3x(const PrecisionPolicy& policy) {
  Grid grid = geometric_grid(Point::decimal("215.30655"), default_grid_top());
  grid.push_back(Point::decimal("216"));
  grid.push_back(Point::decimal("1000000"));
  return check_f3x(grid, policy);
}

CheckReport check_eqffff(const std::vector<ChangePointRecord>& records, const PrecisionPolicy& policy) {
  Audit audit("ffff", policy);
  audit.param("pairs", std::to_string(records.empty() ? 0 : records.size() - 1));
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const std::uint64_t a = records[i].n_i;
    const std::uint64_t c = records[i + 1].n_i;
    const std::string tag = " for (" + std::to_string(a) + "," + std::to_string(c) + ")";
    auto diff = [&](unsigned b) {
      return a_of(FunctionId::scriptL, at_int(c, b)) - a_of(FunctionId::scriptL, at_int(a, b));
    };
    auto d = [&](unsigned b) { return max(atlas::delta(at_int(c, b)), atlas::delta(at_int(a, b))); };
    audit.greater("diff > 1-d(i)" + tag, [&](unsigned b) { return std::pair{diff(b), 1 - d(b)}; }, true);
    audit.less("diff < 1+d(i)" + tag, [&](unsigned b) { return std::pair{diff(b), 1 + d(b)}; }, true);
    // What the two-sided bounds on sigma actually give.
    const Comparison weak_lo = audit.observe([&](unsigned b) { return std::pair{diff(b), -d(b)}; });
    const Comparison weak_hi = audit.observe([&](unsigned b) { return std::pair{diff(b), 2 + d(b)}; });
    audit.note("|diff-1| < 1+d(i)" + tag,
               weak_lo == Comparison::Greater && weak_hi == Comparison::Less ? "holds" : "not certified");
  }
  return audit.finish();
}

CheckReport check_external_facts(const Grid& grid, const PrecisionPolicy& policy) {
  Audit audit("external", policy);
  audit.param("points", std::to_string(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& p = grid[i];
    const bool show = i == 0;
    const std::string at = " at x=" + p.label();
    audit.less("R(x) < 1+1/x" + at, [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{atlas::eval(FunctionId::R, x), 1 + 1 / x};
    }, show);
    audit.less("P(2x) < 2x/(2x-ln 2x)" + at, [&](unsigned b) {
      const BoundedReal x2 = 2 * p.at(b);
      return std::pair{atlas::eval(FunctionId::P, x2), x2 / (x2 - ln(x2))};
    }, show);
    audit.greater("P(2x) > 1+ln(2x)/(2x)" + at, [&](unsigned b) {
      const BoundedReal x2 = 2 * p.at(b);
      return std::pair{atlas::eval(FunctionId::P, x2), 1 + ln(x2) / x2};
    }, show);
    audit.greater("L(x) > 1+alpha/x" + at, [&](unsigned b) {
      const BoundedReal x = p.at(b);
      return std::pair{atlas::eval(FunctionId::L, x), 1 + atlas::alpha(b) / x};
    }, show);
  }
  const Grid p_grid = geometric_grid(Point::e(), default_grid_top());
  audit.param("p_decrease_points", std::to_string(p_grid.size()));
  decreasing(audit, "P", p_grid, [](const BoundedReal& x) { return atlas::eval(FunctionId::P, x); });
  return audit.finish();
}

CheckReport check_external_facts(const PrecisionPolicy& policy) {
  Grid grid{Point::e_over_2(), Point::decimal("2"), Point::decimal("10"), Point::decimal("1000")};
  for (Point& p : geometric_grid(Point::e_over_2(), default_grid_top())) grid.push_back(std::move(p));
  return check_external_facts(grid, policy);
}

CheckReport check_sn(std::uint64_t n_lo, std::uint64_t n_hi, const PrecisionPolicy& policy) {
  Audit audit("sn", policy);
  audit.param("n_lo", std::to_string(n_lo));
  audit.param("n_hi", std::to_string(n_hi));
  if (n_lo > n_hi) return audit.finish();
  if (n_lo < 1) throw std::invalid_argument("check_sn needs n_lo >= 1");

  // a(n) = (T_{n+1} - T_n - 1) n, and the hypothesis a(n) < 1/2.
  auto a_of_n = [](std::uint64_t n, unsigned b) {
    return (t_value(n + 1, b) - t_value(n, b) - 1) * at_int(n, b);
  };
  std::uint64_t violations = 0;
  std::uint64_t undecided = 0;
  std::optional<std::uint64_t> first_violation;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    const Comparison c = audit.observe([&](unsigned b) {
      return std::pair{a_of_n(n, b), BoundedReal::rational(mpq_class(1, 2), b)};
    });
    if (c == Comparison::Greater) {
      ++violations;
      if (!first_violation) first_violation = n;
    } else if (c == Comparison::Undecided) {
      ++undecided;
    }
  }
  const unsigned b0 = policy.initial_bits;
  audit.witness("S_" + std::to_string(n_lo), t_value(n_lo + 1, b0) - t_value(n_lo, b0));
  audit.witness("a(" + std::to_string(n_lo) + ")", a_of_n(n_lo, b0));
  const BoundedReal a_hi = a_of_n(n_hi, b0);
  audit.witness("a(" + std::to_string(n_hi) + ")", a_hi);
  audit.witness("|a(" + std::to_string(n_hi) + ")-1/2|",
                max(a_hi - BoundedReal::rational(mpq_class(1, 2), b0), BoundedReal::rational(mpq_class(1, 2), b0) - a_hi));
  std::string status = violations == 0 && undecided == 0 ? "held at every tested n" : "";
  if (violations > 0) {
    status = "violated at " + std::to_string(violations) + " n (first n=" + std::to_string(*first_violation) + ")";
  }
  if (undecided > 0) status += (status.empty() ? "" : "; ") + std::to_string(undecided) + " n undecided";
  audit.note("S_n < 1 + 1/(2n)", status);
  if (undecided > 0) audit.mark_undecided();
  return audit.finish();
}

std::vector<CheckReport> run_suite(std::string_view suite, const PrecisionPolicy& policy, ChangePointFinder* finder,
                                   const SuiteOptions& options) {
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  const bool all = suite == "all";
  std::vector<CheckReport> out;
  if (all || suite == "robbins") out.push_back(check_robbins(1, options.robbins_hi, policy));
  if (all || suite == "lemma1") out.push_back(check_lemma1(policy));
  if (all || suite == "prop1") out.push_back(check_prop1_limits(limit_point(), policy));
  if (all || suite == "cor1") out.push_back(check_cor1_thresholds(policy));
  if (all || suite == "gn") out.push_back(check_gn_and_F(policy));
  if (all || suite == "threshold") out.push_back(check_y_threshold(policy));
  if (all || suite == "f3x") out.push_back(check_f3x(policy));
  if (all || suite == "ffff") {
    std::optional<ChangePointFinder> own;
    if (!finder) finder = &own.emplace(policy);
    out.push_back(check_eqffff(finder->enumerate(options.changepoint_max_n), policy));
  }
  if (all || suite == "external") out.push_back(check_external_facts(policy));
  if (all || suite == "sn") out.push_back(check_sn(1, options.sn_hi, policy));
  return out;
}

Verdict overall(const std::vector<CheckReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    if (r.verdict == Verdict::Undecided) undecided = true;
  }
  return undecided ? Verdict::Undecided : Verdict::Pass;
}

}  // namespace sigmalab::verify
