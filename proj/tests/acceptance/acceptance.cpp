// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "sigmalab/atlas.hpp"
#include "sigmalab/changepoints.hpp"
#include "sigmalab/sigma.hpp"
#include "sigmalab/verifier.hpp"

using namespace sigmalab;

namespace {

constexpr double kRelativeDerivativeTolerance = 1e-4;
constexpr double kFiniteDifferenceStep = 1e-6;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << why;
  }
};

BoundedReal at(std::int64_t v, unsigned bits = 128) { return BoundedReal::integer(v, bits); }
BoundedReal dec(const char* s, unsigned bits = 128) { return BoundedReal::decimal(s, bits); }

bool strictly_inside(const BoundedReal& x, const char* lo, const char* hi) {
  return compare_certified(dec(lo), x) == Comparison::Less && compare_certified(x, dec(hi)) == Comparison::Less;
}

// Computed once and shared by criteria 3, 4, 5 and 8.
std::vector<ChangePointRecord> g_records;
double g_enumerate_seconds = 0;

void criterion1(Outcome& o) {
  const std::pair<std::uint64_t, std::int64_t> expected[] = {
      {1, 2},      {3, 2},      {4, 3},         {54, 3},        {55, 4},         {458, 4},      {459, 5},
      {3480, 5},   {3481, 6},   {25867, 6},     {25868, 7},     {191351, 7},     {191352, 8}};
  for (const auto& [n, s] : expected) {
    const auto got = sigma_exact(n).sigma;
    if (got != s) o.fail("sigma_" + std::to_string(n) + " = " + std::to_string(got));
  }
  if (o.ok) o.detail << "13 values exact";
}

void criterion2(Outcome& o) {
  const SigmaCertificate c = sigma_exact(1'000'000'000'000ULL);
  if (c.sigma != 15) o.fail("sigma = " + std::to_string(c.sigma));
  if (c.method != LnFactorialMethod::Series) o.fail("not the series path");
  if (o.ok) o.detail << "sigma_1e12 = 15 via series, " << c.bits_used << " bits";
}

void criterion3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  g_records = enumerate_changepoints(200'000);
  g_enumerate_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::vector<std::uint64_t> expected = {3, 54, 458, 3480, 25867, 191351};
  std::vector<std::uint64_t> got;
  for (const auto& r : g_records) got.push_back(r.n_i);
  if (got != expected) {
    std::string s;
    for (auto v : got) s += std::to_string(v) + " ";
    o.fail("got " + s);
  } else {
    o.detail << "[3, 54, 458, 3480, 25867, 191351]";
  }
}

void criterion4(Outcome& o) {
  const auto rows = quotient_report(g_records);
  if (rows.size() != 5) return o.fail("expected 5 quotients");
  if (!(rows[0].quotient.is_point() && rows[0].quotient.contains(mpq_class(18)))) o.fail("n_2/n_1 != 18");
  const std::pair<const char*, const char*> bounds[] = {{"8.48", "8.49"}, {"7.59", "7.6"}, {"7.43", "7.44"},
                                                        {"7.39", "7.40"}};
  for (int i = 0; i < 4; ++i) {
    if (!strictly_inside(rows[i + 1].quotient, bounds[i].first, bounds[i].second)) {
      o.fail("n_" + std::to_string(i + 3) + "/n_" + std::to_string(i + 2) + " = " +
             rows[i + 1].quotient.to_string(8));
    }
  }
  if (o.ok) o.detail << "18, then 4 quotients strictly inside their open intervals";
}

void criterion5(Outcome& o) {
  const auto gaps = corollary_gap_check(g_records);
  if (gaps.size() + 1 != g_records.size()) o.fail("pair count mismatch");
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!gaps[i]) o.fail("3 n_" + std::to_string(i + 1) + " > n_" + std::to_string(i + 2));
  }
  if (o.ok) o.detail << gaps.size() << " pairs";
}

void criterion6(Outcome& o) {
  using atlas::FunctionId;
  const PrecisionPolicy policy;
  auto need = [&](bool ok, const char* what) {
    if (!ok) o.fail(what);
  };
  need(decide(policy, [](unsigned b) {
         return std::pair{atlas::eval(FunctionId::D, dec("3.92465", b)), at(1, b)};
       }).verdict == Comparison::Greater,
       "D(3.92465) > 1");
  need(decide(policy, [](unsigned b) {
         return std::pair{atlas::eval(FunctionId::D, dec("3.92466", b)), at(1, b)};
       }).verdict == Comparison::Less,
       "D(3.92466) < 1");
  need(verify::check_y_threshold().verdict == verify::Verdict::Pass, "shifted-quadratic threshold at y = 6.06520 / 6.06521");
  const BoundedReal half_exp = exp(dec("6.06521")) / 2;
  need(strictly_inside(half_exp, "215.30654", "215.30655"), "e^6.06521/2 bracket");
  if (o.ok) o.detail << "D crosses 1 in (3.92465, 3.92466); the shifted-quadratic inequality flips in (6.06520, 6.06521); e^6.06521/2 = "
                     << half_exp.to_string(12);
}

void criterion7(Outcome& o) {
  const auto r = verify::check_robbins(1, 10'000);
  if (r.verdict != verify::Verdict::Pass) o.fail(std::string("verdict ") + verify::to_string(r.verdict));
  if (o.ok) o.detail << r.claims << " strict comparisons";
}

void criterion8(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t n = 4; n <= 5000; ++n) {
    const CandidateBracket b = sigma_bracket(n);
    const auto s = sigma_exact(n).sigma;
    if (b.candidates.size() > 2) o.fail("more than two candidates at n=" + std::to_string(n));
    if (std::find(b.candidates.begin(), b.candidates.end(), s) == b.candidates.end()) {
      o.fail("sigma outside bracket at n=" + std::to_string(n));
    }
    ++checked;
  }
  std::int64_t prev = sigma_exact(1).sigma;
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const auto s = sigma_exact(n).sigma;
    if (s - prev != 0 && s - prev != 1) o.fail("step at n=" + std::to_string(n));
    prev = s;
  }
  for (const auto& r : g_records) {
    if (sigma_exact(r.n_i).sigma != r.index + 1) o.fail("sigma_{n_l} != l + 1 at l=" + std::to_string(r.index));
    if (sigma_exact(r.n_i + 1).sigma != r.index + 2) o.fail("no step after n_" + std::to_string(r.index));
  }
  for (int x = 1; x <= 100; ++x) {
    if (!atlas::delta(at(x)).overlaps(atlas::delta_factored(at(x)))) o.fail("product rule at x=" + std::to_string(x));
  }
  const verify::Grid grid = verify::geometric_grid(verify::Point::e_over_2(), verify::default_grid_top(), 16);
  for (const auto& p : grid) {
    const BoundedReal x = p.at(128);
    const BoundedReal l2x = ln(2 * x);
    if (!atlas::ln2x_qr_closed(x).overlaps(l2x * atlas::eval(atlas::FunctionId::QR, x)) ||
        !atlas::d_closed(x).overlaps(atlas::eval(atlas::FunctionId::D, x))) {
      o.fail("closed-form identity at x=" + p.label());
    }
  }
  const double h = kFiniteDifferenceStep;
  for (int y = 1; y <= 10; ++y) {
    auto f = [](atlas::FunctionId id, double v) { return atlas::eval(id, BoundedReal::from_double(v, 256)).mid(); };
    const double g_fd = (f(atlas::FunctionId::G, y + h) - f(atlas::FunctionId::G, y - h)) / (2 * h);
    const double h_fd = (f(atlas::FunctionId::H, y + h) - f(atlas::FunctionId::H, y - h)) / (2 * h);
    const double g = atlas::g_derivative(at(y, 256)).mid();
    const double hp = atlas::h_derivative(at(y, 256)).mid();
    if (std::abs(g_fd - g) > kRelativeDerivativeTolerance * std::abs(g)) o.fail("G' at y=" + std::to_string(y));
    if (std::abs(h_fd - hp) > kRelativeDerivativeTolerance * std::abs(hp)) {
      char gap[32];
      std::snprintf(gap, sizeof gap, "%.1e", std::abs(h_fd - hp) / std::abs(hp));
      o.fail("H' at y=" + std::to_string(y) + " (rel gap " + gap + ")");
    }
  }
  if (o.ok) {
    o.detail << checked << " brackets, 4999 steps, " << g_records.size() << " change points, " << grid.size()
             << " identity points, G'/H' at y=1..10";
  }
}

void criterion9(Outcome& o) {
  const verify::Point x = verify::limit_point();
  const auto lemma = verify::check_lemma1(verify::Grid{}, verify::Grid{}, x);
  const auto prop = verify::check_prop1_limits(x);
  for (const auto* r : {&lemma, &prop}) {
    for (std::size_t i = 0; i < r->witnesses.size(); ++i) {
      const auto& w = r->witnesses[i];
      if (w.label.find("[FAIL]") != std::string::npos && w.label.ends_with("lhs") && w.value) {
        o.fail(w.label.substr(0, w.label.find(" [FAIL]")) + " (value " + w.value->to_string(6) + ")");
      }
    }
    if (r->verdict != verify::Verdict::Pass && o.ok) o.fail(r->check_id + " " + verify::to_string(r->verdict));
  }
  if (o.ok) o.detail << "all five limits within 1e-3 at 2^30";
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(400);
  std::uniform_int_distribution<long> thousandths(1001, 400'000);
  for (int i = 0; i < 100; ++i) {
    mpq_class a(thousandths(rng), 1000);
    a.canonicalize();
    const NaResult r = n_a_of(a);
    // Brute force: smallest l with p^l <= l! q^l.
    mpz_class lhs = 1, rhs = 1;
    std::uint64_t l = 0;
    do {
      ++l;
      lhs *= a.get_num();
      rhs *= a.get_den() * l;
    } while (lhs > rhs);
    if (r.n_a != l) o.fail("a=" + a.get_str() + ": engine " + std::to_string(r.n_a) + ", brute " + std::to_string(l));
    if (r.r < 1 || r.r > 3) o.fail("a=" + a.get_str() + ": r=" + std::to_string(r.r));
  }
  if (o.ok) o.detail << "100 random bases agree, r in {1,2,3}";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<void(Outcome&)> body;
  };
  const Criterion criteria[] = {
      {1, "sigma table", 60, criterion1},
      {2, "sigma at 10^12", 5, criterion2},
      {3, "change points up to 200000", 300, criterion3},
      {4, "quotient brackets", 0, criterion4},
      {5, "3 n_i <= n_(i+1)", 0, criterion5},
      {6, "threshold certificates", 0, criterion6},
      {7, "Robbins sandwich on [1, 10^4]", 120, criterion7},
      {8, "property suite", 0, criterion8},
      {9, "limit proximity at 2^30", 0, criterion9},
      {10, "n_a cross-check", 0, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.id == 3) seconds = g_enumerate_seconds;
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::printf("CRITERION %2d %s  %s (%.2f s): %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
