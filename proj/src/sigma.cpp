#include "sigmalab/sigma.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "sigmalab/atlas.hpp"

namespace sigmalab {

BoundedReal t_value(std::uint64_t n, unsigned bits) {
  if (n == 0) throw DomainError("T_n needs n >= 1");
  return exp(1 + ln_factorial(n, bits) / static_cast<std::int64_t>(n));
}

BoundedReal t_value(std::uint64_t n, const PrecisionPolicy& policy, double max_width) {
  double achieved = 0;
  unsigned last = 0;
  for (unsigned bits : policy.levels()) {
    BoundedReal t = t_value(n, bits);
    achieved = t.width();
    last = bits;
    if (achieved <= max_width) return t;
  }
  throw UndecidableError("T_n width target not reached at n=" + std::to_string(n), last, achieved);
}

CandidateBracket sigma_bracket(std::uint64_t n, unsigned bits) {
  if (n < 2) throw DomainError("the sigma bracket needs n >= 2");
  const BoundedReal x = BoundedReal::integer(static_cast<std::int64_t>(n), bits);
  const BoundedReal l = ln(2 * x);
  BoundedReal lower = l * atlas::eval(atlas::FunctionId::QL, x);
  BoundedReal upper = l * atlas::eval(atlas::FunctionId::QR, x) + 1;
  std::vector<std::int64_t> candidates;
  const mpz_class first = lower.floor_lo() + 1;
  const mpz_class last = upper.ceil_hi() - 1;
  for (mpz_class c = first; c <= last; ++c) candidates.push_back(c.get_si());
  return CandidateBracket{n, std::move(lower), std::move(upper), std::move(candidates)};
}

namespace {

// Decides "n + l - 1 <= T_n" as ln(n + l - 1) <= 1 + ln(n!)/n, keeping the
// right-hand side per precision level.
class SigmaPredicate {
 public:
  SigmaPredicate(std::uint64_t n, const PrecisionPolicy& policy) : n_(n), policy_(policy) {}

  std::optional<bool> holds(std::int64_t l) {
    const auto d = decide(policy_, [&](unsigned bits) {
      const BoundedReal lhs = ln(BoundedReal::integer(static_cast<std::int64_t>(n_) + l - 1, bits));
      return std::pair{lhs, log_t(bits)};
    });
    bits_used_ = std::max(bits_used_, d.bits);
    if (d.verdict == Comparison::Undecided) return std::nullopt;
    return d.verdict == Comparison::Less;
  }

  unsigned bits_used() const { return bits_used_; }

 private:
  const BoundedReal& log_t(unsigned bits) {
    auto it = log_t_.find(bits);
    if (it == log_t_.end()) {
      BoundedReal v = 1 + ln_factorial(n_, bits) / static_cast<std::int64_t>(n_);
      it = log_t_.emplace(bits, std::move(v)).first;
    }
    return it->second;
  }

  std::uint64_t n_;
  PrecisionPolicy policy_;
  std::map<unsigned, BoundedReal> log_t_;
  unsigned bits_used_ = 0;
};

}  // namespace

SigmaCertificate sigma_exact(std::uint64_t n, const PrecisionPolicy& policy) {
  if (n == 0) throw DomainError("sigma_n needs n >= 1");
  policy.validate();
  std::vector<std::int64_t> candidates;
  std::int64_t l = 2;
  if (n >= 2) {
    candidates = sigma_bracket(n, policy.initial_bits).candidates;
    if (!candidates.empty()) l = candidates.back();
  }

  SigmaPredicate pred(n, policy);
  auto certified = [&](std::int64_t ell) {
    const auto v = pred.holds(ell);
    if (!v) {
      throw UndecidableError("cannot decide n + l - 1 <= T_n at n=" + std::to_string(n) +
                                 ", l=" + std::to_string(ell),
                             pred.bits_used(), 0.0, candidates.empty() ? std::vector{ell} : candidates);
    }
    return *v;
  };

  // n <= T_n always holds (l = 1), so the downward walk terminates.
  while (l > 1 && !certified(l)) --l;
  while (certified(l + 1)) ++l;

  return SigmaCertificate{n, l, pred.bits_used(), ln_factorial_method(n)};
}

namespace {

struct NaSearch {
  std::function<BoundedReal(unsigned)> a_at;
  std::optional<mpq_class> exact;
  PrecisionPolicy policy;
  unsigned bits_used = 0;

  // a^l <= l!
  bool holds(std::uint64_t l) {
    if (l == 0) return false;
    const auto d = decide(policy, [&](unsigned bits) {
      return std::pair{static_cast<std::int64_t>(l) * ln(a_at(bits)), ln_factorial(l, bits)};
    });
    bits_used = std::max(bits_used, d.bits);
    if (d.verdict != Comparison::Undecided) return d.verdict == Comparison::Less;
    if (exact) {
      mpz_class lhs, rhs, fact;
      mpz_pow_ui(lhs.get_mpz_t(), exact->get_num_mpz_t(), l);
      mpz_pow_ui(rhs.get_mpz_t(), exact->get_den_mpz_t(), l);
      mpz_fac_ui(fact.get_mpz_t(), l);
      return lhs <= fact * rhs;
    }
    throw UndecidableError("cannot decide a^l <= l! at l=" + std::to_string(l), d.bits, 0.0,
                           {static_cast<std::int64_t>(l)});
  }

  // n with n < a e <= n + 1
  std::uint64_t envelope_index() {
    for (unsigned bits : policy.levels()) {
      const BoundedReal ae = a_at(bits) * BoundedReal::e(bits);
      const mpz_class k = ae.floor_lo();
      bits_used = std::max(bits_used, bits);
      if (mpfr_cmp_z(ae.lo_ptr(), k.get_mpz_t()) > 0) {
        const mpz_class k1 = k + 1;
        if (mpfr_cmp_z(ae.hi_ptr(), k1.get_mpz_t()) < 0) return k.get_ui();
      }
    }
    const BoundedReal ae = a_at(policy.max_bits) * BoundedReal::e(policy.max_bits);
    throw UndecidableError("cannot bracket a*e between consecutive integers", policy.max_bits, ae.width());
  }

  NaResult run() {
    const std::uint64_t n_env = envelope_index();
    const SigmaCertificate s = sigma_exact(n_env, policy);
    bits_used = std::max(bits_used, s.bits_used);

    std::optional<std::uint64_t> n_a;
    const std::int64_t base = static_cast<std::int64_t>(n_env) - s.sigma;
    if (base + 1 >= 1 && !holds(static_cast<std::uint64_t>(base))) {
      for (std::int64_t k = 1; k <= 3 && !n_a; ++k) {
        if (holds(static_cast<std::uint64_t>(base + k))) n_a = static_cast<std::uint64_t>(base + k);
      }
    }
    if (!n_a) {
      constexpr std::uint64_t kScanLimit = 100'000'000;
      for (std::uint64_t l = 1; l <= kScanLimit; ++l) {
        if (holds(l)) {
          n_a = l;
          break;
        }
      }
      if (!n_a) throw UndecidableError("n_a scan limit reached", bits_used, 0.0);
    }
    const std::int64_t r = static_cast<std::int64_t>(*n_a) - static_cast<std::int64_t>(n_env) + s.sigma;
    return NaResult{a_at(policy.initial_bits), *n_a, n_env, s.sigma, r, bits_used};
  }
};

}  // namespace

NaResult n_a_of(const mpq_class& a, const PrecisionPolicy& policy) {
  policy.validate();
  if (a <= 1) throw DomainError("n_a needs a > 1");
  NaSearch search{[a](unsigned bits) { return BoundedReal::rational(a, bits); }, a, policy};
  return search.run();
}

NaResult n_a_of(const BoundedReal& a, const PrecisionPolicy& policy) {
  policy.validate();
  if (mpfr_cmp_ui(a.lo_ptr(), 1) <= 0) throw DomainError("n_a needs a.lo > 1");
  NaSearch search{[a](unsigned) { return a; }, std::nullopt, policy};
  return search.run();
}

}  // namespace sigmalab
