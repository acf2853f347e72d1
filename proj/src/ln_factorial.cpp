#include "sigmalab/ln_factorial.hpp"

#include <array>
#include <string>

namespace sigmalab {

const char* to_string(LnFactorialMethod m) {
  return m == LnFactorialMethod::ExactSum ? "exact-sum" : "series";
}

LnFactorialMethod ln_factorial_method(std::uint64_t n) {
  return n <= kSeriesSwitch ? LnFactorialMethod::ExactSum : LnFactorialMethod::Series;
}

const mpq_class& bernoulli_even(int k) {
  static const std::array<mpq_class, 9> table = {
      mpq_class(1, 6),       mpq_class(-1, 30),  mpq_class(1, 42),
      mpq_class(-1, 30),     mpq_class(5, 66),   mpq_class(-691, 2730),
      mpq_class(7, 6),       mpq_class(-3617, 510), mpq_class(43867, 798),
  };
  if (k < 1 || k > static_cast<int>(table.size())) {
    throw std::out_of_range("Bernoulli index out of range");
  }
  return table[static_cast<std::size_t>(k - 1)];
}

namespace {

// (n + 1/2) ln n - n + ln(2 pi)/2
BoundedReal stirling_base(std::uint64_t n, unsigned bits) {
  const BoundedReal x = BoundedReal::integer(static_cast<std::int64_t>(n), bits);
  const BoundedReal half = BoundedReal::rational(mpq_class(1, 2), bits);
  return (x + half) * ln(x) - x + half * ln(2 * BoundedReal::pi(bits));
}

BoundedReal checked_against_robbins(std::uint64_t n, const BoundedReal& value) {
  const auto both = value.intersect(robbins_ln_factorial(n, value.bits()));
  if (!both) {
    throw std::logic_error("ln(n!) enclosure escapes the Robbins bounds at n=" + std::to_string(n));
  }
  return *both;
}

}  // namespace

BoundedReal robbins_ln_factorial(std::uint64_t n, unsigned bits) {
  if (n == 0) throw DomainError("robbins bounds need n >= 1");
  const auto m = static_cast<std::int64_t>(n);
  const BoundedReal base = stirling_base(n, bits);
  const BoundedReal lower = base + BoundedReal::rational(mpq_class(1, 12 * mpz_class(m) + 1), bits);
  const BoundedReal upper = base + BoundedReal::rational(mpq_class(1, 12 * mpz_class(m)), bits);
  return BoundedReal::span(lower, upper);
}

BoundedReal ln_factorial_exact(std::uint64_t n, unsigned bits) {
  if (n == 0) throw DomainError("ln_factorial needs n >= 1");
  if (n > kExactLimit) throw DomainError("ln_factorial_exact needs n <= " + std::to_string(kExactLimit));
  if (n <= 1) return BoundedReal::integer(0, bits);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return ln(BoundedReal::integer(fact, bits));
}

BoundedReal ln_factorial_series(std::uint64_t n, unsigned bits, int terms) {
  if (n == 0) throw DomainError("ln_factorial needs n >= 1");
  if (terms < 1 || terms > kSeriesTerms) throw std::invalid_argument("series terms must be in [1, 8]");
  const BoundedReal x = BoundedReal::integer(static_cast<std::int64_t>(n), bits);
  const BoundedReal x2 = sqr(x);
  BoundedReal sum = stirling_base(n, bits);
  BoundedReal power = x;  // x^(2k-1)
  for (int k = 1; k <= terms; ++k) {
    const mpq_class coef = bernoulli_even(k) / (2 * k * (2 * k - 1));
    sum = sum + BoundedReal::rational(coef, bits) / power;
    power = power * x2;
  }
  const int k = terms + 1;
  const mpq_class omitted = abs(bernoulli_even(k)) / (2 * k * (2 * k - 1));
  const BoundedReal tail = BoundedReal::rational(omitted, bits) / power;
  return sum + BoundedReal::span(-tail, tail);
}

BoundedReal ln_factorial(std::uint64_t n, unsigned bits) {
  const BoundedReal raw = ln_factorial_method(n) == LnFactorialMethod::ExactSum
                              ? ln_factorial_exact(n, bits)
                              : ln_factorial_series(n, bits);
  return checked_against_robbins(n, raw);
}

BoundedReal ln_factorial(std::uint64_t n, const PrecisionPolicy& policy, double max_width) {
  double achieved = 0;
  unsigned last = 0;
  for (unsigned bits : policy.levels()) {
    BoundedReal v = ln_factorial(n, bits);
    achieved = v.width();
    last = bits;
    if (achieved <= max_width) return v;
  }
  throw UndecidableError("ln(n!) width target not reached at n=" + std::to_string(n), last, achieved);
}

}  // namespace sigmalab
