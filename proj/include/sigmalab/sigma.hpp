#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sigmalab/bounded_real.hpp"
#include "sigmalab/ln_factorial.hpp"

namespace sigmalab {

/// sigma_n: the largest l with n + l - 1 <= T_n, certified.
struct SigmaCertificate {
  std::uint64_t n = 0;
  std::int64_t sigma = 0;
  unsigned bits_used = 0;
  LnFactorialMethod method = LnFactorialMethod::ExactSum;
};

/// Open interval (ln(2n) QL(n), ln(2n) QR(n) + 1) and the integers in it.
struct CandidateBracket {
  std::uint64_t n = 0;
  BoundedReal lower;
  BoundedReal upper;
  /// Integers l with lower.lo < l < upper.hi, ascending.
  std::vector<std::int64_t> candidates;
};

struct NaResult {
  BoundedReal a;
  std::uint64_t n_a = 0;
  std::uint64_t n_env = 0;  // n with n/e < a <= (n+1)/e
  std::int64_t sigma_env = 0;
  std::int64_t r = 0;       // n_a - n_env + sigma_{n_env}
  unsigned bits_used = 0;
};

/// T_n = e (n!)^(1/n) = exp(1 + ln(n!)/n).
BoundedReal t_value(std::uint64_t n, unsigned bits);
/// Escalates until the width is at most `max_width`.
BoundedReal t_value(std::uint64_t n, const PrecisionPolicy& policy, double max_width);

CandidateBracket sigma_bracket(std::uint64_t n, unsigned bits = 128);

/// Throws UndecidableError (carrying the unresolved candidates) when an
/// equality edge cannot be excluded at the policy's cap.
SigmaCertificate sigma_exact(std::uint64_t n, const PrecisionPolicy& policy = {});

/// n_a for an exact rational a > 1. Comparisons that stay undecided at the
/// precision cap fall back to exact integer arithmetic on a^l vs l!.
NaResult n_a_of(const mpq_class& a, const PrecisionPolicy& policy = {});
/// n_a for a base known only as an enclosure; a.lo must exceed 1.
NaResult n_a_of(const BoundedReal& a, const PrecisionPolicy& policy = {});

}  // namespace sigmalab
