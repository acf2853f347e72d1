#pragma once

#include <cstdint>

#include "sigmalab/bounded_real.hpp"

namespace sigmalab {

enum class LnFactorialMethod { ExactSum, Series };

const char* to_string(LnFactorialMethod m);

/// Largest n evaluated from the exact integer n!; above it the
/// Stirling-De Moivre series is used.
inline constexpr std::uint64_t kSeriesSwitch = 1'000'000;
/// Number of Bernoulli correction terms in the series path.
inline constexpr int kSeriesTerms = 8;

LnFactorialMethod ln_factorial_method(std::uint64_t n);

/// Enclosure of ln(n!) at the given working precision, routed by n.
/// The result is also intersected with the Robbins bounds
///   (n+1/2)ln n - n + ln(2 pi)/2 + 1/(12n+1) < ln n! < ... + 1/(12n),
/// and a disjoint intersection is reported as a logic error.
BoundedReal ln_factorial(std::uint64_t n, unsigned bits);

/// Escalates through `policy` until the width is at most `max_width`;
/// throws UndecidableError carrying the achieved width otherwise.
BoundedReal ln_factorial(std::uint64_t n, const PrecisionPolicy& policy, double max_width);

/// Largest n accepted by ln_factorial_exact (n! has about 1.5e8 bits there).
inline constexpr std::uint64_t kExactLimit = 10'000'000;

/// ln(n!) from the exact integer n!, enclosed by one outward-rounded log.
BoundedReal ln_factorial_exact(std::uint64_t n, unsigned bits);

/// Truncated Stirling series with `terms` Bernoulli corrections
/// (1 <= terms <= 8); the truncation error is enclosed by +-|first omitted term|.
BoundedReal ln_factorial_series(std::uint64_t n, unsigned bits, int terms = kSeriesTerms);

/// Robbins bounds on ln(n!) as a single enclosure.
BoundedReal robbins_ln_factorial(std::uint64_t n, unsigned bits);

/// B_{2k} for k = 1..9 as exact rationals.
const mpq_class& bernoulli_even(int k);

}  // namespace sigmalab
