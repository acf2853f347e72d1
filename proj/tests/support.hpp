#pragma once

#include <string_view>

#include "sigmalab/bounded_real.hpp"

namespace sigmalab::testing {

// True when `x` overlaps [ref - tol, ref + tol], with `ref` an exact decimal.
// Reference values are 30-digit truncations, so `tol` absorbs the last digit.
inline bool near(const BoundedReal& x, std::string_view ref, std::string_view tol = "1e-25") {
  const mpq_class q = parse_decimal(ref);
  const mpq_class t = parse_decimal(tol);
  const BoundedReal window = BoundedReal::span(BoundedReal::rational(q - t, x.bits()),
                                               BoundedReal::rational(q + t, x.bits()));
  return x.overlaps(window);
}

inline BoundedReal num(std::int64_t v, unsigned bits = 128) { return BoundedReal::integer(v, bits); }
inline BoundedReal dec(std::string_view text, unsigned bits = 128) { return BoundedReal::decimal(text, bits); }

}  // namespace sigmalab::testing
