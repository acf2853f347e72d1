#pragma once

#include <string_view>
#include <utility>

#include "sigmalab/bounded_real.hpp"

namespace sigmalab::atlas {

// L, R, P, T and the derived functions built from them. scriptL and
// scriptR are L(x)P(2x) and R(x)P(2x); p is P(2x).
enum class FunctionId { L, R, P, T, p, scriptL, scriptR, QL, QR, D, F, G, H, GN, B0, C0 };

std::string_view name(FunctionId f);
/// Inverse of name(); throws std::invalid_argument for unknown names.
FunctionId function_from_name(std::string_view text);

/// ln(pi)/2.
BoundedReal alpha(unsigned bits);
BoundedReal ln_pi(unsigned bits);

/// Certified value of `f` at every point of `x`, at x.bits() precision.
/// Throws DomainError outside the function's domain.
BoundedReal eval(FunctionId f, const BoundedReal& x);

/// (F(x) - 1) * x.
BoundedReal a_transform(FunctionId f, const BoundedReal& x);

/// a_scriptR(x) - a_scriptL(x).
BoundedReal delta(const BoundedReal& x);
/// Same number through (a_R(x) - a_L(x)) * P(2x).
BoundedReal delta_factored(const BoundedReal& x);

struct ShiftParams {
  BoundedReal a_shift;
  BoundedReal A;  // exp(a_shift)

  static ShiftParams from_shift(const BoundedReal& a_shift);
};

struct ShiftedQuadratics {
  BoundedReal B;
  BoundedReal C;
};

/// B(a, y) = y^2 + (2 + a + ln(pi)(1 - A)) y + a(2 + ln pi),
/// C(a, y) = y (y + a) ln(pi).
ShiftedQuadratics eval_shifted(const ShiftParams& shift, const BoundedReal& y);

/// GN'(y) = e^y - 2y - 2.
BoundedReal gn_derivative(const BoundedReal& y);
/// G'(y) = e^y GN(y) / (2 (e^y - y)^2).
BoundedReal g_derivative(const BoundedReal& y);
/// H'(y) = (e^y - y + 1) / (2 e^y).
BoundedReal h_derivative(const BoundedReal& y);

// Closed forms of the bracket ends, used to cross-check eval().
/// 1 + (1 + x) ln(2x) / (2x - ln(2x)), equal to ln(2x) QR(x).
BoundedReal ln2x_qr_closed(const BoundedReal& x);
/// alpha + ln(2x) (x + alpha) / (2x), equal to ln(2x) QL(x).
BoundedReal ln2x_ql_closed(const BoundedReal& x);
/// (1 - alpha) 2x/(2x - ln 2x) + (x + alpha)/(2x - ln 2x) * (ln(2x)/sqrt(2x))^2, equal to D(x).
BoundedReal d_closed(const BoundedReal& x);

}  // namespace sigmalab::atlas
