#include "sigmalab/atlas.hpp"

#include <array>
#include <string>

namespace sigmalab::atlas {

namespace {

constexpr std::array<std::pair<FunctionId, std::string_view>, 16> kNames = {{
    {FunctionId::L, "L"},
    {FunctionId::R, "R"},
    {FunctionId::P, "P"},
    {FunctionId::T, "T"},
    {FunctionId::p, "p"},
    {FunctionId::scriptL, "scriptL"},
    {FunctionId::scriptR, "scriptR"},
    {FunctionId::QL, "QL"},
    {FunctionId::QR, "QR"},
    {FunctionId::D, "D"},
    {FunctionId::F, "F"},
    {FunctionId::G, "G"},
    {FunctionId::H, "H"},
    {FunctionId::GN, "GN"},
    {FunctionId::B0, "B0"},
    {FunctionId::C0, "C0"},
}};

BoundedReal half(unsigned bits) { return BoundedReal::rational(mpq_class(1, 2), bits); }

// x must not lie certainly below `bound` (endpoints compared at x's precision).
void require_at_least(const BoundedReal& x, const BoundedReal& bound, FunctionId f,
                      std::string_view bound_text) {
  if (mpfr_less_p(x.lo_ptr(), bound.lo_ptr())) {
    throw DomainError(std::string(name(f)) + " is defined for x >= " + std::string(bound_text));
  }
}

void require_positive(const BoundedReal& x, FunctionId f) {
  if (!x.certainly_positive()) throw DomainError(std::string(name(f)) + " needs x > 0");
}

void require_nonnegative(const BoundedReal& x, FunctionId f) {
  if (mpfr_sgn(x.lo_ptr()) < 0) throw DomainError(std::string(name(f)) + " needs y >= 0");
}

// pi^(1/(2x)) * exp(extra)
BoundedReal pi_root_times_exp(const BoundedReal& x, const BoundedReal& extra) {
  return exp(ln_pi(x.bits()) / (2 * x) + extra);
}

BoundedReal big_p(const BoundedReal& x) { return exp(ln(x) / x); }

BoundedReal ln2x(const BoundedReal& x) { return ln(2 * x); }

BoundedReal ql(const BoundedReal& x) {
  const BoundedReal a = alpha(x.bits());
  return a / ln2x(x) + half(x.bits()) * (1 + a / x);
}

BoundedReal qr(const BoundedReal& x) {
  const BoundedReal l = ln2x(x);
  return (2 / l + 1) * (x / (2 * x - l));
}

BoundedReal e_half(unsigned bits) { return BoundedReal::e(bits) / 2; }

}  // namespace

std::string_view name(FunctionId f) {
  for (const auto& [id, text] : kNames) {
    if (id == f) return text;
  }
  return "?";
}

FunctionId function_from_name(std::string_view text) {
  for (const auto& [id, n] : kNames) {
    if (n == text) return id;
  }
  throw std::invalid_argument("unknown function '" + std::string(text) + "'");
}

BoundedReal ln_pi(unsigned bits) { return ln(BoundedReal::pi(bits)); }

BoundedReal alpha(unsigned bits) { return ln_pi(bits) / 2; }

BoundedReal eval(FunctionId f, const BoundedReal& x) {
  const unsigned bits = x.bits();
  switch (f) {
    case FunctionId::L:
      require_positive(x, f);
      return pi_root_times_exp(x, 1 / ((12 * x + 1) * x));
    case FunctionId::R:
      require_positive(x, f);
      return pi_root_times_exp(x, 1 / (12 * sqr(x)));
    case FunctionId::P:
      require_positive(x, f);
      return big_p(x);
    case FunctionId::T:
      require_positive(x, f);
      return x * big_p(x);
    case FunctionId::p:
      require_positive(x, f);
      return big_p(2 * x);
    case FunctionId::scriptL:
      return eval(FunctionId::L, x) * eval(FunctionId::p, x);
    case FunctionId::scriptR:
      return eval(FunctionId::R, x) * eval(FunctionId::p, x);
    case FunctionId::QL:
      require_at_least(x, e_half(bits), f, "e/2");
      return ql(x);
    case FunctionId::QR:
      require_at_least(x, e_half(bits), f, "e/2");
      return qr(x);
    case FunctionId::D: {
      require_at_least(x, e_half(bits), f, "e/2");
      const BoundedReal l = ln2x(x);
      return l * qr(x) - l * ql(x);
    }
    case FunctionId::F: {
      if (mpfr_cmp_d(x.lo_ptr(), 0.5) <= 0) throw DomainError("F needs x > 1/2");
      const BoundedReal l = ln2x(x);
      return (1 + x) * (l / (2 * x - l));
    }
    case FunctionId::G: {
      require_nonnegative(x, f);
      const BoundedReal ey = exp(x);
      return (1 + ey / 2) * (x / (ey - x));
    }
    case FunctionId::H: {
      require_nonnegative(x, f);
      return alpha(bits) * (1 + x / exp(x)) + x / 2;
    }
    case FunctionId::GN:
      require_nonnegative(x, f);
      return exp(x) - (sqr(x) + 2 * x - 2);
    case FunctionId::B0: {
      require_nonnegative(x, f);
      const BoundedReal lp = ln_pi(bits);
      return sqr(x) + (2 + lp) * x + lp * (2 + lp);
    }
    case FunctionId::C0: {
      require_nonnegative(x, f);
      const BoundedReal lp = ln_pi(bits);
      return x * (x + lp) * lp;
    }
  }
  throw std::invalid_argument("unknown function id");
}

BoundedReal a_transform(FunctionId f, const BoundedReal& x) { return (eval(f, x) - 1) * x; }

BoundedReal delta(const BoundedReal& x) {
  return a_transform(FunctionId::scriptR, x) - a_transform(FunctionId::scriptL, x);
}

BoundedReal delta_factored(const BoundedReal& x) {
  return (a_transform(FunctionId::R, x) - a_transform(FunctionId::L, x)) * eval(FunctionId::p, x);
}

ShiftParams ShiftParams::from_shift(const BoundedReal& a_shift) {
  return ShiftParams{a_shift, exp(a_shift)};
}

ShiftedQuadratics eval_shifted(const ShiftParams& shift, const BoundedReal& y) {
  if (mpfr_sgn(y.lo_ptr()) < 0) throw DomainError("B(a, y) and C(a, y) need y >= 0");
  if (mpfr_sgn(shift.a_shift.lo_ptr()) < 0) throw DomainError("B(a, y) and C(a, y) need a >= 0");
  const BoundedReal lp = ln_pi(y.bits());
  const BoundedReal& a = shift.a_shift;
  BoundedReal b = sqr(y) + (2 + a + lp * (1 - shift.A)) * y + a * (2 + lp);
  BoundedReal c = y * (y + a) * lp;
  return {std::move(b), std::move(c)};
}

BoundedReal gn_derivative(const BoundedReal& y) { return exp(y) - 2 * y - 2; }

BoundedReal g_derivative(const BoundedReal& y) {
  const BoundedReal ey = exp(y);
  return ey * eval(FunctionId::GN, y) / (2 * sqr(ey - y));
}

BoundedReal h_derivative(const BoundedReal& y) {
  const BoundedReal ey = exp(y);
  return (ey - y + 1) / (2 * ey);
}

BoundedReal ln2x_qr_closed(const BoundedReal& x) {
  const BoundedReal l = ln2x(x);
  return 1 + (1 + x) * l / (2 * x - l);
}

BoundedReal ln2x_ql_closed(const BoundedReal& x) {
  const BoundedReal a = alpha(x.bits());
  return a + ln2x(x) * ((x + a) / (2 * x));
}

BoundedReal d_closed(const BoundedReal& x) {
  const BoundedReal a = alpha(x.bits());
  const BoundedReal l = ln2x(x);
  const BoundedReal denom = 2 * x - l;
  return (1 - a) * (2 * x / denom) + ((x + a) / denom) * sqr(l / sqrt(2 * x));
}

}  // namespace sigmalab::atlas
