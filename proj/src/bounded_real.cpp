#include "sigmalab/bounded_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <utility>

namespace sigmalab {

void PrecisionPolicy::validate() const {
  if (initial_bits < 2) throw std::invalid_argument("initial_bits must be >= 2");
  if (initial_bits > max_bits) throw std::invalid_argument("initial_bits must not exceed max_bits");
  if (growth_factor < 2) throw std::invalid_argument("growth_factor must be >= 2");
  if (max_bits > MPFR_PREC_MAX) throw std::invalid_argument("max_bits too large");
}

std::vector<unsigned> PrecisionPolicy::levels() const {
  validate();
  std::vector<unsigned> out;
  for (unsigned long long b = initial_bits; b <= max_bits; b *= growth_factor) {
    out.push_back(static_cast<unsigned>(b));
  }
  return out;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LT";
    case Comparison::Greater: return "GT";
    case Comparison::Undecided: return "UNDECIDED";
  }
  return "?";
}

namespace detail {

Float::Float(unsigned bits) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits)); }

Float::Float(const Float& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  // Steal the limbs; leave `other` inert.
  std::memcpy(value_, other.value_, sizeof(mpfr_t));
  live_ = other.live_;
  other.live_ = false;
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    if (!live_) {
      mpfr_init2(value_, mpfr_get_prec(other.value_));
      live_ = true;
    } else {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  if (this != &other) {
    if (live_) mpfr_clear(value_);
    std::memcpy(value_, other.value_, sizeof(mpfr_t));
    live_ = other.live_;
    other.live_ = false;
  }
  return *this;
}

Float::~Float() {
  if (live_) mpfr_clear(value_);
}

}  // namespace detail

namespace {

using detail::Float;

unsigned common_bits(const BoundedReal& a, const BoundedReal& b) {
  return std::min(a.bits(), b.bits());
}

// Digits d_1 d_2 ... with value 0.d_1d_2... * 10^exp10.
std::string render_digits(const std::string& raw, mpfr_exp_t exp10) {
  std::string digits = raw;
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out = neg ? "-" : "";
  const long point = static_cast<long>(exp10);  // digits before the decimal point
  const long n = static_cast<long>(digits.size());
  if (point > 21 || point < -6) {
    out += digits[0];
    if (n > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(point - 1);
  } else if (point <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (point >= n) {
    out += digits;
    out.append(static_cast<std::size_t>(point - n), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(point));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(point));
  }
  return out;
}

std::string get_digits(mpfr_srcptr x, std::size_t ndigits, mpfr_rnd_t rnd) {
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, ndigits, x, rnd);
  std::string out = render_digits(s, exp10);
  mpfr_free_str(s);
  return out;
}

std::string shortest_roundtrip(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return "0";
  const mpfr_prec_t prec = mpfr_get_prec(x);
  const std::size_t max_digits = mpfr_get_str_ndigits(10, prec);
  Float back(static_cast<unsigned>(prec));
  for (std::size_t d = 1; d < max_digits; ++d) {
    std::string s = get_digits(x, d, MPFR_RNDN);
    mpfr_set_str(back.get(), s.c_str(), 10, MPFR_RNDN);
    if (mpfr_equal_p(back.get(), x)) return s;
  }
  return get_digits(x, max_digits, MPFR_RNDN);
}

}  // namespace

BoundedReal::BoundedReal(unsigned bits) : lo_(bits), hi_(bits), bits_(bits) {}

void BoundedReal::check_invariant() const {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || mpfr_inf_p(lo_.get()) ||
      mpfr_inf_p(hi_.get())) {
    throw DomainError("enclosure has a non-finite endpoint");
  }
  if (mpfr_greater_p(lo_.get(), hi_.get())) {
    throw std::logic_error("enclosure with lo > hi");
  }
}

BoundedReal BoundedReal::integer(std::int64_t v, unsigned bits) {
  BoundedReal r(bits);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::integer(const mpz_class& v, unsigned bits) {
  BoundedReal r(bits);
  mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::rational(const mpq_class& q, unsigned bits) {
  BoundedReal r(bits);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::decimal(std::string_view text, unsigned bits) {
  return rational(parse_decimal(text), bits);
}

BoundedReal BoundedReal::from_double(double v, unsigned bits) {
  if (!std::isfinite(v)) throw DomainError("non-finite double");
  BoundedReal r(bits);
  mpfr_set_d(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::hull(double lo, double hi, unsigned bits) {
  if (!(lo <= hi)) throw std::invalid_argument("hull requires lo <= hi");
  BoundedReal r(bits);
  mpfr_set_d(r.lo_.get(), lo, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), hi, MPFR_RNDU);
  r.check_invariant();
  return r;
}

BoundedReal BoundedReal::span(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(common_bits(a, b));
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::pi(unsigned bits) {
  BoundedReal r(bits);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::e(unsigned bits) { return exp(integer(1, bits)); }

BoundedReal BoundedReal::ln2(unsigned bits) {
  BoundedReal r(bits);
  mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
  return r;
}

double BoundedReal::lo() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double BoundedReal::hi() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double BoundedReal::width() const {
  Float w(bits_ + 2);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

double BoundedReal::mid() const {
  Float m(bits_ + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

std::string BoundedReal::lo_string() const { return shortest_roundtrip(lo_.get()); }
std::string BoundedReal::hi_string() const { return shortest_roundtrip(hi_.get()); }

std::string BoundedReal::to_string(int digits) const {
  const auto d = static_cast<std::size_t>(std::max(digits, 1));
  const std::string lo = mpfr_zero_p(lo_.get()) ? "0" : get_digits(lo_.get(), d, MPFR_RNDD);
  const std::string hi = mpfr_zero_p(hi_.get()) ? "0" : get_digits(hi_.get(), d, MPFR_RNDU);
  return "[" + lo + ", " + hi + "]";
}

bool BoundedReal::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool BoundedReal::contains(const BoundedReal& other) const {
  return mpfr_lessequal_p(lo_.get(), other.lo_.get()) &&
         mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool BoundedReal::overlaps(const BoundedReal& other) const {
  return mpfr_lessequal_p(lo_.get(), other.hi_.get()) &&
         mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool BoundedReal::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }

bool BoundedReal::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool BoundedReal::certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

mpz_class BoundedReal::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_.get(), MPFR_RNDD);
  return z;
}

mpz_class BoundedReal::ceil_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_.get(), MPFR_RNDU);
  return z;
}

std::optional<BoundedReal> BoundedReal::intersect(const BoundedReal& other) const {
  if (!overlaps(other)) return std::nullopt;
  BoundedReal r(common_bits(*this, other));
  mpfr_max(r.lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_min(r.hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::operator-() const {
  BoundedReal r(bits_);
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(common_bits(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(common_bits(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

// Combines the four endpoint pairs with `op`, keeping min of round-down
// results and max of round-up results.
template <class Op>
void endpoint_hull(mpfr_ptr lo, mpfr_ptr hi, const BoundedReal& a, const BoundedReal& b, Op op) {
  const unsigned bits = static_cast<unsigned>(mpfr_get_prec(lo));
  Float down(bits), up(bits);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_ptr(), a.hi_ptr()}) {
    for (mpfr_srcptr y : {b.lo_ptr(), b.hi_ptr()}) {
      op(down.get(), x, y, MPFR_RNDD);
      op(up.get(), x, y, MPFR_RNDU);
      if (first) {
        mpfr_set(lo, down.get(), MPFR_RNDD);
        mpfr_set(hi, up.get(), MPFR_RNDU);
        first = false;
      } else {
        if (mpfr_less_p(down.get(), lo)) mpfr_set(lo, down.get(), MPFR_RNDD);
        if (mpfr_greater_p(up.get(), hi)) mpfr_set(hi, up.get(), MPFR_RNDU);
      }
    }
  }
}

}  // namespace

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(common_bits(a, b));
  endpoint_hull(r.lo_.get(), r.hi_.get(), a, b, mpfr_mul);
  return r;
}

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0) {
    throw DomainError("division by an interval containing zero");
  }
  BoundedReal r(common_bits(a, b));
  endpoint_hull(r.lo_.get(), r.hi_.get(), a, b, mpfr_div);
  return r;
}

BoundedReal operator+(const BoundedReal& a, std::int64_t b) { return a + BoundedReal::integer(b, a.bits_); }
BoundedReal operator+(std::int64_t a, const BoundedReal& b) { return b + a; }
BoundedReal operator-(const BoundedReal& a, std::int64_t b) { return a - BoundedReal::integer(b, a.bits_); }
BoundedReal operator-(std::int64_t a, const BoundedReal& b) { return BoundedReal::integer(a, b.bits_) - b; }
BoundedReal operator*(const BoundedReal& a, std::int64_t b) { return a * BoundedReal::integer(b, a.bits_); }
BoundedReal operator*(std::int64_t a, const BoundedReal& b) { return b * a; }
BoundedReal operator/(const BoundedReal& a, std::int64_t b) { return a / BoundedReal::integer(b, a.bits_); }
BoundedReal operator/(std::int64_t a, const BoundedReal& b) { return BoundedReal::integer(a, b.bits_) / b; }

BoundedReal ln(const BoundedReal& x) {
  if (mpfr_sgn(x.lo_.get()) <= 0) throw DomainError("ln of an interval touching zero or negative values");
  BoundedReal r(x.bits_);
  mpfr_log(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal exp(const BoundedReal& x) {
  BoundedReal r(x.bits_);
  mpfr_exp(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  r.check_invariant();
  return r;
}

BoundedReal sqrt(const BoundedReal& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) throw DomainError("sqrt of an interval with negative values");
  BoundedReal r(x.bits_);
  mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

BoundedReal sqr(const BoundedReal& x) {
  BoundedReal r(x.bits_);
  if (mpfr_sgn(x.lo_.get()) >= 0) {
    mpfr_sqr(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
    mpfr_sqr(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_.get()) <= 0) {
    mpfr_sqr(r.lo_.get(), x.hi_.get(), MPFR_RNDD);
    mpfr_sqr(r.hi_.get(), x.lo_.get(), MPFR_RNDU);
  } else {
    detail::Float a(x.bits_), b(x.bits_);
    mpfr_sqr(a.get(), x.lo_.get(), MPFR_RNDU);
    mpfr_sqr(b.get(), x.hi_.get(), MPFR_RNDU);
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_max(r.hi_.get(), a.get(), b.get(), MPFR_RNDU);
  }
  return r;
}

BoundedReal pow(const BoundedReal& x, unsigned k) {
  BoundedReal result = BoundedReal::integer(1, x.bits_);
  BoundedReal base = x;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = sqr(base);
  }
  return result;
}

BoundedReal max(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(common_bits(a, b));
  mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Comparison compare_certified(const BoundedReal& a, const BoundedReal& b) {
  if (mpfr_less_p(a.hi_ptr(), b.lo_ptr())) return Comparison::Less;
  if (mpfr_greater_p(a.lo_ptr(), b.hi_ptr())) return Comparison::Greater;
  return Comparison::Undecided;
}

BoundedReal interval_arith(ArithKind kind, const BoundedReal& a, const BoundedReal& b) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
    case ArithKind::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

BoundedReal enclose_elementary(ElementaryKind kind, const BoundedReal& x) {
  return kind == ElementaryKind::Ln ? ln(x) : exp(x);
}

mpq_class parse_decimal(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&] { return std::invalid_argument("not a decimal number: '" + std::string(text) + "'"); };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    ++i;
    const std::string rest(text.substr(i));
    if (rest.empty()) throw fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != rest.size() || std::labs(exponent) > 100000) throw fail();
  }
  mpz_class num(digits, 10);
  if (neg) num = -num;
  const long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class q = scale >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  q.canonicalize();
  return q;
}

}  // namespace sigmalab
