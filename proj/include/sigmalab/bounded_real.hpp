#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigmalab {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (log of a non-positive interval, division by an interval
/// containing zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a certified decision could not be reached before the
/// precision cap. Carries what was achieved so callers can report it.
class UndecidableError : public std::runtime_error {
 public:
  UndecidableError(const std::string& what, unsigned bits, double achieved_width,
                   std::vector<std::int64_t> candidates = {})
      : std::runtime_error(what),
        bits_(bits),
        achieved_width_(achieved_width),
        candidates_(std::move(candidates)) {}

  unsigned bits() const noexcept { return bits_; }
  double achieved_width() const noexcept { return achieved_width_; }
  const std::vector<std::int64_t>& candidates() const noexcept { return candidates_; }

 private:
  unsigned bits_;
  double achieved_width_;
  std::vector<std::int64_t> candidates_;
};

struct PrecisionPolicy {
  unsigned initial_bits = 128;
  unsigned max_bits = 8192;
  unsigned growth_factor = 2;

  /// Throws std::invalid_argument unless 2 <= initial <= max and growth >= 2.
  void validate() const;

  /// initial, initial*g, initial*g^2, ... (all <= max_bits).
  std::vector<unsigned> levels() const;
};

enum class Comparison { Less, Greater, Undecided };

const char* to_string(Comparison c);

namespace detail {

// Owning RAII handle around mpfr_t.
class Float {
 public:
  explicit Float(unsigned bits);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
  bool live_ = true;
};

}  // namespace detail

/// Certified enclosure [lo, hi] of a real number. Endpoints are binary
/// floating-point numbers of `bits` precision; every operation rounds the
/// lower endpoint down and the upper endpoint up, so the exact value of the
/// expression that produced an enclosure always lies inside it.
class BoundedReal {
 public:
  static BoundedReal integer(std::int64_t v, unsigned bits);
  static BoundedReal integer(const mpz_class& v, unsigned bits);
  static BoundedReal rational(const mpq_class& q, unsigned bits);
  /// Exact decimal such as "3.92465" or "-1e-3", parsed as a rational first.
  static BoundedReal decimal(std::string_view text, unsigned bits);
  /// A double is a dyadic rational; enclosed exactly when bits >= 53.
  static BoundedReal from_double(double v, unsigned bits);
  /// [lo, hi] with both endpoints given as doubles (lo <= hi required).
  static BoundedReal hull(double lo, double hi, unsigned bits);
  /// Smallest enclosure containing both a and b.
  static BoundedReal span(const BoundedReal& a, const BoundedReal& b);

  static BoundedReal pi(unsigned bits);
  static BoundedReal e(unsigned bits);
  static BoundedReal ln2(unsigned bits);

  unsigned bits() const { return bits_; }

  /// Endpoints rounded outward to double.
  double lo() const;
  double hi() const;
  /// Upper bound on hi - lo.
  double width() const;
  double mid() const;

  /// Shortest decimal strings that read back (round-to-nearest at bits())
  /// to exactly the stored endpoints.
  std::string lo_string() const;
  std::string hi_string() const;
  /// "[lo, hi]" with the given significant digits, rounded outward.
  std::string to_string(int digits = 20) const;

  bool contains(const mpq_class& q) const;
  bool contains(const BoundedReal& other) const;
  bool overlaps(const BoundedReal& other) const;
  bool is_point() const;
  /// Signs certified from the endpoints.
  bool certainly_positive() const;
  bool certainly_negative() const;

  /// Floor/ceil of the endpoints (lo rounded down, hi rounded up).
  mpz_class floor_lo() const;
  mpz_class ceil_hi() const;

  std::optional<BoundedReal> intersect(const BoundedReal& other) const;

  BoundedReal operator-() const;

  friend BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
  friend BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);

  friend BoundedReal operator+(const BoundedReal& a, std::int64_t b);
  friend BoundedReal operator+(std::int64_t a, const BoundedReal& b);
  friend BoundedReal operator-(const BoundedReal& a, std::int64_t b);
  friend BoundedReal operator-(std::int64_t a, const BoundedReal& b);
  friend BoundedReal operator*(const BoundedReal& a, std::int64_t b);
  friend BoundedReal operator*(std::int64_t a, const BoundedReal& b);
  friend BoundedReal operator/(const BoundedReal& a, std::int64_t b);
  friend BoundedReal operator/(std::int64_t a, const BoundedReal& b);

  friend BoundedReal ln(const BoundedReal& x);
  friend BoundedReal exp(const BoundedReal& x);
  friend BoundedReal sqrt(const BoundedReal& x);
  friend BoundedReal sqr(const BoundedReal& x);
  friend BoundedReal pow(const BoundedReal& x, unsigned k);
  friend BoundedReal max(const BoundedReal& a, const BoundedReal& b);

  mpfr_srcptr lo_ptr() const { return lo_.get(); }
  mpfr_srcptr hi_ptr() const { return hi_.get(); }

 private:
  explicit BoundedReal(unsigned bits);
  void check_invariant() const;

  detail::Float lo_;
  detail::Float hi_;
  unsigned bits_;
};

/// Less only if a.hi < b.lo, Greater only if a.lo > b.hi.
Comparison compare_certified(const BoundedReal& a, const BoundedReal& b);

enum class ArithKind { Add, Sub, Mul, Div };
BoundedReal interval_arith(ArithKind kind, const BoundedReal& a, const BoundedReal& b);

enum class ElementaryKind { Ln, Exp };
BoundedReal enclose_elementary(ElementaryKind kind, const BoundedReal& x);

/// Exact rational from a decimal literal ("12", "-0.5", "1.25e3").
mpq_class parse_decimal(std::string_view text);

struct Decision {
  Comparison verdict = Comparison::Undecided;
  unsigned bits = 0;
};

/// Re-evaluates `pair_at(bits)` (which returns {lhs, rhs}) at each level of
/// the policy until the comparison is decided or the cap is reached.
template <class PairAt>
Decision decide(const PrecisionPolicy& policy, PairAt&& pair_at) {
  Decision d;
  for (unsigned bits : policy.levels()) {
    const auto [lhs, rhs] = pair_at(bits);
    d.bits = bits;
    d.verdict = compare_certified(lhs, rhs);
    if (d.verdict != Comparison::Undecided) break;
  }
  return d;
}

}  // namespace sigmalab
