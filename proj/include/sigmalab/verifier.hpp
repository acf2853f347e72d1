#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigmalab/bounded_real.hpp"
#include "sigmalab/changepoints.hpp"

namespace sigmalab::verify {

enum class Verdict { Pass, Fail, Undecided };

const char* to_string(Verdict v);

struct Witness {
  std::string label;
  std::optional<BoundedReal> value;  // enclosure, when the witness is numeric
  std::string text;                  // free-form otherwise
};

/// Outcome of one named claim-set. FAIL only with a certified
/// counter-inequality; UNDECIDED only at the precision cap.
struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::size_t claims = 0;  // number of individual certified comparisons
};

/// An evaluation point that can be enclosed at any precision: an exact
/// rational (decimal literals, dyadic grid points) or the constants e/2,
/// e, e^2/2.
class Point {
 public:
  static Point rational(const mpq_class& q, std::string label = {});
  static Point decimal(std::string_view text);
  static Point dyadic(double v);
  static Point e_over_2();
  static Point e();
  static Point e_squared_over_2();

  BoundedReal at(unsigned bits) const;
  const std::string& label() const { return label_; }

 private:
  enum class Kind { Rational, EHalf, E, ESquaredHalf };
  Point(Kind kind, mpq_class value, std::string label)
      : kind_(kind), value_(std::move(value)), label_(std::move(label)) {}

  Kind kind_;
  mpq_class value_;
  std::string label_;
};

using Grid = std::vector<Point>;

/// `per_decade` geometric steps from `from` to `to` (both included). Interior
/// points are dyadic doubles, used as exact values.
Grid geometric_grid(const Point& from, const Point& to, int per_decade = 64);
/// 1, 2, 4, ..., 2^max_exp.
Grid powers_of_two(int max_exp);

/// Upper end of the monotonicity grids.
Point default_grid_top();
/// Sample point for limit-proximity checks.
Point limit_point();
inline constexpr double kLimitTolerance = 1e-3;

CheckReport check_robbins(std::uint64_t n_lo, std::uint64_t n_hi, const PrecisionPolicy& policy = {});

/// (a) ordering on `order_grid`, (b) strict decrease on consecutive points of
/// `decrease_grid`, (c)/(d) limit proximity at `limit_at`.
CheckReport check_lemma1(const Grid& order_grid, const Grid& decrease_grid, const Point& limit_at,
                         const PrecisionPolicy& policy = {});
CheckReport check_lemma1(const PrecisionPolicy& policy = {});

/// Limit proximity of QL - 1/2, QR - 1/2 and D - (1 - alpha) at `limit_at`.
CheckReport check_prop1_limits(const Point& limit_at, const PrecisionPolicy& policy = {});

CheckReport check_cor1_thresholds(const PrecisionPolicy& policy = {});
CheckReport check_gn_and_F(const PrecisionPolicy& policy = {});
CheckReport check_y_threshold(const PrecisionPolicy& policy = {});

CheckReport check_f3x(const Grid& grid, const PrecisionPolicy& policy = {});
CheckReport check_f3x(const PrecisionPolicy& policy = {});

CheckReport check_eqffff(const std::vector<ChangePointRecord>& records, const PrecisionPolicy& policy = {});

CheckReport check_external_facts(const Grid& grid, const PrecisionPolicy& policy = {});
CheckReport check_external_facts(const PrecisionPolicy& policy = {});

CheckReport check_sn(std::uint64_t n_lo, std::uint64_t n_hi, const PrecisionPolicy& policy = {});

inline constexpr std::string_view kSuites[] = {"all",       "robbins", "lemma1", "prop1",    "cor1", "gn",
                                               "threshold", "f3x",     "ffff",   "external", "sn"};

struct SuiteOptions {
  std::uint64_t robbins_hi = 10'000;
  std::uint64_t sn_hi = 10'000;
  std::uint64_t changepoint_max_n = 200'000;
};

/// Runs one named suite (or "all"). `finder` supplies change points for
/// "ffff"; a private one is used when null.
std::vector<CheckReport> run_suite(std::string_view suite, const PrecisionPolicy& policy = {},
                                   ChangePointFinder* finder = nullptr, const SuiteOptions& options = {});

/// FAIL if any report fails, else UNDECIDED if any is undecided, else PASS.
Verdict overall(const std::vector<CheckReport>& reports);

}  // namespace sigmalab::verify
