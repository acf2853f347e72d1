#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sigmalab/bounded_real.hpp"
#include "sigmalab/sigma.hpp"

namespace sigmalab {

/// n_i is the index just before sigma increments: sigma_{n_i + 1} = sigma_{n_i} + 1.
struct ChangePointRecord {
  std::int64_t index = 0;        // i
  std::uint64_t n_i = 0;
  std::int64_t sigma_at = 0;     // sigma_{n_i} = i + 1
  std::optional<std::uint64_t> gap;        // n_{i+1} - n_i
  std::optional<BoundedReal> quotient;     // n_{i+1} / n_i
  unsigned bits_used = 0;        // max precision needed for sigma at n_i and n_i + 1
};

/// Memo of certified sigma_n values. Concurrent inserts of the same fact
/// are idempotent.
class SigmaCache {
 public:
  explicit SigmaCache(PrecisionPolicy policy = {}) : policy_(policy) { policy_.validate(); }

  SigmaCertificate get(std::uint64_t n);
  void insert(const SigmaCertificate& cert);
  std::optional<SigmaCertificate> find(std::uint64_t n) const;
  std::size_t size() const;
  const PrecisionPolicy& policy() const { return policy_; }

 private:
  PrecisionPolicy policy_;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, SigmaCertificate> table_;
};

/// Locates change points by certified binary search over a shared cache.
class ChangePointFinder {
 public:
  explicit ChangePointFinder(PrecisionPolicy policy = {}) : cache_(policy) {}

  /// Minimal n with sigma_n = c (c >= 3).
  std::uint64_t first_n_with_sigma(std::int64_t c);

  /// All change points n_i <= max_n, in order, with gaps and quotients
  /// filled for consecutive pairs.
  std::vector<ChangePointRecord> enumerate(std::uint64_t max_n);

  /// (n, sigma_n) for every n in [from, to]; increments are located by
  /// binary search, so only O(steps * log(range)) sigma evaluations run.
  std::vector<std::pair<std::uint64_t, std::int64_t>> table(std::uint64_t from, std::uint64_t to);

  /// Seeds known change points (e.g. from a cache file) so enumerate() skips
  /// their searches. Records must carry index, n_i and sigma_at.
  void seed(const std::vector<ChangePointRecord>& records);

  SigmaCache& cache() { return cache_; }

 private:
  std::int64_t sigma(std::uint64_t n) { return cache_.get(n).sigma; }

  SigmaCache cache_;
  std::mutex known_mutex_;
  std::map<std::int64_t, std::uint64_t> first_n_;  // c -> first n with sigma_n = c
};

std::uint64_t first_n_with_sigma(std::int64_t c, const PrecisionPolicy& policy = {});
std::vector<ChangePointRecord> enumerate_changepoints(std::uint64_t max_n,
                                                      const PrecisionPolicy& policy = {});

/// Per consecutive pair: 3 n_i <= n_{i+1}.
std::vector<bool> corollary_gap_check(const std::vector<ChangePointRecord>& records);

struct QuotientRow {
  std::int64_t index = 0;  // i, for n_{i+1}/n_i
  BoundedReal quotient;
  BoundedReal minus_e2;    // quotient - e^2
};

/// Certified n_{i+1}/n_i for each consecutive pair, with the signed distance to e^2.
std::vector<QuotientRow> quotient_report(const std::vector<ChangePointRecord>& records,
                                         unsigned bits = 128);

/// True when every consecutive quotient is certified strictly smaller than
/// the previous one; nullopt if some comparison is undecided.
std::optional<bool> quotients_strictly_decreasing(const std::vector<QuotientRow>& rows);

struct SpacingBounds {
  std::uint64_t n_i = 0;
  Comparison left = Comparison::Undecided;   // F(3 n_i) vs ln(2 n_i) QL(n_i)
  Comparison right = Comparison::Undecided;  // ln(2 n_i) QL(n_i) vs F(n_{i+1} + 1)
  bool holds() const { return left == Comparison::Less && right == Comparison::Less; }
};

/// F(3 n_i) < ln(2 n_i) QL(n_i) < F(n_{i+1} + 1) for consecutive pairs with n_i >= 216.
std::vector<SpacingBounds> spacing_bounds_check(const std::vector<ChangePointRecord>& records,
                                                const PrecisionPolicy& policy = {});

}  // namespace sigmalab
