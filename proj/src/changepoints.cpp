#include "sigmalab/changepoints.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sigmalab/atlas.hpp"

namespace sigmalab {

SigmaCertificate SigmaCache::get(std::uint64_t n) {
  if (auto hit = find(n)) return *hit;
  SigmaCertificate cert = sigma_exact(n, policy_);
  insert(cert);
  return cert;
}

void SigmaCache::insert(const SigmaCertificate& cert) {
  std::lock_guard lock(mutex_);
  table_.emplace(cert.n, cert);
}

std::optional<SigmaCertificate> SigmaCache::find(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  const auto it = table_.find(n);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::size_t SigmaCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

std::uint64_t ChangePointFinder::first_n_with_sigma(std::int64_t c) {
  if (c < 3) throw std::invalid_argument("first_n_with_sigma needs c >= 3");
  {
    std::lock_guard lock(known_mutex_);
    if (auto it = first_n_.find(c); it != first_n_.end()) return it->second;
  }

  // ln(2n) QL(n) ~ c with QL -> 1/2 suggests n ~ e^(2c) / (2 pi).
  constexpr double kMaxN = 4.0e18;
  const double seed = std::exp(2.0 * static_cast<double>(c)) / (2.0 * std::numbers::pi);
  if (!(seed < kMaxN / 3)) throw std::out_of_range("sigma target too large for 64-bit n");
  std::uint64_t hi = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(seed));
  std::uint64_t lo = 0;
  while (sigma(hi) < c) {
    lo = hi;
    hi *= 3;
  }
  if (lo == 0) {
    lo = hi;
    while (sigma(lo) >= c) {
      hi = lo;
      lo = std::max<std::uint64_t>(1, lo / 3);
    }
  }
  // sigma(lo) < c <= sigma(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (sigma(mid) >= c) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  std::lock_guard lock(known_mutex_);
  first_n_.emplace(c, hi);
  return hi;
}

void ChangePointFinder::seed(const std::vector<ChangePointRecord>& records) {
  std::lock_guard lock(known_mutex_);
  for (const auto& r : records) {
    if (r.sigma_at != r.index + 1) throw std::invalid_argument("seed record violates sigma_at = index + 1");
    first_n_.emplace(r.sigma_at + 1, r.n_i + 1);
    // Both sides of the step are certified facts.
    cache_.insert(SigmaCertificate{r.n_i, r.sigma_at, r.bits_used, ln_factorial_method(r.n_i)});
    cache_.insert(SigmaCertificate{r.n_i + 1, r.sigma_at + 1, r.bits_used, ln_factorial_method(r.n_i + 1)});
  }
}

std::vector<ChangePointRecord> ChangePointFinder::enumerate(std::uint64_t max_n) {
  std::vector<ChangePointRecord> out;
  if (max_n < 3) return out;
  const std::int64_t top = sigma(max_n + 1);
  for (std::int64_t c = 3; c <= top; ++c) {
    const std::uint64_t m = first_n_with_sigma(c);
    ChangePointRecord rec;
    rec.index = c - 2;
    rec.n_i = m - 1;
    rec.sigma_at = sigma(m - 1);
    if (rec.sigma_at != c - 1) throw std::logic_error("sigma step is not unit at a change point");
    rec.bits_used = std::max(cache_.get(m - 1).bits_used, cache_.get(m).bits_used);
    out.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    out[i].gap = out[i + 1].n_i - out[i].n_i;
    out[i].quotient = BoundedReal::integer(static_cast<std::int64_t>(out[i + 1].n_i), 128) /
                      BoundedReal::integer(static_cast<std::int64_t>(out[i].n_i), 128);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> ChangePointFinder::table(std::uint64_t from, std::uint64_t to) {
  if (from < 1 || from > to) throw std::invalid_argument("table needs 1 <= from <= to");
  std::vector<std::pair<std::uint64_t, std::int64_t>> rows;
  rows.reserve(to - from + 1);
  std::int64_t current = sigma(from);
  const std::int64_t last = sigma(to);
  std::uint64_t n = from;
  std::uint64_t lo = from;
  while (current < last) {
    // first m in (lo, to] with sigma_m > current
    std::uint64_t hi = to;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (sigma(mid) > current) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    for (; n < hi; ++n) rows.emplace_back(n, current);
    ++current;
    lo = hi;
  }
  for (; n <= to; ++n) rows.emplace_back(n, current);
  return rows;
}

std::uint64_t first_n_with_sigma(std::int64_t c, const PrecisionPolicy& policy) {
  ChangePointFinder finder(policy);
  return finder.first_n_with_sigma(c);
}

std::vector<ChangePointRecord> enumerate_changepoints(std::uint64_t max_n, const PrecisionPolicy& policy) {
  ChangePointFinder finder(policy);
  return finder.enumerate(max_n);
}

std::vector<bool> corollary_gap_check(const std::vector<ChangePointRecord>& records) {
  std::vector<bool> out;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    out.push_back(3 * records[i].n_i <= records[i + 1].n_i);
  }
  return out;
}

std::vector<QuotientRow> quotient_report(const std::vector<ChangePointRecord>& records, unsigned bits) {
  std::vector<QuotientRow> rows;
  const BoundedReal e2 = sqr(BoundedReal::e(bits));
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    BoundedReal q = BoundedReal::integer(static_cast<std::int64_t>(records[i + 1].n_i), bits) /
                    BoundedReal::integer(static_cast<std::int64_t>(records[i].n_i), bits);
    BoundedReal d = q - e2;
    rows.push_back(QuotientRow{records[i].index, std::move(q), std::move(d)});
  }
  return rows;
}

std::optional<bool> quotients_strictly_decreasing(const std::vector<QuotientRow>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    switch (compare_certified(rows[i + 1].quotient, rows[i].quotient)) {
      case Comparison::Less: break;
      case Comparison::Greater: return false;
      case Comparison::Undecided: return std::nullopt;
    }
  }
  return true;
}

std::vector<SpacingBounds> spacing_bounds_check(const std::vector<ChangePointRecord>& records,
                                                const PrecisionPolicy& policy) {
  using atlas::FunctionId;
  std::vector<SpacingBounds> out;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto n = static_cast<std::int64_t>(records[i].n_i);
    const auto next = static_cast<std::int64_t>(records[i + 1].n_i);
    if (n < 216) continue;
    auto middle = [n](unsigned bits) {
      const BoundedReal x = BoundedReal::integer(n, bits);
      return ln(2 * x) * atlas::eval(FunctionId::QL, x);
    };
    SpacingBounds r;
    r.n_i = records[i].n_i;
    r.left = decide(policy, [&](unsigned bits) {
                return std::pair{atlas::eval(FunctionId::F, BoundedReal::integer(3 * n, bits)), middle(bits)};
              }).verdict;
    r.right = decide(policy, [&](unsigned bits) {
                 return std::pair{middle(bits), atlas::eval(FunctionId::F, BoundedReal::integer(next + 1, bits))};
               }).verdict;
    out.push_back(r);
  }
  return out;
}

}  // namespace sigmalab
