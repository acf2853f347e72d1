#include <doctest.h>

#include <thread>

#include "sigmalab/changepoints.hpp"
#include "support.hpp"

using namespace sigmalab;

namespace {

const std::vector<std::uint64_t> kKnown = {3, 54, 458, 3480, 25867, 191351};

}  // namespace

TEST_CASE("first n with a given sigma") {
  ChangePointFinder finder;
  CHECK(finder.first_n_with_sigma(3) == 4);
  CHECK(finder.first_n_with_sigma(4) == 55);
  CHECK(finder.first_n_with_sigma(8) == 191352);
  CHECK_THROWS_AS(finder.first_n_with_sigma(2), std::invalid_argument);
}

TEST_CASE("enumeration up to 200000") {
  ChangePointFinder finder;
  const auto records = finder.enumerate(200'000);
  REQUIRE(records.size() == kKnown.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].n_i == kKnown[i]);
    CHECK(records[i].index == static_cast<std::int64_t>(i) + 1);
    // sigma_{n_l} = l + 1, and the step is right after n_l.
    CHECK(records[i].sigma_at == records[i].index + 1);
    CHECK(sigma_exact(records[i].n_i + 1).sigma == records[i].sigma_at + 1);
  }
  CHECK(records[0].gap == 51U);
  CHECK_FALSE(records.back().gap.has_value());
  CHECK(records[0].quotient->is_point());
}

TEST_CASE("enumeration bounds") {
  CHECK(enumerate_changepoints(2).empty());
  CHECK(enumerate_changepoints(3).size() == 1);
  CHECK(enumerate_changepoints(53).size() == 1);
  CHECK(enumerate_changepoints(54).size() == 2);
}

TEST_CASE("gap and quotient reports") {
  const auto records = enumerate_changepoints(200'000);
  for (bool ok : corollary_gap_check(records)) CHECK(ok);

  const auto rows = quotient_report(records);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].quotient.contains(mpq_class(18)));
  const std::pair<const char*, const char*> open_bounds[] = {
      {"8.48", "8.49"}, {"7.59", "7.6"}, {"7.43", "7.44"}, {"7.39", "7.40"}};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& [lo, hi] = open_bounds[i - 1];
    CHECK(compare_certified(BoundedReal::decimal(lo, 128), rows[i].quotient) == Comparison::Less);
    CHECK(compare_certified(rows[i].quotient, BoundedReal::decimal(hi, 128)) == Comparison::Less);
    CHECK(rows[i].minus_e2.certainly_positive());
  }
  CHECK(quotients_strictly_decreasing(rows) == true);
}

TEST_CASE("seeding skips searches and rejects bad records") {
  ChangePointFinder fresh;
  const auto records = fresh.enumerate(200'000);

  ChangePointFinder seeded;
  seeded.seed(records);
  const std::size_t before = seeded.cache().size();
  const auto again = seeded.enumerate(200'000);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].n_i == records[i].n_i);
  // Only the endpoint sigma(max_n + 1) needs computing.
  CHECK(seeded.cache().size() <= before + 1);

  ChangePointRecord bad = records.front();
  bad.sigma_at = 5;
  CHECK_THROWS_AS(seeded.seed({bad}), std::invalid_argument);
}

TEST_CASE("table locates every step") {
  ChangePointFinder finder;
  const auto rows = finder.table(1, 500);
  REQUIRE(rows.size() == 500);
  for (const auto& [n, s] : rows) REQUIRE_MESSAGE(s == sigma_exact(n).sigma, "n = " << n);
  CHECK(finder.table(3480, 3481).back().second == 6);
  CHECK_THROWS_AS(finder.table(10, 5), std::invalid_argument);
}

TEST_CASE("shared cache under concurrent searches") {
  ChangePointFinder finder;
  std::vector<std::uint64_t> found(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] { found[t] = finder.first_n_with_sigma(4 + t); });
  }
  for (auto& th : pool) th.join();
  CHECK(found == std::vector<std::uint64_t>{55, 459, 3481, 25868});
}

TEST_CASE("F brackets ln(2 n_i) QL(n_i) between consecutive change points") {
  const auto results = spacing_bounds_check(enumerate_changepoints(200'000));
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) CHECK_MESSAGE(r.holds(), "n_i = " << r.n_i);
}
