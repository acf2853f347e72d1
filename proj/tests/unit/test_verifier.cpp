#include <doctest.h>

#include "sigmalab/verifier.hpp"
#include "support.hpp"

using namespace sigmalab;
using namespace sigmalab::verify;

namespace {

const Witness* find_witness(const CheckReport& r, std::string_view prefix) {
  for (const auto& w : r.witnesses) {
    if (w.label.rfind(prefix, 0) == 0) return &w;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("points enclose their values") {
  CHECK(Point::decimal("3.92465").at(128).contains(mpq_class("78493/20000")));
  CHECK(Point::e_over_2().at(128).overlaps(BoundedReal::e(128) / 2));
  CHECK(Point::dyadic(0.75).at(64).is_point());
  CHECK(limit_point().at(64).contains(mpq_class(mpz_class(1) << 30)));
}

TEST_CASE("grids") {
  const Grid g = geometric_grid(Point::decimal("1"), Point::decimal("1000"), 8);
  CHECK(g.size() == 25);
  CHECK(g.front().at(64).contains(mpq_class(1)));
  CHECK(g.back().at(64).contains(mpq_class(1000)));
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    CHECK(compare_certified(g[i].at(64), g[i + 1].at(64)) == Comparison::Less);
  }
  CHECK(powers_of_two(20).size() == 21);
}

TEST_CASE("Robbins sandwich") {
  const CheckReport r = check_robbins(1, 2000);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.claims == 4000);
}

TEST_CASE("a-transform ordering, decrease and limits on a small grid") {
  const Grid order = geometric_grid(Point::decimal("1"), Point::decimal("1024"), 16);
  const Grid decrease = geometric_grid(Point::e_over_2(), Point::decimal("1024"), 16);
  const CheckReport r = check_lemma1(order, decrease, limit_point());
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.check_id == "lemma1");
}

TEST_CASE("limit proximity: D is close, QL and QR are not") {
  const CheckReport r = check_prop1_limits(limit_point());
  CHECK(r.verdict == Verdict::Fail);
  const Witness* ql = find_witness(r, "QL-1/2");
  REQUIRE(ql);
  REQUIRE(ql->value);
  CHECK(ql->value->mid() == doctest::Approx(0.026637).epsilon(1e-4));
  // QR - 1/2 only drops below 1e-3 past x = 2^1441.7.
  const CheckReport far = check_prop1_limits(Point::rational(mpq_class(mpz_class(1) << 2000)));
  CHECK(far.verdict == Verdict::Pass);
}

TEST_CASE("D threshold certificates") {
  const CheckReport r = check_cor1_thresholds();
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.claims > 10);
}

TEST_CASE("GN bracket and F monotonicity") { CHECK(check_gn_and_F().verdict == Verdict::Pass); }

TEST_CASE("y threshold of the shifted-quadratic inequality") {
  const CheckReport r = check_y_threshold();
  CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("F(3x) against ln(2x) QL(x)") {
  const Grid g = geometric_grid(Point::decimal("215.30655"), Point::decimal("100000"), 16);
  CHECK(check_f3x(g).verdict == Verdict::Pass);
}

TEST_CASE("spacing identity for consecutive change points is certified false") {
  const auto records = enumerate_changepoints(30'000);
  const CheckReport r = check_eqffff(records);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.claims >= 4);
}

TEST_CASE("external facts on a small grid") {
  const Grid g = geometric_grid(Point::e_over_2(), Point::decimal("5000"), 16);
  CHECK(check_external_facts(g).verdict == Verdict::Pass);
}

TEST_CASE("S_n data") {
  const CheckReport r = check_sn(1, 200);
  CHECK(r.verdict != Verdict::Fail);
  const Witness* s1 = find_witness(r, "S_1");
  REQUIRE(s1);
  REQUIRE(s1->value);
  CHECK(testing::near(*s1->value, "1.12594919970007158950", "1e-19"));
}

TEST_CASE("suite dispatch and overall verdict") {
  CHECK(run_suite("gn").size() == 1);
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  CheckReport pass, fail, undecided;
  fail.verdict = Verdict::Fail;
  undecided.verdict = Verdict::Undecided;
  CHECK(overall({pass, pass}) == Verdict::Pass);
  CHECK(overall({pass, undecided}) == Verdict::Undecided);
  CHECK(overall({undecided, fail}) == Verdict::Fail);
  CHECK(std::string(to_string(Verdict::Undecided)) == "UNDECIDED");
}
