#include <doctest.h>

#include "szx/verify.hpp"

using namespace szx;

TEST_CASE("conjecture verification at n=6") {
  auto report = verify_conjecture(6);
  CHECK(report.class_count == 19);
  CHECK(report.max_q4 == 246);
  CHECK(report.bound_q4 == 246);
  CHECK(report.maximizer_unique);
  CHECK(report.maximizer_is_bn);
  CHECK_FALSE(report.counterexample);
  CHECK(report.passes());

  // The runner-up is theta(1,2,4); its value re-derived independently.
  CHECK(report.second_is_theta_12);
  CHECK(report.second_q4 == revised_szeged_x4(build_theta(1, 2, 4)).q);
  CHECK(report.second_q4 == 240);

  CHECK(report.table.size() == report.class_count);
  for (const ClassRow& row : report.table) CHECK(row.q4 <= report.max_q4);
}

TEST_CASE("conjecture verification at n=7, both methods") {
  auto naive = verify_conjecture(7, EnumMethod::Naive);
  CHECK(naive.class_count == 67);
  CHECK(naive.max_q4 == 384);
  CHECK(naive.passes());
  CHECK(naive.second_is_theta_12);

  auto structural = verify_conjecture(7, EnumMethod::Structural, 2);
  CHECK(structural.passes());
  CHECK(structural.max_q4 == naive.max_q4);
  CHECK(structural.second_q4 == naive.second_q4);
  CHECK(structural.class_count == naive.class_count);
  CHECK(structural.maximizers == naive.maximizers);
}

TEST_CASE("conjecture verification rejects out-of-scope orders") {
  CHECK_THROWS_AS(verify_conjecture(5), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture(10), BudgetError);
}

TEST_CASE("at n=8 the runner-up is theta(2,3,4), not theta(1,2,6)") {
  // The exhaustive run shows theta(1,2,n-2) is NOT second at n=8. Its
  // deviation sum is 24 against 20 for theta(2,3,4) (both hand-checkable
  // via the theta-edge case formulas), so theta(2,3,4) scores 556 > 552.
  // The maximum itself is untouched: B_8 at the closed-form bound 568.
  auto report = verify_conjecture(8, EnumMethod::Structural, 2);
  CHECK(report.class_count == 236);
  CHECK(report.max_q4 == 568);
  CHECK(report.max_q4 == report.bound_q4);
  CHECK(report.maximizer_unique);
  CHECK(report.maximizer_is_bn);

  CHECK(deviation_sum(build_theta(2, 3, 4)) == 20);
  CHECK(deviation_sum(build_theta(1, 2, 6)) == 24);
  CHECK(revised_szeged_x4(build_theta(1, 2, 6)).q == 552);
  CHECK(report.second_q4 == 556);
  REQUIRE(report.second_place.size() == 1);
  CHECK(report.second_place.front() == canonical_form(build_theta(2, 3, 4)));
  CHECK_FALSE(report.second_is_theta_12);
  CHECK_FALSE(report.passes());
}

TEST_CASE("lemma3 sweep on the reference shapes") {
  auto t333 = verify_lemma3(3, 3, 3);
  CHECK(t333.zero_deviation_edges == 3);
  CHECK(t333.case_formulas_ok);
  CHECK(t333.zero_iff_middle);
  CHECK(t333.passes());

  auto t222 = verify_lemma3(2, 2, 2);
  CHECK(t222.zero_deviation_edges == 0);
  CHECK(t222.passes());

  auto t126 = verify_lemma3(1, 2, 6);
  CHECK(t126.passes());
  bool saw_case2 = false;
  for (const ThetaSweepRow& row : t126.rows)
    if (row.analysis.kind == ThetaEdgeCase::SameSet) {
      saw_case2 = true;
      CHECK(row.analysis.actual == t126.n - row.analysis.cycle_len);
    }
  CHECK(saw_case2);

  CHECK_THROWS_AS(verify_lemma3(1, 1, 3), std::invalid_argument);
}

TEST_CASE("lemma3 sweep over all shapes up to 12 edges") {
  for (int a = 1; a <= 4; ++a)
    for (int b = std::max(a, 2); a + 2 * b <= 12; ++b)
      for (int c = b; a + b + c <= 12; ++c)
        CHECK(verify_lemma3(a, b, c).passes());
}

TEST_CASE("case inequalities at n=6 and n=7") {
  auto r6 = verify_case_inequalities(6);
  CHECK(r6.passes());
  CHECK(r6.bn_deviation == 6);
  CHECK(r6.bn_expected == 6);
  CHECK(r6.class_count == 19);
  for (const InequalityRow& row : r6.rows) {
    CHECK(row.ok);
    if (row.is_bn) continue;
    CHECK(row.deviation_sum > 7);
    if (row.cls.kind == BicyclicClass::Kind::Pendant)
      CHECK(row.deviation_sum >= 16);  // (n-2)^2
  }

  auto r7 = verify_case_inequalities(7, EnumMethod::Structural);
  CHECK(r7.passes());
  CHECK(r7.bn_deviation == 8);
  CHECK(r7.bn_expected == 8);
}
