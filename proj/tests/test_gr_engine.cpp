#include <gtest/gtest.h>

#include <cmath>

#include "argeq/cp_labelling.hpp"
#include "argeq/error.hpp"
#include "argeq/fixtures.hpp"
#include "argeq/gr_engine.hpp"
#include "test_support.hpp"

using namespace argeq;

namespace {

const AfnKind kMax = AfnKind::min();

GRConfig traced() {
  GRConfig cfg;
  cfg.record_trajectory = true;
  return cfg;
}

std::size_t index_of(const Framework& fw, const char* name) { return fw.at(name); }

}  // namespace

TEST(GRStep, HandValues) {
  const auto fw = fixtures::fig6();
  const auto v0 = fixtures::fig6_case(1);
  EXPECT_EQ(gr_step(fw, v0, kMax), Valuation::of(fw, {{"X", 0.5}, {"Y", 0.5}, {"W", 0}, {"Z", 1}}));
  const auto legal = fixtures::fig6_case(3);
  EXPECT_EQ(gr_step(fw, legal, kMax), legal);
  const Framework source({"S"}, {});
  EXPECT_EQ(gr_step(source, Valuation({0.0}), kMax)[0], 0.5);
  EXPECT_THROW(gr_step(fw, Valuation({0.5}), kMax), InputError);
}

TEST(GRStep, MatchesReferenceImplementation) {
  testkit::Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fw = testkit::random_framework(rng, 10, 0.25);
    const auto v = testkit::random_unit_values(rng, fw.size());
    ASSERT_EQ(gr_step(fw, v, kMax), testkit::ref_gr_step_max(fw, v));
  }
}

TEST(Stable, Fig6Rows) {
  const auto fw = fixtures::fig6();
  const auto r1 = run_to_stable(fw, fixtures::fig6_case(1), kMax);
  EXPECT_EQ(r1.k, 1u);
  EXPECT_EQ(r1.settled, Valuation::of(fw, {{"X", 0.75}, {"Y", 0.5}, {"W", 0}, {"Z", 1}}));
  const auto r2 = run_to_stable(fw, fixtures::fig6_case(2), kMax);
  EXPECT_EQ(r2.k, 2u);
  EXPECT_EQ(r2.settled, Valuation::of(fw, {{"X", 0.875}, {"Y", 0.375}, {"W", 0.5}, {"Z", 0.625}}));
  const auto r3 = run_to_stable(fw, fixtures::fig6_case(3), kMax);
  EXPECT_EQ(r3.k, 0u);
  EXPECT_EQ(r3.settled, fixtures::fig6_case(3));
}

TEST(Equilibrium, Fig6Rows) {
  const auto fw = fixtures::fig6();
  const auto r1 = run_to_equilibrium(fw, fixtures::fig6_case(1), kMax);
  EXPECT_EQ(r1.status, GRStatus::converged);
  EXPECT_EQ(r1.equilibrium, Valuation::of(fw, {{"X", 1}, {"Y", 0}, {"W", 0}, {"Z", 1}}));
  const auto r2 = run_to_equilibrium(fw, fixtures::fig6_case(2), kMax);
  EXPECT_EQ(r2.equilibrium, Valuation::of(fw, {{"X", 1}, {"Y", 0}, {"W", 0.5}, {"Z", 0.5}}));
  EXPECT_EQ(r2.extension(), fw.set_of({"X"}));
  const auto r3 = run_to_equilibrium(fw, fixtures::fig6_case(3), kMax);
  EXPECT_EQ(r3.equilibrium, fixtures::fig6_case(3));
}

TEST(Equilibrium, Fig9Columns) {
  const auto cases = fixtures::fig9_cases();
  const auto& l1 = cases[0];
  EXPECT_EQ(run_to_equilibrium(l1.framework, l1.seed, kMax).equilibrium,
            Valuation::of(l1.framework, {{"X", 0}, {"Y", 1}, {"A", 0.5}, {"B", 0.5}, {"C", 0.5}, {"Z", 1}}));
  const auto& l2 = cases[1];
  EXPECT_EQ(run_to_equilibrium(l2.framework, l2.seed, kMax).equilibrium,
            Valuation::of(l2.framework, {{"X", 0.5}, {"Y", 0.5}, {"A", 0.5}, {"B", 0.5}, {"C", 0.5}, {"Z", 1}}));
  const auto& r1 = cases[2];
  EXPECT_EQ(run_to_equilibrium(r1.framework, r1.seed, kMax).equilibrium,
            Valuation::of(r1.framework, {{"X", 1}, {"Y", 0}, {"A", 0}, {"B", 0}, {"C", 1}, {"Z", 1}}));
  EXPECT_EQ(run_to_stable(l1.framework, l1.seed, kMax).k, 3u);
  EXPECT_EQ(run_to_stable(l2.framework, l2.seed, kMax).k, 5u);
}

TEST(Equilibrium, OracleExamples) {
  const auto fw = fixtures::fig6();
  EXPECT_EQ(equilibrium_oracle(fw, fixtures::fig6_case(1)),
            Valuation::of(fw, {{"X", 1}, {"Y", 0}, {"W", 0}, {"Z", 1}}));
  const auto l1 = fixtures::fig9_cases()[0];
  EXPECT_EQ(equilibrium_oracle(l1.framework, l1.seed),
            Valuation::of(l1.framework, {{"X", 0}, {"Y", 1}, {"A", 0.5}, {"B", 0.5}, {"C", 0.5}, {"Z", 1}}));
  // A legal complete assignment is its own limit.
  EXPECT_EQ(equilibrium_oracle(fw, fixtures::fig6_case(3)), fixtures::fig6_case(3));
}

TEST(Config, Validation) {
  GRConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.snap_tolerance = 0.3;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = {};
  cfg.change_tolerance = 1e-3;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = {};
  cfg.change_tolerance = 0.0;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(Equilibrium, IterationCapAndTrajectory) {
  const auto fw = fixtures::fig6();
  GRConfig cfg = traced();
  cfg.max_iterations = 3;
  const auto r = run_to_equilibrium(fw, fixtures::fig6_case(1), kMax, cfg);
  EXPECT_EQ(r.status, GRStatus::iteration_cap_hit);
  EXPECT_EQ(r.iterations, 3u);
  ASSERT_EQ(r.trajectory.size(), 4u);
  EXPECT_EQ(r.trajectory.front(), fixtures::fig6_case(1));
  EXPECT_STREQ(to_string(GRStatus::iteration_cap_hit), "iteration_cap_hit");

  const auto full = run_to_equilibrium(fw, fixtures::fig6_case(2), kMax, traced());
  ASSERT_EQ(full.trajectory.size(), full.iterations + 1);
  for (std::size_t i = 0; i + 1 < full.trajectory.size(); ++i)
    ASSERT_EQ(full.trajectory[i + 1], gr_step(fw, full.trajectory[i], kMax));
}

TEST(Equilibrium, ToleranceControlsIterationCount) {
  const auto l1 = fixtures::fig9_cases()[0];
  GRConfig loose;
  GRConfig tight;
  tight.change_tolerance = 1e-17;
  const auto a = run_to_equilibrium(l1.framework, l1.seed, kMax, loose);
  const auto b = run_to_equilibrium(l1.framework, l1.seed, kMax, tight);
  EXPECT_LT(a.iterations, b.iterations);
  EXPECT_EQ(a.equilibrium, b.equilibrium);
}

TEST(Equilibrium, SourcesDriftToOne) {
  const Framework fw({"Z"}, {});
  for (double start : {0.0, 0.25, 0.5, 1.0}) EXPECT_EQ(run_to_equilibrium(fw, Valuation({start}), kMax).equilibrium[0], 1.0);
}

TEST(Equilibrium, GeometricTailOnFixtures) {
  // After the stable index, a node whose attackers have reached a crisp
  // maximum halves its distance to the limit each step.
  std::vector<std::pair<Framework, Valuation>> inputs;
  for (int c = 1; c <= 3; ++c) inputs.emplace_back(fixtures::fig6(), fixtures::fig6_case(c));
  for (const auto& c : fixtures::fig9_cases()) inputs.emplace_back(c.framework, c.seed);
  for (const auto& [fw, v0] : inputs) {
    const auto r = run_to_equilibrium(fw, v0, kMax, traced());
    const auto& t = r.trajectory;
    for (std::size_t i = r.stable_index + 1; i + 1 < t.size(); ++i)
      for (ArgIndex x = 0; x < fw.size(); ++x) {
        double mx = 0.0;
        for (auto y : fw.attackers(x)) mx = std::max(mx, t[i][y]);
        if (mx != 0.0 && mx != 1.0) continue;
        const double limit = r.equilibrium[x];
        ASSERT_LE(std::fabs(t[i + 1][x] - limit), 0.5 * std::fabs(t[i][x] - limit) + 1e-15);
      }
  }
}

TEST(Properties, MainTheoremSuite) {
  testkit::Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto fw = testkit::random_framework(rng, 10, 0.25);
    const auto v0 = testkit::random_seed(rng, fw.size());
    const auto r = run_to_equilibrium(fw, v0, kMax, traced());
    ASSERT_EQ(r.status, GRStatus::converged);
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      const double e = r.equilibrium[x];
      ASSERT_TRUE(e == 0.0 || e == 0.5 || e == 1.0);
    }
    const auto oracle = equilibrium_oracle(fw, v0);
    const auto cp = labelling_to_valuation(cp_pipeline(fw, valuation_to_labelling(v0)));
    ASSERT_EQ(r.equilibrium, oracle);
    ASSERT_EQ(r.equilibrium, cp);
    const auto complete = testkit::ref_complete_extensions(fw);
    ASSERT_NE(std::find(complete.begin(), complete.end(), r.extension()), complete.end());
    ASSERT_LE(r.stable_index, fw.size());

    const auto& t = r.trajectory;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      for (ArgIndex x = 0; x < fw.size(); ++x) {
        const double a = t[i][x], b = t[i + 1][x];
        ASSERT_TRUE(b >= 0.0 && b <= 1.0);
        if (a == 0.0) ASSERT_NE(b, 1.0);
        if (a == 1.0) ASSERT_NE(b, 0.0);
        if (a > 0.0 && a < 1.0) ASSERT_TRUE(b > 0.0 && b < 1.0);
        // Crisp sets only shrink.
        if (b == 1.0) ASSERT_EQ(a, 1.0);
        if (b == 0.0) ASSERT_EQ(a, 0.0);
      }
  }
}

TEST(Properties, SettledAgreesWithDownAdmissible) {
  testkit::Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fw = testkit::random_framework(rng, 7, 0.25);
    const auto v0 = testkit::random_seed(rng, fw.size());
    const auto settled = run_to_stable(fw, v0, kMax).settled;
    const auto down = down_admissible(fw, valuation_to_labelling(v0)).final;
    ASSERT_EQ(in_out_sets(settled).in, in_out_sets(down).in);
    ASSERT_EQ(in_out_sets(settled).out, in_out_sets(down).out);
    ASSERT_EQ(in_out_sets(settled).in, testkit::ref_largest_restricted_admissible(fw, v0));
  }
}

TEST(Properties, ProductKindStillYieldsCompleteExtensions) {
  testkit::Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fw = testkit::random_framework(rng, 8, 0.25);
    const auto v0 = testkit::random_seed(rng, fw.size());
    const auto r = run_to_equilibrium(fw, v0, AfnKind::product());
    if (r.status != GRStatus::converged) continue;
    const auto complete = testkit::ref_complete_extensions(fw);
    ASSERT_NE(std::find(complete.begin(), complete.end(), r.extension()), complete.end());
  }
}

TEST(Adf, ConditionEvaluation) {
  const auto fw = fixtures::adf_framework();
  const auto c = fixtures::adf_conditions();
  const auto v = Valuation::of(fw, {{"a", 1}, {"b", 1}, {"c", 0.5}, {"d", 0.5}});
  EXPECT_EQ(eval_condition(c[index_of(fw, "d")], v), 0.5);
  EXPECT_EQ(eval_condition(c[index_of(fw, "c")], v), 0.5);
  EXPECT_EQ(eval_condition(AcceptanceCondition::truth(), Valuation({0.0})), 1.0);
  EXPECT_EQ(eval_condition(AcceptanceCondition::falsity(), Valuation({1.0})), 0.0);
  const auto either = AcceptanceCondition::disjunction(AcceptanceCondition::variable(0), AcceptanceCondition::variable(1));
  EXPECT_EQ(eval_condition(either, Valuation({0.2, 0.7})), 0.7);
  EXPECT_THROW(eval_condition(AcceptanceCondition::variable(5), Valuation({0.2})), InputError);
  EXPECT_EQ(c[index_of(fw, "c")].to_string(fw), "(c & b)");
}

TEST(Adf, ThreeModels) {
  const auto c = fixtures::adf_conditions();
  EXPECT_EQ(adf_run(c, Valuation({1, 1, 0.5, 0.5})).equilibrium, Valuation({1, 1, 0.5, 0.5}));
  EXPECT_EQ(adf_run(c, Valuation({1, 1, 1, 1})).equilibrium, Valuation({1, 1, 1, 0.5}));
  EXPECT_EQ(adf_run(c, Valuation({0, 0, 0, 0})).equilibrium, Valuation({1, 1, 0, 0.5}));
  EXPECT_THROW(adf_run(c, Valuation({1, 1})), InputError);
}
