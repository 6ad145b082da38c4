#include <gtest/gtest.h>

#include <cstdlib>

#include "argeq/error.hpp"
#include "argeq/fixtures.hpp"
#include "argeq/semantics.hpp"
#include "test_support.hpp"

using namespace argeq;

TEST(Valuation, RangeChecks) {
  EXPECT_THROW(Valuation({1.5}), InputError);
  EXPECT_THROW(Valuation({-0.1}), InputError);
  EXPECT_THROW(Valuation({std::nan("")}), InputError);
  Valuation v({0.0, 1.0});
  EXPECT_THROW(v.set(0, 2.0), InputError);
  const auto fw = fixtures::two_cycle();
  EXPECT_THROW(Valuation::of(fw, {{"X", 1.0}}), InputError);
  EXPECT_EQ(Valuation::of(fw, {{"Y", 0.0}, {"X", 1.0}}), Valuation({1.0, 0.0}));
}

TEST(Labelling, Translation) {
  const Valuation v({1.0, 0.0, 0.5, 0.3});
  const auto l = valuation_to_labelling(v);
  EXPECT_EQ(l, (Labelling{Label::in, Label::out, Label::und, Label::und}));
  EXPECT_EQ(labelling_to_valuation(l), Valuation({1.0, 0.0, 0.5, 0.5}));
  const auto io = in_out_sets(v);
  EXPECT_EQ(io.in, (ArgSet{0}));
  EXPECT_EQ(io.out, (ArgSet{1}));
}

TEST(Labelling, IllegalClassificationOnFig6Case2) {
  const auto fw = fixtures::fig6();
  const auto l = valuation_to_labelling(fixtures::fig6_case(2));
  const auto bad = classify_illegal(fw, l);
  // X is out with no attackers; W is in while its attacker Y is in.
  EXPECT_EQ(bad.out, fw.set_of({"X"}));
  EXPECT_EQ(bad.in, fw.set_of({"W"}));
  EXPECT_TRUE(bad.und.empty());
  EXPECT_FALSE(bad.legal());
}

TEST(Oracle, Fig6Extensions) {
  const auto fw = fixtures::fig6();
  EXPECT_EQ(enumerate_extensions(fw, Semantics::complete),
            (std::vector<ArgSet>{fw.set_of({"X"}), fw.set_of({"X", "W"}), fw.set_of({"X", "Z"})}));
  EXPECT_EQ(enumerate_extensions(fw, Semantics::grounded), (std::vector<ArgSet>{fw.set_of({"X"})}));
  EXPECT_EQ(enumerate_extensions(fw, Semantics::preferred),
            (std::vector<ArgSet>{fw.set_of({"X", "W"}), fw.set_of({"X", "Z"})}));
  EXPECT_EQ(enumerate_extensions(fw, Semantics::stable),
            (std::vector<ArgSet>{fw.set_of({"X", "W"}), fw.set_of({"X", "Z"})}));
}

TEST(Oracle, OddCycleAndSelfLoop) {
  const auto three = fixtures::three_cycle();
  EXPECT_EQ(enumerate_extensions(three, Semantics::complete), (std::vector<ArgSet>{{}}));
  EXPECT_TRUE(enumerate_extensions(three, Semantics::stable).empty());
  EXPECT_EQ(enumerate_extensions(fixtures::self_loop(), Semantics::preferred), (std::vector<ArgSet>{{}}));
}

TEST(Oracle, CapIsEnforced) {
  EXPECT_THROW(enumerate_extensions(fixtures::chain(5), Semantics::complete, 4), OracleCapExceeded);
  ::setenv("ARGEQ_MAX_ORACLE_ARGS", "3", 1);
  EXPECT_EQ(oracle_cap(), 3u);
  EXPECT_THROW(enumerate_extensions(fixtures::chain(4), Semantics::complete), OracleCapExceeded);
  ::unsetenv("ARGEQ_MAX_ORACLE_ARGS");
  EXPECT_EQ(oracle_cap(), 20u);
}

TEST(Oracle, ParseSemantics) {
  EXPECT_EQ(parse_semantics("preferred"), Semantics::preferred);
  EXPECT_THROW(parse_semantics("ideal"), InputError);
}

TEST(Oracle, MatchesSubsetScanOnRandomFrameworks) {
  testkit::Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fw = testkit::random_framework(rng, 8, 0.25);
    const auto complete = enumerate_extensions(fw, Semantics::complete);
    ASSERT_EQ(complete, testkit::ref_complete_extensions(fw));
    ASSERT_EQ(enumerate_extensions(fw, Semantics::preferred), testkit::ref_preferred_extensions(fw));
    ASSERT_EQ(enumerate_extensions(fw, Semantics::stable), testkit::ref_stable_extensions(fw));
    const auto grounded = enumerate_extensions(fw, Semantics::grounded);
    ASSERT_EQ(grounded.size(), 1u);
    ASSERT_EQ(grounded.front(), testkit::ref_grounded(fw));
    ASSERT_EQ(grounded.front(), grounded_extension(fw));
    for (const auto& p : enumerate_extensions(fw, Semantics::preferred))
      ASSERT_NE(std::find(complete.begin(), complete.end(), p), complete.end());
  }
}

TEST(Oracle, LegalLabellingIffComplete) {
  testkit::Rng rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const auto fw = testkit::random_framework(rng, 7, 0.25);
    const auto complete = enumerate_extensions(fw, Semantics::complete);
    for (int k = 0; k < 10; ++k) {
      const auto l = testkit::random_labelling(rng, fw.size());
      const bool legal = classify_illegal(fw, l).legal();
      ASSERT_EQ(legal, is_legal_assignment(fw, labelling_to_valuation(l)));
      if (legal) {
        const auto in = in_out_sets(l).in;
        ASSERT_NE(std::find(complete.begin(), complete.end(), in), complete.end());
      }
    }
    // Each complete extension has exactly one legal labelling.
    const auto labellings = enumerate_complete_labellings(fw, 20);
    ASSERT_EQ(labellings.size(), complete.size());
    for (std::size_t i = 0; i < labellings.size(); ++i) {
      ASSERT_TRUE(classify_illegal(fw, labellings[i]).legal());
      ASSERT_EQ(in_out_sets(labellings[i]).in, complete[i]);
    }
  }
}

TEST(Oracle, ExtensionPropertyChain) {
  testkit::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fw = testkit::random_framework(rng, 7, 0.25);
    for (std::uint32_t m = 0; m < (1u << fw.size()); ++m) {
      const auto e = testkit::from_mask(m, fw.size());
      const auto r = extension_properties(fw, e);
      ASSERT_EQ(r.conflict_free, testkit::ref_conflict_free(fw, m));
      ASSERT_EQ(r.admissible, testkit::ref_admissible(fw, m));
      ASSERT_EQ(r.complete, testkit::ref_complete(fw, m));
      if (r.complete) ASSERT_TRUE(r.admissible);
      if (r.admissible) ASSERT_TRUE(r.conflict_free);
      if (r.stable) ASSERT_TRUE(r.conflict_free);
      if (r.preferred.value_or(false)) ASSERT_TRUE(r.complete);
    }
  }
}
