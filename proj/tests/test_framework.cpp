#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "argeq/error.hpp"
#include "argeq/fixtures.hpp"
#include "argeq/framework.hpp"
#include "test_support.hpp"

using namespace argeq;

namespace {

bool reaches(const Framework& fw, ArgIndex from, ArgIndex to) {
  std::vector<bool> seen(fw.size());
  std::vector<ArgIndex> stack{from};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    if (seen[x]) continue;
    seen[x] = true;
    for (auto t : fw.targets(x)) stack.push_back(t);
  }
  return false;
}

// Longest backward path by exhaustive DFS over simple paths; nullopt if a
// cycle is reachable backwards.
std::optional<std::size_t> brute_depth(const Framework& fw, ArgIndex x) {
  std::optional<std::size_t> best = 0;
  std::vector<bool> on_path(fw.size());
  std::function<void(ArgIndex, std::size_t)> dfs = [&](ArgIndex node, std::size_t len) {
    if (!best) return;
    on_path[node] = true;
    *best = std::max(*best, len);
    for (auto y : fw.attackers(node)) {
      if (on_path[y]) {
        best.reset();
        break;
      }
      dfs(y, len + 1);
      if (!best) break;
    }
    on_path[node] = false;
  };
  dfs(x, 0);
  return best;
}

}  // namespace

TEST(Framework, ConstructionAndLookup) {
  const auto fw = fixtures::fig6();
  EXPECT_EQ(fw.size(), 4u);
  EXPECT_EQ(fw.names(), (std::vector<std::string>{"X", "Y", "W", "Z"}));
  EXPECT_EQ(fw.at("W"), 2u);
  EXPECT_FALSE(fw.find("Q").has_value());
  EXPECT_THROW(fw.at("Q"), InputError);
  EXPECT_TRUE(fw.has_attack(fw.at("W"), fw.at("Z")));
  EXPECT_TRUE(fw.has_attack(fw.at("Z"), fw.at("W")));
  EXPECT_FALSE(fw.has_attack(fw.at("Y"), fw.at("X")));
  EXPECT_EQ(fw.attackers(fw.at("W")), (std::vector<ArgIndex>{1, 3}));
  EXPECT_EQ(fw.set_of({"Z", "X"}), (ArgSet{0, 3}));
  EXPECT_EQ(fw.names_of({2, 0}), (std::vector<std::string>{"W", "X"}));
}

TEST(Framework, RejectsBadInput) {
  EXPECT_THROW(Framework({"A", "A"}, {}), InputError);
  EXPECT_THROW(Framework({"A"}, {{0, 1}}), InputError);
  EXPECT_THROW(Framework({"A", "B"}, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(Framework({"bad name"}, {}), InputError);
  EXPECT_THROW(Framework({""}, {}), InputError);
  EXPECT_THROW(Framework::from_names({"A"}, {{"A", "B"}}), InputError);
  EXPECT_NO_THROW(Framework({"A"}, {{0, 0}}));
}

TEST(Framework, ValidNames) {
  EXPECT_TRUE(valid_argument_name("X1"));
  EXPECT_TRUE(valid_argument_name("long_name-2"));
  EXPECT_FALSE(valid_argument_name("a b"));
  EXPECT_FALSE(valid_argument_name("a,b"));
  EXPECT_FALSE(valid_argument_name("f(x)"));
}

TEST(Framework, AttackedSetAndRestrict) {
  const auto fw = fixtures::fig9_left();
  const auto all = fw.set_of(fw.names());
  ArgSet attacked;
  for (ArgIndex y = 0; y < fw.size(); ++y)
    if (!fw.attackers(y).empty()) attacked.push_back(y);
  EXPECT_EQ(attacked_set(fw, all), attacked);

  const auto sub = restrict(fw, fw.set_of({"X", "Y", "B"}));
  EXPECT_EQ(sub.names(), (std::vector<std::string>{"X", "Y", "B"}));
  EXPECT_EQ(sub.attacks().size(), 3u);  // B->X, X->Y, Y->X
}

TEST(Framework, SccsOfFixtures) {
  const auto fw = fixtures::fig6();
  const auto comps = sccs(fw);
  ASSERT_EQ(comps.size(), 3u);
  // Sinks first: {W,Z} before Y before X.
  EXPECT_EQ(comps[0], fw.set_of({"W", "Z"}));
  EXPECT_EQ(comps[1], fw.set_of({"Y"}));
  EXPECT_EQ(comps[2], fw.set_of({"X"}));
}

TEST(Framework, SccPropertiesRandom) {
  testkit::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fw = testkit::random_framework(rng, 12, 0.2);
    const auto comps = sccs(fw);
    std::vector<int> owner(fw.size(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (auto x : comps[c]) {
        ASSERT_EQ(owner[x], -1);
        owner[x] = static_cast<int>(c);
      }
    for (auto o : owner) ASSERT_NE(o, -1);
    for (ArgIndex x = 0; x < fw.size(); ++x)
      for (ArgIndex y = 0; y < fw.size(); ++y) {
        const bool same = owner[x] == owner[y];
        ASSERT_EQ(same, x == y || (reaches(fw, x, y) && reaches(fw, y, x)));
      }
    // Attackers' components come later in the list.
    for (const auto& [a, b] : fw.attacks()) ASSERT_GE(owner[a], owner[b]);
  }
}

TEST(Framework, AttackDepth) {
  const auto chain = fixtures::chain(4);
  EXPECT_EQ(attack_depth(chain, 0), 0u);
  EXPECT_EQ(attack_depth(chain, 3), 3u);
  EXPECT_TRUE(is_acyclic(chain));
  EXPECT_FALSE(is_acyclic(fixtures::self_loop()));
  EXPECT_THROW(attack_depth(fixtures::two_cycle(), 0), CycleError);
  // Y only sees X backwards, which sits in a cycle.
  EXPECT_THROW(attack_depth(fixtures::fig6(), 2), CycleError);
  EXPECT_EQ(attack_depth(fixtures::fig6(), 1), 1u);
}

TEST(Framework, AttackDepthMatchesPathEnumeration) {
  testkit::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fw = testkit::random_framework(rng, 8, 0.15);
    for (ArgIndex x = 0; x < fw.size(); ++x) {
      const auto expected = brute_depth(fw, x);
      if (expected)
        ASSERT_EQ(attack_depth(fw, x), *expected);
      else
        ASSERT_THROW(attack_depth(fw, x), CycleError);
    }
  }
}

TEST(Framework, SmallExamples) {
  const auto fw = fixtures::fig6();
  EXPECT_EQ(attackers_of(fw, fw.at("W")), fw.set_of({"Y", "Z"}));
  EXPECT_TRUE(attackers_of(fw, fw.at("X")).empty());
  const auto loop = fixtures::self_loop();
  EXPECT_EQ(attackers_of(loop, 0), (ArgSet{0}));
  EXPECT_EQ(attacked_set(fw, fw.set_of({"X"})), fw.set_of({"Y"}));
  EXPECT_EQ(attacked_set(fw, fw.set_of({"X", "W"})), fw.set_of({"Y", "Z"}));
  EXPECT_TRUE(attacked_set(fw, {}).empty());

  const auto wz = restrict(fw, fw.set_of({"W", "Z"}));
  EXPECT_EQ(wz.attacks(), (std::vector<Attack>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(restrict(fw, fw.set_of({"X"})).attacks().empty());
  EXPECT_TRUE(restrict(fw, {}).empty());

  const Framework edgeless({"a", "b", "c"}, {});
  EXPECT_EQ(sccs(edgeless).size(), 3u);
  const auto left = fixtures::fig9_left();
  const auto comps = sccs(left);
  EXPECT_NE(std::find(comps.begin(), comps.end(), left.set_of({"A", "B", "C"})), comps.end());
  EXPECT_NE(std::find(comps.begin(), comps.end(), left.set_of({"X", "Y"})), comps.end());
  EXPECT_NE(std::find(comps.begin(), comps.end(), left.set_of({"Z"})), comps.end());
}
