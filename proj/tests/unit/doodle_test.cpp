#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "oracle.hpp"
#include "twinlab/doodle.hpp"
#include "twinlab/sampling.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab {
namespace {

const TwinWord y(3, {1, 2, 1, 2, 1, 2});

int oracle_components(const TwinWord& w) {
  std::vector<int> position(static_cast<std::size_t>(w.strands()));
  for (int s = 0; s < w.strands(); ++s) position[static_cast<std::size_t>(s)] = s;
  for (int t : w.letters()) std::swap(position[static_cast<std::size_t>(t - 1)], position[static_cast<std::size_t>(t)]);
  std::vector<bool> seen(position.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < position.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(position[p])) seen[p] = true;
  }
  return cycles;
}

TEST(Closure, BasicExamples) {
  EXPECT_EQ(min_crossings(y), 6);
  EXPECT_EQ(closure(y).components, 3);
  EXPECT_FALSE(closure(y).trivial());
  EXPECT_TRUE(closure(TwinWord(3)).trivial());
  EXPECT_EQ(closure(TwinWord(3, {1})).components, 2);
  EXPECT_EQ(closure(TwinWord(3, {1, 2})).components, 1);
  EXPECT_TRUE(is_trivial_closure(TwinWord(4, {2, 2})));
  EXPECT_FALSE(is_trivial_closure(y));
  EXPECT_THROW(min_crossings(TwinWord(3, {1})), std::invalid_argument);
  EXPECT_THROW(is_trivial_closure(TwinWord(3, {1})), std::invalid_argument);
}

TEST(Closure, ComponentsMatchCycleCount) {
  WordSampler sampler(91);
  for (int k = 0; k < 200; ++k) {
    const TwinWord w = sampler.random_word(sampler.uniform(2, 6), 12);
    EXPECT_EQ(closure(w).components, oracle_components(w)) << w.to_string();
  }
}

TEST(Closure, InvariantUnderConjugationAndRotation) {
  WordSampler sampler(93);
  for (int k = 0; k < 100; ++k) {
    const int n = sampler.uniform(3, 5);
    const TwinWord w = sampler.random_pure_word(n, 14);
    const TwinWord g = sampler.random_word(n, 4);
    EXPECT_EQ(closure(conjugate(w, g)), closure(w));
    if (!w.empty()) {
      std::vector<int> rotated(w.letters().begin() + 1, w.letters().end());
      rotated.push_back(w.letters().front());
      EXPECT_EQ(closure(TwinWord(n, rotated)), closure(w));
    }
    EXPECT_EQ(min_crossings(conjugate(w, g)), min_crossings(w));
  }
}

// Every conjugate g^-1 y g with |g| <= 4 has reduced length at least 6.
TEST(Closure, SixCrossingsIsMinimalForY) {
  std::set<std::vector<int>> conjugators{{}};
  std::deque<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    const std::vector<int> g = frontier.front();
    frontier.pop_front();
    if (g.size() == 4) continue;
    for (int t : {1, 2}) {
      std::vector<int> next = g;
      next.push_back(t);
      if (conjugators.insert(next).second) frontier.push_back(next);
    }
  }
  std::size_t shortest = SIZE_MAX;
  for (const auto& g : conjugators) {
    shortest = std::min(shortest, tits_reduce(conjugate(y, TwinWord(3, g))).length());
  }
  EXPECT_EQ(shortest, 6u);
}

TEST(BrunnianDoodle, Certificates) {
  const DoodleCertificate three = brunnian_closure_certificate(y);
  EXPECT_TRUE(three.certified);
  EXPECT_EQ(three.doodle.components, 3);
  ASSERT_EQ(three.trivial_deletions.size(), 3u);
  for (const auto& [face, trivial] : three.trivial_deletions) EXPECT_TRUE(trivial) << face;

  const DoodleCertificate four = brunnian_closure_certificate(add_strands_right(y, 1));
  EXPECT_FALSE(four.certified);
  EXPECT_EQ(four.doodle.components, 4);
  EXPECT_FALSE(four.trivial_deletions.back().second);

  EXPECT_THROW(brunnian_closure_certificate(TwinWord(3, {1})), std::invalid_argument);
}

}  // namespace
}  // namespace twinlab
