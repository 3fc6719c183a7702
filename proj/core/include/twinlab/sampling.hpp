#pragma once

#include <cstdint>
#include <random>

#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Seeded source of random twin words for property suites and probes.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

  /// Random (unreduced) word of length in [0, max_length].
  TwinWord random_word(int strands, int max_length);

  /// Reduced pure twin of length at most max_length: a product of random
  /// conjugates of (t_i t_{i+1})^{+-3}. Identity for fewer than 3 strands.
  TwinWord random_pure_word(int strands, int max_length);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Word of adjacent transpositions that undoes nu(w): w * sorting_word(w) is pure.
TwinWord sorting_word(const TwinWord& w);

}  // namespace twinlab
