#include "twinlab/sampling.hpp"

#include <utility>

namespace twinlab {

int WordSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

TwinWord WordSampler::random_word(int strands, int max_length) {
  if (strands < 2) return TwinWord(strands);
  const int length = uniform(0, max_length);
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int& letter : letters) letter = uniform(1, strands - 1);
  return TwinWord(strands, std::move(letters));
}

TwinWord WordSampler::random_pure_word(int strands, int max_length) {
  TwinWord out(strands);
  if (strands < 3) return out;
  const int target = uniform(0, max_length);
  // Conjugates of (t_i t_{i+1})^{+-3} normally generate PT_n. A factor that
  // would push the reduced length past max_length is skipped.
  for (int misses = 0; static_cast<int>(out.length()) < target && misses < 4;) {
    const int i = uniform(1, strands - 2);
    const TwinWord base = uniform(0, 1) == 0 ? TwinWord(strands, {i, i + 1}) : TwinWord(strands, {i + 1, i});
    const TwinWord factor = conjugate(power(base, 3), random_word(strands, 3));
    const TwinWord next = multiply(out, factor);
    if (static_cast<int>(next.length()) > max_length) {
      ++misses;
      continue;
    }
    out = next;
  }
  return out;
}

TwinWord sorting_word(const TwinWord& w) {
  // at[pos] = top endpoint of the strand currently at position pos+1.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  for (std::size_t i = 0; i < at.size(); ++i) at[i] = static_cast<int>(i) + 1;
  for (int letter : w.letters()) std::swap(at[static_cast<std::size_t>(letter - 1)], at[static_cast<std::size_t>(letter)]);
  std::vector<int> letters;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t pos = 0; pos + 1 < at.size(); ++pos) {
      if (at[pos] > at[pos + 1]) {
        std::swap(at[pos], at[pos + 1]);
        letters.push_back(static_cast<int>(pos) + 1);
        swapped = true;
      }
    }
  }
  return TwinWord(w.strands(), std::move(letters));
}

}  // namespace twinlab
