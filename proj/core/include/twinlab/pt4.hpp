#pragma once

#include <cstddef>
#include <vector>

#include "twinlab/bases.hpp"
#include "twinlab/free_group.hpp"
#include "twinlab/report.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// One Schreier generator r t_j (r')^{-1} of PT_4 in T_4, where r and r' are
/// transversal words, together with its expression in x_1..x_7.
struct SchreierEntry {
  TwinWord coset;      // r
  int letter = 0;      // j
  TwinWord generator;  // r t_j (r')^{-1}, reduced
  FreeWord x_word;
};

/// Reidemeister-Schreier rewriting of PT_4 into the free basis x_1..x_7.
///
/// The transversal consists of the lexicographically least geodesic word for
/// each of the 24 permutations. Schreier generators are matched against all
/// reduced x-words up to `max_depth` letters; construction throws
/// std::runtime_error if some generator is not found within that bound.
class Pt4Rewriter {
 public:
  explicit Pt4Rewriter(int max_depth = 4);

  /// Throws std::invalid_argument unless w is a pure twin in T_4.
  FreeWord rewrite(const TwinWord& w) const;

  const std::vector<TwinWord>& transversal() const { return transversal_; }
  /// Nontrivial Schreier generators, in (coset, letter) order.
  const std::vector<SchreierEntry>& table() const { return table_; }

 private:
  int coset_index(const Permutation& p) const;
  const SchreierEntry* entry(int coset, int letter) const;

  std::vector<Permutation> cosets_;
  std::vector<TwinWord> transversal_;
  std::vector<SchreierEntry> table_;
  std::vector<int> lookup_;  // coset * 3 + (letter - 1) -> table index or -1
};

/// Shared rewriter with the default search depth.
const Pt4Rewriter& pt4_rewriter();

FreeWord rewrite_pt4(const TwinWord& w);

/// The six degeneracy images of the K_3 generators in PT_5, compared with
/// their a-basis expressions: s_1(x3 x5) = a8 a16 a26, s_2(x3 x5) =
/// a23 a9 a31 a17, s_3(x3 x5) = a3 a19 a11 a30, s_2(x6 x2) = a29 a25 a10,
/// s_3(x6 x2) = a12 a28 a2 a20, s_3(x1 x7) = a1 a13 a27.
struct Pt5Identity {
  int degeneracy;
  const char* source;  // x-word
  const char* image;   // a-word
};
const std::vector<Pt5Identity>& pt5_identities();
CheckReport verify_pt5_identities();

}  // namespace twinlab
