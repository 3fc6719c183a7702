#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "twinlab/permutation.hpp"

namespace twinlab {

/// A word in the Coxeter generators t_1..t_{n-1} of the twin group T_n.
///
/// Letters are 1-based generator indices. Reading the letters left to right
/// stacks crossings from the top of the diagram to the bottom. Equality
/// operators compare letter sequences; use `equal()` for group equality.
class TwinWord {
 public:
  TwinWord() = default;
  explicit TwinWord(int strands);
  TwinWord(int strands, std::vector<int> letters);

  static TwinWord identity(int strands) { return TwinWord(strands); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// "t1 t2 t1", or "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const TwinWord&, const TwinWord&) = default;
  friend auto operator<=>(const TwinWord&, const TwinWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Generators t_a and t_b commute iff they are equal or far apart.
constexpr bool far_commute(int a, int b) { return a - b >= 2 || b - a >= 2; }

/// Geodesic word for the same element, by Tits cancellation: a letter is
/// cancelled against the nearest equal letter to its left when every letter in
/// between commutes with it.
TwinWord tits_reduce(const TwinWord& w);

/// Lexicographically least geodesic word representing the same element.
TwinWord normal_form(const TwinWord& w);

/// Group equality in T_n; throws std::invalid_argument on strand mismatch.
bool equal(const TwinWord& u, const TwinWord& w);

bool is_trivial(const TwinWord& w);

TwinWord multiply(const TwinWord& u, const TwinWord& w);
TwinWord invert(const TwinWord& w);
TwinWord power(const TwinWord& w, int exponent);

/// The conjugate g^{-1} w g, written w^g.
TwinWord conjugate(const TwinWord& w, const TwinWord& g);

/// Commutator [u, w] = u^{-1} w^{-1} u w.
TwinWord commutator(const TwinWord& u, const TwinWord& w);

/// Image in S_n under t_i -> (i, i+1).
Permutation nu(const TwinWord& w);
bool is_pure(const TwinWord& w);

/// True when every cyclic permutation of w is Tits-reduced.
bool is_cyclically_reduced(const TwinWord& w);

/// A minimal-length word in the conjugacy class of w, in normal form.
TwinWord cyclic_reduce(const TwinWord& w);

/// Canonical conjugacy representative: the lexicographically least normal
/// form among all cyclic rotations (modulo commutation) of cyclic_reduce(w).
TwinWord conjugacy_representative(const TwinWord& w);

/// Words for the symmetric group: lexicographically least geodesic twin word
/// whose permutation is `target`. Tables are built once per degree (<= 8).
TwinWord permutation_word(const Permutation& target);

}  // namespace twinlab
