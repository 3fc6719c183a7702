#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Which image the coface map d^i assigns to t_i.
enum class CofaceVariant {
  standard,  ///< t_i -> t_{i+1} t_i t_{i+1}
  mirror,    ///< t_i -> t_i t_{i+1} t_i
};

/// Face map d_i: deletes the strand whose top endpoint is at position i+1.
/// Requires n >= 2 and 0 <= i <= n-1. The result is Tits-reduced.
TwinWord delete_strand(const TwinWord& w, int index);

/// Coface map d^i: T_n -> T_{n+1}, inserting a strand between positions i and
/// i+1. Requires 0 <= i <= n.
TwinWord coface(const TwinWord& w, int index, CofaceVariant variant = CofaceVariant::standard);

/// Degeneracy s_i: T_n -> T_{n+1}, doubling the strand whose top endpoint is
/// at position i+1. A strand crossing the doubled pair crosses the nearer
/// copy first. Requires 0 <= i <= n-1.
TwinWord double_strand(const TwinWord& w, int index);

/// Shifts every generator up by one: a trivial strand on the left.
TwinWord add_strand_left(const TwinWord& w);

/// Appends `count` trivial strands on the right.
TwinWord add_strands_right(const TwinWord& w, int count);

/// Outcome of one identity family in a randomized suite.
struct IdentityCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only

  bool ok() const { return failures == 0; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool ok() const;
  std::size_t total_cases() const;
  std::size_t total_failures() const;
  const IdentityCheck* find(std::string_view name) const;
};

/// Largest strand count accepted by verify_simplicial_identities.
inline constexpr int kMaxIdentityStrands = 8;

/// Checks the simplicial identities for (delete_strand, double_strand) on
/// random pure twins in PT_n, the bi-Delta identities for (delete_strand,
/// coface) in both variants on random words in T_n, and the composition law
/// d_i(uw) = d_i(u) d_{nu(u)(i+1)-1}(w). Each identity family receives
/// `samples` cases with random admissible indices.
IdentityReport verify_simplicial_identities(int strands, std::size_t samples, std::uint64_t seed,
                                            int max_word_length = 12);

}  // namespace twinlab
