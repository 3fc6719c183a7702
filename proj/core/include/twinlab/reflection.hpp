#pragma once

#include <cstdint>
#include <vector>

#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Integer matrix of w in the geometric representation of T_n on Z^{n-1}:
/// t_i acts by v -> v - 2 B(e_i, v) e_i with B(e_i, e_i) = 1, B(e_i, e_j) = -1
/// for adjacent generators and 0 otherwise. The representation is faithful,
/// so comparing matrices decides the word problem without rewriting.
/// Row-major, (n-1) x (n-1). Throws std::overflow_error if an entry leaves
/// the 64-bit range.
std::vector<std::int64_t> reflection_matrix(const TwinWord& w);

bool reflection_equal(const TwinWord& u, const TwinWord& w);

}  // namespace twinlab
