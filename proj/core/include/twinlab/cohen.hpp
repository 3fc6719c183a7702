#pragma once

#include "twinlab/twin_word.hpp"

namespace twinlab {

/// All single-strand deletions d_0(w), ..., d_{n-1}(w) are equal. Twins on
/// one strand are Cohen.
bool is_cohen(const TwinWord& w);
bool is_pure_cohen(const TwinWord& w);

/// (t1 t2 ... t_{n-1})(t1 ... t_{n-2}) ... (t1 t2) t1. Requires n >= 1.
TwinWord delta(int n);

/// (t1 t2 ... t_{n-1})^n. Requires n >= 1.
TwinWord gamma(int n);

/// A pure Cohen twin w on n strands with d_0^{n-k}(w) = u, where u is a pure
/// Cohen twin on k < n strands. Brunnian u is lifted to the product, over
/// k-subsets S of strands in lexicographic order, of u placed on S; otherwise
/// d_0(u) is lifted first and the Brunnian remainder is lifted on top of it.
/// Throws std::invalid_argument if u is not pure Cohen or n <= k.
TwinWord cohen_lift(const TwinWord& u, int n);

/// The product over 0 <= i_1 < ... < i_{n-k} <= n-1 (ordered by the reversed
/// tuple) of d^{i_{n-k}} ... d^{i_1}(u), applying d^{i_1} first. Kept as a
/// reference construction: it is not a Cohen twin in general.
TwinWord coface_product(const TwinWord& u, int n);

}  // namespace twinlab
