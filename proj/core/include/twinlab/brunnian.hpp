#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "twinlab/free_group.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Evidence for (or against) a twin being Brunnian: the normal form of every
/// single-strand deletion. Non-pure words get no deletions and are invalid.
struct BrunnianCertificate {
  TwinWord word;
  bool pure = false;
  std::vector<std::pair<int, TwinWord>> deletions;  // (face index, normal form)
  bool valid = false;
};

BrunnianCertificate is_brunnian(const TwinWord& w);

/// Membership in Brun(T_4) through the x-basis exponent sums:
/// log4 + log5 = log3 + log6 = log2 + log7 = log1 = 0.
/// Throws std::invalid_argument unless w is a pure twin in T_4.
bool brunnian_log_test_t4(const TwinWord& w);

/// Element of the free basis of Brun(T_4) indexed by a generator x_gen
/// (1..7) and exponents k = (k1, k2, k3, k4):
///   P x_gen (P')^{-1},  P = x1^k1 x2^k2 x3^k3 x4^k4,
/// where P' raises the exponent of x_gen for gen <= 4, and of x4, x3, x2 for
/// gen = 5, 6, 7. Returns nullopt when the element is freely trivial.
std::optional<FreeWord> schreier_basis_brun_t4(int gen, const std::array<int, 4>& k);

/// Strands are 1-based here. Deletes every strand outside `strands`
/// (largest first); with `embed`, re-adds the deleted count on the right so
/// the result lives in T_n again.
TwinWord restrict_to_strands(const TwinWord& w, const std::vector<int>& strands, bool embed = false);

/// Geodesic word c with nu(c)(m) = strands[m-1] for m <= |strands| and the
/// remaining strands in increasing order after them.
TwinWord coset_conjugator(const std::vector<int>& strands, int n);

/// (b with n - |S| trivial strands on the right)^{c_S}: the pure twin b
/// placed on the strand set S of T_n.
TwinWord embed_on_strands(const TwinWord& b, const std::vector<int>& strands, int n);

/// All k-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> strand_subsets(int n, int k);

/// True iff w is pure and deleting any k strands leaves the trivial twin.
/// Requires 1 <= k <= n-1.
bool is_k_decomposable(const TwinWord& w, int k);

/// One step D_{k,n} -> D_{k-1,n}:
///   w * prod over (n-k+1)-subsets S (lex order) of (w_S^{-1})^{c_S}.
/// Requires 2 <= k <= n-1 and w in D_{k,n}; throws std::invalid_argument
/// otherwise. Elements of D_{k-1,n} are fixed.
TwinWord dk_step(const TwinWord& w, int k);

/// The retraction PT_n -> D_{n-3,n}, i.e. dk_step(w, n-2). Requires n >= 4.
TwinWord phi_decomposable(const TwinWord& w);

/// Iterates dk_step from k = n-2 down to 2, landing in Brun(T_n).
TwinWord brunnian_projection(const TwinWord& w);

/// Exponent m with w = ((t1 t2)^3)^m in PT_3; throws if w is not in PT_3.
int pt3_exponent(const TwinWord& w);

/// w = brun * g0^e0 * g1^e1 * g2^e2 * g3^e3 in PT_4, where g_i is the coface
/// image d^i((t1 t2)^3): (t2t3)^3, (t2t1t2t3)^3, (t1t3t2t3)^3, (t1t2)^3.
struct Pt4Decomposition {
  TwinWord brun;
  std::array<int, 4> exponents{};
};

const std::array<TwinWord, 4>& pt4_factor_generators();

/// Exponents are determined by the four face images of w in PT_3; the
/// residue is Brunnian. Throws unless w is a pure twin in T_4.
Pt4Decomposition decompose_pt4(const TwinWord& w);
TwinWord reassemble(const Pt4Decomposition& d);

}  // namespace twinlab
