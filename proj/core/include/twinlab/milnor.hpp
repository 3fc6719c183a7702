#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twinlab/free_group.hpp"
#include "twinlab/report.hpp"
#include "twinlab/strand_ops.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Largest degree for which Milnor alphabets are built.
inline constexpr int kMaxMilnorDegree = 10;
/// Default cap for theta; degree n lands in PT_{n+1}.
inline constexpr int kDefaultThetaDegree = 4;

/// Generator x_ij of F[S^2]_n, 0 <= i < j <= n-1. It is the non-degenerate
/// part of the monotone surjection [n] -> [2] taking the value 0 on 0..i,
/// 1 on i+1..j and 2 on j+1..n. In degree 2, (0, 1) is sigma.
struct MilnorGen {
  int degree = 2;
  int i = 0;
  int j = 1;

  /// The surjection as its n+1 values, e.g. s_0(sigma) = (0, 0, 1, 2).
  std::vector<int> tuple() const;
  /// Inverse of tuple(); throws std::invalid_argument for non-monotone or
  /// non-surjective input.
  static MilnorGen from_tuple(const std::vector<int>& values);

  friend bool operator==(const MilnorGen&, const MilnorGen&) = default;
};

/// Names x01, x02, ..., one per generator of degree n, ordered by (i, j).
/// Degrees 0 and 1 have empty alphabets.
AlphabetPtr milnor_alphabet(int degree);
int milnor_symbol(const MilnorGen& g);
MilnorGen milnor_gen(int degree, int symbol);

struct MilnorWord {
  int degree = 2;
  FreeWord word;

  MilnorWord(int degree, FreeWord word);
  static MilnorWord identity(int degree);
  static MilnorWord generator(const MilnorGen& g);
  /// sigma in degree 2.
  static MilnorWord sigma();

  std::string to_string() const { return word.to_string(); }
  friend bool operator==(const MilnorWord&, const MilnorWord&) = default;
};

MilnorWord multiply(const MilnorWord& u, const MilnorWord& w);
MilnorWord invert(const MilnorWord& w);

/// Face d_k, 0 <= k <= n: drops entry k of each generator's tuple; a
/// generator whose tuple stops being surjective goes to the identity.
MilnorWord m_face(int k, const MilnorWord& w);

/// Degeneracy s_k, 0 <= k <= n: repeats entry k of each generator's tuple.
MilnorWord m_degeneracy(int k, const MilnorWord& w);

/// Every face of w is trivial.
bool moore_cycle(const MilnorWord& w);

/// Exhaustive simplicial identities on every generator of degree 2..max_degree.
IdentityReport verify_milnor_identities(int max_degree);

/// Falsification probe for B_2 = d_0(Z_3) = 1: random freely reduced words of
/// degree 3 and length <= max_length are kept when d_1 = d_2 = d_3 = 1, and
/// their d_0 images are collected.
struct B2ProbeReport {
  std::size_t attempts = 0;
  std::size_t kernel_samples = 0;
  std::vector<std::string> nontrivial;  // words with d_0 != 1

  bool ok() const { return nontrivial.empty(); }
};
B2ProbeReport b2_probe(int max_length, std::size_t samples, std::uint64_t seed,
                       std::size_t max_attempts = 0);

/// The simplicial homomorphism F[S^2] -> SPT with sigma -> (t1 t2)^3:
/// x_ij goes to s_{n-1} ... (s_j omitted) ... (s_i omitted) ... s_0 applied
/// to (t1 t2)^3. Degree n lands in PT_{n+1}; words of degree 0 or 1 map to the
/// identity. Throws std::out_of_range above `max_degree`.
TwinWord theta(const MilnorWord& w, int max_degree = kDefaultThetaDegree);

/// theta of every degree-n generator, in (i, j) order: generators of K_n.
std::vector<TwinWord> k_generators(int n, int max_degree = kDefaultThetaDegree);

/// K_2, K_3, K_4 ranks via folding (1, 3, 6), together with the identities
/// that put their generators into free bases of PT_3, PT_4 and PT_5.
CheckReport verify_k3_k4();

}  // namespace twinlab
