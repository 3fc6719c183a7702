#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twinlab/report.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Seed used by every randomized check unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 20260516;

/// Independent decision procedure for equality in T_n.
using EqualityOracle = std::function<bool(const TwinWord&, const TwinWord&)>;

CheckReport check_face_table();
CheckReport check_doubling();
CheckReport check_pt5_identities();
CheckReport check_ranks();
CheckReport check_identity_suites(std::uint64_t seed, std::size_t samples = 1000, int max_strands = 6,
                                  int milnor_degree = 8);
CheckReport check_composition_law(std::uint64_t seed, std::size_t samples = 1000);
CheckReport check_brunnian(std::uint64_t seed);
CheckReport check_decompose_pt4(std::uint64_t seed, std::size_t samples = 200);
CheckReport check_retractions(std::uint64_t seed, std::size_t samples = 100);
CheckReport check_cohen(std::uint64_t seed);
/// Compares equal() with `oracle` (reflection_equal if empty) on seeded T_4
/// pairs of length <= 8, half of them related by random relator moves.
CheckReport check_word_problem(std::uint64_t seed, const EqualityOracle& oracle = {}, std::size_t pairs = 10000);
CheckReport check_moore_probe(std::uint64_t seed, std::size_t samples = 10000, int max_length = 12);
CheckReport check_doodles(std::uint64_t seed);
CheckReport check_q_presentation(int max_strands = 6);

struct CriterionResult {
  int id = 0;
  std::string title;
  CheckReport report;
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const { return report.ok() && seconds <= budget_seconds; }
};

/// The fourteen acceptance criteria, in order.
std::vector<CriterionResult> run_paper_checks(std::uint64_t seed = kDefaultSeed, const EqualityOracle& oracle = {});

}  // namespace twinlab
