#pragma once

#include <string>
#include <vector>

#include "twinlab/report.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Generators q_1..q_n of T_{n+1} built from coface maps, with the relation
/// checks that make them a presentation.
struct QPresentation {
  int n = 0;
  std::vector<TwinWord> generators;  // q_1..q_n in T_{n+1}
  CheckReport report;
};

/// q_k = d^n d^{n-1} ... d^k (t_k) for k < n and q_n = d^{n-2}(t_{n-1}).
/// Verifies q_i^2 = 1, [q_{i+1} q_i q_{i+1}, q_n] = 1 for i < n-1, the far
/// commutators, and t_k = q_{k+1} q_k q_{k+1}. Requires n >= 2.
QPresentation q_presentation(int n);

}  // namespace twinlab
