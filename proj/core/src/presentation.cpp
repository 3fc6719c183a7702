#include "twinlab/presentation.hpp"

#include <stdexcept>

#include "twinlab/strand_ops.hpp"

namespace twinlab {

QPresentation q_presentation(int n) {
  if (n < 2) throw std::invalid_argument("q-presentation requires n >= 2");
  QPresentation result;
  result.n = n;
  const int strands = n + 1;
  auto t = [strands](int k) { return TwinWord(strands, {k}); };

  for (int k = 1; k <= n - 1; ++k) {
    TwinWord q(k + 1, {k});
    for (int i = k; i <= n - 1; ++i) q = coface(q, i);
    std::vector<int> closed;
    for (int m = n; m > k; --m) closed.push_back(m);
    closed.push_back(k);
    for (int m = k + 1; m <= n; ++m) closed.push_back(m);
    result.report.add("q_" + std::to_string(k) + " = t_n ... t_{k+1} t_k t_{k+1} ... t_n",
                      equal(q, TwinWord(strands, closed)),
                      q.to_string());
    result.generators.push_back(q);
  }
  const TwinWord qn = coface(TwinWord(n, {n - 1}), n - 2);
  result.report.add("q_n = t_n", equal(qn, t(n)), qn.to_string());
  result.generators.push_back(qn);

  const auto& q = result.generators;  // q[k-1] = q_k
  auto conj = [&](int i) { return multiply(multiply(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i - 1)]), q[static_cast<std::size_t>(i)]); };

  for (int i = 1; i <= n; ++i) {
    result.report.add("q_" + std::to_string(i) + "^2 = 1", is_trivial(power(q[static_cast<std::size_t>(i - 1)], 2)));
  }
  for (int i = 1; i < n - 1; ++i) {
    result.report.add("[q_{i+1} q_i q_{i+1}, q_n] = 1 for i=" + std::to_string(i),
                      is_trivial(commutator(conj(i), q[static_cast<std::size_t>(n - 1)])));
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      result.report.add("[q_{i+1} q_i q_{i+1}, q_{j+1} q_j q_{j+1}] = 1 for i=" + std::to_string(i) +
                            " j=" + std::to_string(j),
                        is_trivial(commutator(conj(i), conj(j))));
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    result.report.add("t_" + std::to_string(k) + " = q_{k+1} q_k q_{k+1}", equal(t(k), conj(k)));
  }
  return result;
}

}  // namespace twinlab
