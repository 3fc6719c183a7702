#include "twinlab/cohen.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "twinlab/brunnian.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab {

bool is_cohen(const TwinWord& w) {
  if (w.strands() < 2) return true;
  const TwinWord first = normal_form(delete_strand(w, 0));
  for (int i = 1; i < w.strands(); ++i) {
    if (normal_form(delete_strand(w, i)) != first) return false;
  }
  return true;
}

bool is_pure_cohen(const TwinWord& w) { return is_pure(w) && is_cohen(w); }

TwinWord delta(int n) {
  if (n < 1) throw std::invalid_argument("delta requires n >= 1");
  std::vector<int> letters;
  for (int top = n - 1; top >= 1; --top) {
    for (int j = 1; j <= top; ++j) letters.push_back(j);
  }
  return tits_reduce(TwinWord(n, std::move(letters)));
}

TwinWord gamma(int n) {
  if (n < 1) throw std::invalid_argument("gamma requires n >= 1");
  std::vector<int> cycle;
  for (int j = 1; j < n; ++j) cycle.push_back(j);
  return power(TwinWord(n, std::move(cycle)), n);
}

namespace {

TwinWord iterate_d0(TwinWord w, int times) {
  for (int k = 0; k < times; ++k) w = delete_strand(w, 0);
  return w;
}

TwinWord lift_brunnian(const TwinWord& b, int n) {
  TwinWord out(n);
  if (b.empty()) return out;
  for (const auto& subset : strand_subsets(n, b.strands())) out = multiply(out, embed_on_strands(b, subset, n));
  return out;
}

}  // namespace

TwinWord cohen_lift(const TwinWord& u, int n) {
  const int k = u.strands();
  if (n <= k) throw std::invalid_argument("cohen_lift requires n > k");
  if (!is_pure_cohen(u)) throw std::invalid_argument("cohen_lift requires a pure Cohen twin");
  if (k <= 2) return TwinWord(n);  // PT_1 and PT_2 are trivial

  const TwinWord below = delete_strand(u, 0);
  if (is_trivial(below)) return lift_brunnian(u, n);

  const TwinWord lower = cohen_lift(below, n);
  const TwinWord residual = multiply(u, invert(iterate_d0(lower, n - k)));
  return multiply(lift_brunnian(residual, n), lower);
}

TwinWord coface_product(const TwinWord& u, int n) {
  const int k = u.strands();
  if (n <= k) throw std::invalid_argument("coface_product requires n > k");
  const int depth = n - k;
  std::vector<std::vector<int>> tuples;
  for (auto subset : strand_subsets(n, depth)) {
    for (int& i : subset) --i;  // indices 0..n-1
    tuples.push_back(subset);
  }
  std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  TwinWord out(n);
  for (const auto& tuple : tuples) {
    TwinWord term = u;
    for (int i : tuple) term = coface(term, i);
    out = multiply(out, term);
  }
  return out;
}

}  // namespace twinlab
