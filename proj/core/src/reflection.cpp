#include "twinlab/reflection.hpp"

#include <stdexcept>

namespace twinlab {

std::vector<std::int64_t> reflection_matrix(const TwinWord& w) {
  const int d = w.strands() - 1;
  const auto size = static_cast<std::size_t>(d);
  std::vector<std::int64_t> m(size * size, 0);
  for (std::size_t k = 0; k < size; ++k) m[k * size + k] = 1;
  // Left-multiplying by the reflection of t_i only changes row i - 1:
  // row_i <- -row_i + 2 (row_{i-1} + row_{i+1}).
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto r = static_cast<std::size_t>(*it - 1);
    for (std::size_t c = 0; c < size; ++c) {
      std::int64_t value = -m[r * size + c];
      for (const std::size_t nb : {r - 1, r + 1}) {
        if (nb >= size) continue;  // wraps for r == 0
        std::int64_t twice = 0;
        if (__builtin_mul_overflow(m[nb * size + c], 2, &twice) || __builtin_add_overflow(value, twice, &value)) {
          throw std::overflow_error("reflection matrix entry overflow");
        }
      }
      m[r * size + c] = value;
    }
  }
  return m;
}

bool reflection_equal(const TwinWord& u, const TwinWord& w) {
  if (u.strands() != w.strands()) throw std::invalid_argument("strand counts differ");
  return reflection_matrix(u) == reflection_matrix(w);
}

}  // namespace twinlab
