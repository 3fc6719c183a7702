#include "oracle.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>

namespace twinlab::testing {

std::optional<bool> bfs_trivial(const std::vector<int>& letters, int strands, std::size_t max_states) {
  (void)strands;
  std::set<std::vector<int>> seen{letters};
  std::deque<std::vector<int>> queue{letters};
  while (!queue.empty()) {
    const std::vector<int> v = queue.front();
    queue.pop_front();
    if (v.empty()) return true;
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      std::vector<int> next = v;
      if (v[p] == v[p + 1]) {
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(p), next.begin() + static_cast<std::ptrdiff_t>(p + 2));
      } else if (v[p] - v[p + 1] >= 2 || v[p + 1] - v[p] >= 2) {
        std::swap(next[p], next[p + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) {
        if (seen.size() > max_states) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

std::optional<bool> bfs_equal(const TwinWord& u, const TwinWord& w, std::size_t max_states) {
  if (u.strands() != w.strands()) throw std::invalid_argument("strand mismatch");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), w.letters().rbegin(), w.letters().rend());
  return bfs_trivial(letters, u.strands(), max_states);
}

namespace {

constexpr std::array<std::uint64_t, 2> kPrimes{2305843009213693951ULL, 4611686018427387847ULL};

using Matrix = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Reflection s_g acting on Z^{n-1} with B(e_g, e_g) = 1 and B = -1 between
// neighbouring generators: s_g(e_j) = e_j - 2 B(e_g, e_j) e_g.
Matrix image(const TwinWord& w, std::uint64_t p) {
  const auto d = static_cast<std::size_t>(w.strands() - 1);
  Matrix m(d * d, 0);
  for (std::size_t k = 0; k < d; ++k) m[k * d + k] = 1;
  for (const int g : w.letters()) {
    // Right multiplication by the transpose of s_g changes column g-1 only.
    const auto c = static_cast<std::size_t>(g - 1);
    for (std::size_t r = 0; r < d; ++r) {
      std::uint64_t value = (p - m[r * d + c]) % p;
      if (c > 0) value = (value + mulmod(2, m[r * d + c - 1], p)) % p;
      if (c + 1 < d) value = (value + mulmod(2, m[r * d + c + 1], p)) % p;
      m[r * d + c] = value;
    }
  }
  return m;
}

}  // namespace

bool matrix_equal(const TwinWord& u, const TwinWord& w) {
  if (u.strands() != w.strands()) throw std::invalid_argument("strand mismatch");
  for (const std::uint64_t p : kPrimes) {
    if (image(u, p) != image(w, p)) return false;
  }
  return true;
}

bool matrix_trivial(const TwinWord& w) { return matrix_equal(w, TwinWord(w.strands())); }

}  // namespace twinlab::testing
