#include "twinlab/permutation.hpp"

#include <stdexcept>

namespace twinlab {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (int image : images) {
    if (image < 1 || image > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int i) {
  if (i < 1 || i >= degree) throw std::out_of_range("transposition index out of range");
  Permutation p(degree);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return p;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) seen[x] = true;
  }
  return cycles;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start) + 1) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation p(first.degree());
  for (std::size_t i = 0; i < first.images_.size(); ++i) {
    p.images_[i] = second(first.images_[i]);
  }
  return p;
}

}  // namespace twinlab
