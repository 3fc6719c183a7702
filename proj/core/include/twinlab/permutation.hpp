#pragma once

#include <compare>
#include <string>
#include <vector>

namespace twinlab {

/// A bijection of {1, ..., n}.
///
/// Products are written in diagram order: `(p * q)(x) == q(p(x))`, i.e. `p`
/// acts first. With this convention `nu(u * w) == nu(u) * nu(w)` for twin
/// words, where `nu(u)(s)` is the bottom position of the strand whose top
/// endpoint is `s`.
class Permutation {
 public:
  /// Identity permutation of the given degree.
  explicit Permutation(int degree = 0);

  /// Builds from 1-based images; throws std::invalid_argument unless the
  /// images form a permutation of {1..images.size()}.
  static Permutation from_images(std::vector<int> images);

  /// The transposition (i, i+1) in S_degree.
  static Permutation transposition(int degree, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int cycle_count() const;

  /// Cycle notation with fixed points omitted, e.g. "(1 2)(3 5 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& first, const Permutation& second);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace twinlab
