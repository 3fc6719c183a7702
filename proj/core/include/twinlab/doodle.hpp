#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twinlab/brunnian.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// A doodle on the 2-sphere, kept as the closure class of a twin. Closures are
/// compared up to conjugacy at a fixed strand count; stabilization moves are
/// not modelled.
struct DoodleClosure {
  TwinWord rep;        // conjugacy_representative of the twin
  int components = 0;  // cycles of nu
  int strands = 0;

  /// Double points of the minimal diagram.
  int crossings() const { return static_cast<int>(rep.length()); }
  bool trivial() const { return rep.empty(); }

  friend bool operator==(const DoodleClosure&, const DoodleClosure&) = default;
};

DoodleClosure closure(const TwinWord& w);

/// Crossings of the minimal diagram of the closure of a pure twin.
/// Throws std::invalid_argument unless w is pure.
int min_crossings(const TwinWord& w);

/// The closure of a pure twin is trivial iff the twin is trivial.
bool is_trivial_closure(const TwinWord& w);

struct DoodleCertificate {
  DoodleClosure doodle;
  BrunnianCertificate brunnian;
  std::vector<std::pair<int, bool>> trivial_deletions;  // (face index, closure trivial)
  bool certified = false;
};

/// A pure twin on m strands closes to an m-component doodle; it is certified
/// when the twin is Brunnian, so that every single deletion closes to a
/// trivial doodle. Throws std::invalid_argument unless w is pure.
DoodleCertificate brunnian_closure_certificate(const TwinWord& w);

}  // namespace twinlab
