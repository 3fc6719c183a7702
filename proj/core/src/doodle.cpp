#include "twinlab/doodle.hpp"

#include <stdexcept>

#include "twinlab/strand_ops.hpp"

namespace twinlab {

namespace {

void require_pure(const TwinWord& w, const char* what) {
  if (!is_pure(w)) throw std::invalid_argument(std::string(what) + " requires a pure twin");
}

}  // namespace

DoodleClosure closure(const TwinWord& w) {
  return {conjugacy_representative(w), nu(w).cycle_count(), w.strands()};
}

int min_crossings(const TwinWord& w) {
  require_pure(w, "min_crossings");
  return static_cast<int>(cyclic_reduce(w).length());
}

bool is_trivial_closure(const TwinWord& w) {
  require_pure(w, "is_trivial_closure");
  return is_trivial(w);
}

DoodleCertificate brunnian_closure_certificate(const TwinWord& w) {
  require_pure(w, "brunnian_closure_certificate");
  DoodleCertificate cert;
  cert.doodle = closure(w);
  cert.brunnian = is_brunnian(w);
  bool all_trivial = true;
  if (w.strands() >= 2) {
    for (int i = 0; i < w.strands(); ++i) {
      const bool trivial = is_trivial_closure(delete_strand(w, i));
      cert.trivial_deletions.emplace_back(i, trivial);
      all_trivial = all_trivial && trivial;
    }
  }
  cert.certified = cert.doodle.components == w.strands() && cert.brunnian.valid && all_trivial;
  return cert;
}

}  // namespace twinlab
