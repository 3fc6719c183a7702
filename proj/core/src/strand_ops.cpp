#include "twinlab/strand_ops.hpp"

#include <functional>
#include <stdexcept>

#include "twinlab/sampling.hpp"

namespace twinlab {

namespace {

void require_index(int index, int lo, int hi, const char* what) {
  if (index < lo || index > hi) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(index) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

TwinWord delete_strand(const TwinWord& w, int index) {
  if (w.strands() < 2) throw std::invalid_argument("cannot delete a strand from T_1");
  require_index(index, 0, w.strands() - 1, "face");
  int p = index + 1;
  std::vector<int> out;
  out.reserve(w.length());
  for (int j : w.letters()) {
    if (j == p) {
      ++p;
    } else if (j == p - 1) {
      --p;
    } else if (j < p - 1) {
      out.push_back(j);
    } else {
      out.push_back(j - 1);
    }
  }
  return tits_reduce(TwinWord(w.strands() - 1, std::move(out)));
}

TwinWord coface(const TwinWord& w, int index, CofaceVariant variant) {
  require_index(index, 0, w.strands(), "coface");
  std::vector<int> out;
  out.reserve(w.length() + 2);
  for (int j : w.letters()) {
    if (j < index) {
      out.push_back(j);
    } else if (j > index) {
      out.push_back(j + 1);
    } else if (variant == CofaceVariant::standard) {
      out.insert(out.end(), {j + 1, j, j + 1});
    } else {
      out.insert(out.end(), {j, j + 1, j});
    }
  }
  return tits_reduce(TwinWord(w.strands() + 1, std::move(out)));
}

TwinWord double_strand(const TwinWord& w, int index) {
  require_index(index, 0, w.strands() - 1, "degeneracy");
  // The doubled pair occupies positions p and p+1 of the output.
  int p = index + 1;
  std::vector<int> out;
  out.reserve(w.length() * 2);
  for (int j : w.letters()) {
    if (j + 1 < p) {
      out.push_back(j);
    } else if (j > p) {
      out.push_back(j + 1);
    } else if (j == p) {
      out.insert(out.end(), {p + 1, p});
      ++p;
    } else {
      out.insert(out.end(), {p - 1, p});
      --p;
    }
  }
  return tits_reduce(TwinWord(w.strands() + 1, std::move(out)));
}

TwinWord add_strand_left(const TwinWord& w) {
  std::vector<int> out(w.letters());
  for (int& letter : out) ++letter;
  return TwinWord(w.strands() + 1, std::move(out));
}

TwinWord add_strands_right(const TwinWord& w, int count) {
  if (count < 0) throw std::invalid_argument("negative strand count");
  return TwinWord(w.strands() + count, w.letters());
}

bool IdentityReport::ok() const {
  for (const auto& check : checks) {
    if (!check.ok()) return false;
  }
  return true;
}

std::size_t IdentityReport::total_cases() const {
  std::size_t total = 0;
  for (const auto& check : checks) total += check.cases;
  return total;
}

std::size_t IdentityReport::total_failures() const {
  std::size_t total = 0;
  for (const auto& check : checks) total += check.failures;
  return total;
}

const IdentityCheck* IdentityReport::find(std::string_view name) const {
  for (const auto& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

IdentityReport verify_simplicial_identities(int strands, std::size_t samples, std::uint64_t seed,
                                            int max_word_length) {
  if (strands < 2 || strands > kMaxIdentityStrands) {
    throw std::out_of_range("identity suite supports 2 <= n <= " + std::to_string(kMaxIdentityStrands));
  }
  const int n = strands;
  WordSampler sampler(seed);
  IdentityReport report;

  // Runs `samples` cases of one identity; `body` returns an empty string on
  // success and a description of the counterexample otherwise. Families with
  // no admissible indices at this strand count are omitted.
  auto family = [&](std::string name, bool admissible, const std::function<std::string()>& body) {
    if (!admissible) return;
    IdentityCheck check{std::move(name), 0, 0, {}};
    for (std::size_t k = 0; k < samples; ++k) {
      ++check.cases;
      std::string failure = body();
      if (!failure.empty()) {
        ++check.failures;
        if (check.counterexamples.size() < 5) check.counterexamples.push_back(std::move(failure));
      }
    }
    report.checks.push_back(std::move(check));
  };
  auto mismatch = [](const TwinWord& lhs, const TwinWord& rhs, const TwinWord& w, const std::string& indices) {
    if (equal(lhs, rhs)) return std::string();
    return "w=" + w.to_string() + " " + indices + ": " + lhs.to_string() + " != " + rhs.to_string();
  };
  auto idx = [](std::initializer_list<std::pair<const char*, int>> values) {
    std::string out;
    for (const auto& [label, value] : values) {
      if (!out.empty()) out += ' ';
      out += std::string(label) + "=" + std::to_string(value);
    }
    return out;
  };

  // Simplicial identities on pure twins: faces d_0..d_{n-1}, degeneracies s_0..s_{n-1}.
  family("simplicial d_i d_j = d_{j-1} d_i (i<j)", n >= 3, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int j = sampler.uniform(1, n - 1);
    const int i = sampler.uniform(0, j - 1);
    return mismatch(delete_strand(delete_strand(w, j), i), delete_strand(delete_strand(w, i), j - 1), w,
                    idx({{"i", i}, {"j", j}}));
  });
  family("simplicial s_i s_j = s_{j+1} s_i (i<=j)", true, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int j = sampler.uniform(0, n - 1);
    const int i = sampler.uniform(0, j);
    return mismatch(double_strand(double_strand(w, j), i), double_strand(double_strand(w, i), j + 1), w,
                    idx({{"i", i}, {"j", j}}));
  });
  family("simplicial d_i s_j = s_{j-1} d_i (i<j)", true, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int j = sampler.uniform(1, n - 1);
    const int i = sampler.uniform(0, j - 1);
    return mismatch(delete_strand(double_strand(w, j), i), double_strand(delete_strand(w, i), j - 1), w,
                    idx({{"i", i}, {"j", j}}));
  });
  family("simplicial d_j s_j = id", true, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int j = sampler.uniform(0, n - 1);
    return mismatch(delete_strand(double_strand(w, j), j), w, w, idx({{"j", j}}));
  });
  family("simplicial d_{j+1} s_j = id", true, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int j = sampler.uniform(0, n - 1);
    return mismatch(delete_strand(double_strand(w, j), j + 1), w, w, idx({{"j", j}}));
  });
  family("simplicial d_i s_j = s_j d_{i-1} (i>j+1)", n >= 2, [&] {
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int i = sampler.uniform(2, n);
    const int j = sampler.uniform(0, i - 2);
    return mismatch(delete_strand(double_strand(w, j), i), double_strand(delete_strand(w, i - 1), j), w,
                    idx({{"i", i}, {"j", j}}));
  });
  family("s_i is a homomorphism on pure twins", true, [&] {
    const TwinWord u = sampler.random_pure_word(n, max_word_length);
    const TwinWord w = sampler.random_pure_word(n, max_word_length);
    const int i = sampler.uniform(0, n - 1);
    return mismatch(double_strand(multiply(u, w), i), multiply(double_strand(u, i), double_strand(w, i)), u,
                    "v=" + w.to_string() + " " + idx({{"i", i}}));
  });

  // Bi-Delta identities on pure twins, for both coface variants.
  for (CofaceVariant variant : {CofaceVariant::standard, CofaceVariant::mirror}) {
    const std::string tag = variant == CofaceVariant::standard ? "" : " [mirror]";
    auto up = [variant](const TwinWord& w, int i) { return coface(w, i, variant); };
    if (variant == CofaceVariant::standard) {
      family("bi-delta d_j d_i = d_i d_{j+1} (j>=i)", n >= 3, [&] {
        const TwinWord w = sampler.random_pure_word(n, max_word_length);
        const int j = sampler.uniform(0, n - 2);
        const int i = sampler.uniform(0, j);
        return mismatch(delete_strand(delete_strand(w, i), j), delete_strand(delete_strand(w, j + 1), i), w,
                        idx({{"i", i}, {"j", j}}));
      });
    }
    family("bi-delta d^j d^i = d^{i+1} d^j (j<=i)" + tag, true, [&] {
      const TwinWord w = sampler.random_pure_word(n, max_word_length);
      const int i = sampler.uniform(0, n);
      const int j = sampler.uniform(0, i);
      return mismatch(up(up(w, i), j), up(up(w, j), i + 1), w, idx({{"i", i}, {"j", j}}));
    });
    family("bi-delta d_j d^i = d^{i-1} d_j (j<i)" + tag, true, [&] {
      const TwinWord w = sampler.random_pure_word(n, max_word_length);
      const int i = sampler.uniform(1, n);
      const int j = sampler.uniform(0, i - 1);
      return mismatch(delete_strand(up(w, i), j), up(delete_strand(w, j), i - 1), w, idx({{"i", i}, {"j", j}}));
    });
    family("bi-delta d_i d^i = id" + tag, true, [&] {
      const TwinWord w = sampler.random_pure_word(n, max_word_length);
      const int i = sampler.uniform(0, n);
      return mismatch(delete_strand(up(w, i), i), w, w, idx({{"i", i}}));
    });
    family("bi-delta d_j d^i = d^i d_{j-1} (j>i)" + tag, true, [&] {
      const TwinWord w = sampler.random_pure_word(n, max_word_length);
      const int j = sampler.uniform(1, n);
      const int i = sampler.uniform(0, j - 1);
      return mismatch(delete_strand(up(w, i), j), up(delete_strand(w, j - 1), i), w, idx({{"i", i}, {"j", j}}));
    });
    family("coface is a homomorphism" + tag, true, [&] {
      const TwinWord u = sampler.random_pure_word(n, max_word_length);
      const TwinWord w = sampler.random_pure_word(n, max_word_length);
      const int i = sampler.uniform(0, n);
      return mismatch(up(multiply(u, w), i), multiply(up(u, i), up(w, i)), u,
                      "v=" + w.to_string() + " " + idx({{"i", i}}));
    });
  }

  family("composition law d_i(uw) = d_i(u) d_{nu(u)(i+1)-1}(w)", true, [&] {
    const TwinWord u = sampler.random_word(n, max_word_length);
    const TwinWord w = sampler.random_word(n, max_word_length);
    const int i = sampler.uniform(0, n - 1);
    const int shifted = nu(u)(i + 1) - 1;
    return mismatch(delete_strand(multiply(u, w), i), multiply(delete_strand(u, i), delete_strand(w, shifted)), u,
                    "v=" + w.to_string() + " " + idx({{"i", i}}));
  });

  return report;
}

}  // namespace twinlab
