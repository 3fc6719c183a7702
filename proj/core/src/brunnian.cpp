#include "twinlab/brunnian.hpp"

#include <algorithm>
#include <stdexcept>

#include "twinlab/bases.hpp"
#include "twinlab/pt4.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab {

BrunnianCertificate is_brunnian(const TwinWord& w) {
  BrunnianCertificate cert;
  cert.word = w;
  cert.pure = is_pure(w);
  if (!cert.pure || w.strands() < 2) {
    cert.valid = cert.pure && w.empty();
    return cert;
  }
  cert.valid = true;
  for (int i = 0; i < w.strands(); ++i) {
    TwinWord d = normal_form(delete_strand(w, i));
    cert.valid = cert.valid && d.empty();
    cert.deletions.emplace_back(i, std::move(d));
  }
  return cert;
}

bool brunnian_log_test_t4(const TwinWord& w) {
  const FreeWord f = rewrite_pt4(w);
  auto log = [&](int k) { return log_sum(f, k - 1); };
  return log(4) + log(5) == 0 && log(3) + log(6) == 0 && log(2) + log(7) == 0 && log(1) == 0;
}

std::optional<FreeWord> schreier_basis_brun_t4(int gen, const std::array<int, 4>& k) {
  if (gen < 1 || gen > 7) throw std::out_of_range("Schreier basis generator must be in 1..7");
  const AlphabetPtr& alphabet = x_basis().alphabet;
  auto prefix = [&](const std::array<int, 4>& e) {
    FreeWord p(alphabet);
    for (int i = 0; i < 4; ++i) p = multiply(p, FreeWord::generator(alphabet, i, e[static_cast<std::size_t>(i)]));
    return p;
  };
  static constexpr std::array<int, 7> bumped{0, 1, 2, 3, 3, 2, 1};
  std::array<int, 4> shifted = k;
  ++shifted[static_cast<std::size_t>(bumped[static_cast<std::size_t>(gen - 1)])];
  FreeWord element = multiply(multiply(prefix(k), FreeWord::generator(alphabet, gen - 1)), invert(prefix(shifted)));
  if (element.empty()) return std::nullopt;
  return element;
}

TwinWord restrict_to_strands(const TwinWord& w, const std::vector<int>& strands, bool embed) {
  const int n = w.strands();
  std::vector<bool> keep(static_cast<std::size_t>(n + 1), false);
  for (int s : strands) {
    if (s < 1 || s > n) throw std::out_of_range("strand index outside 1..n");
    keep[static_cast<std::size_t>(s)] = true;
  }
  TwinWord out = w;
  int removed = 0;
  for (int s = n; s >= 1; --s) {
    if (keep[static_cast<std::size_t>(s)]) continue;
    if (out.strands() == 1) throw std::invalid_argument("cannot delete every strand");
    out = delete_strand(out, s - 1);
    ++removed;
  }
  return embed ? add_strands_right(out, removed) : out;
}

TwinWord coset_conjugator(const std::vector<int>& strands, int n) {
  std::vector<int> images(strands);
  for (int s = 1; s <= n; ++s) {
    if (std::find(strands.begin(), strands.end(), s) == strands.end()) images.push_back(s);
  }
  return permutation_word(Permutation::from_images(std::move(images)));
}

TwinWord embed_on_strands(const TwinWord& b, const std::vector<int>& strands, int n) {
  if (b.strands() != static_cast<int>(strands.size())) throw std::invalid_argument("strand set size mismatch");
  return conjugate(add_strands_right(b, n - b.strands()), coset_conjugator(strands, n));
}

std::vector<std::vector<int>> strand_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(subset);
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return out;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool is_k_decomposable(const TwinWord& w, int k) {
  const int n = w.strands();
  if (k < 1 || k > n - 1) throw std::out_of_range("k must satisfy 1 <= k <= n-1");
  if (!is_pure(w)) return false;
  for (const auto& kept : strand_subsets(n, n - k)) {
    if (!is_trivial(restrict_to_strands(w, kept))) return false;
  }
  return true;
}

TwinWord dk_step(const TwinWord& w, int k) {
  const int n = w.strands();
  if (k < 2 || k > n - 1) throw std::invalid_argument("dk_step requires 2 <= k <= n-1");
  if (!is_k_decomposable(w, k)) throw std::invalid_argument("dk_step input is not k-decomposable");
  TwinWord out = w;
  for (const auto& subset : strand_subsets(n, n - k + 1)) {
    const TwinWord part = restrict_to_strands(w, subset);
    if (part.empty()) continue;
    out = multiply(out, embed_on_strands(invert(part), subset, n));
  }
  return out;
}

TwinWord phi_decomposable(const TwinWord& w) {
  if (w.strands() < 4) throw std::invalid_argument("phi requires n >= 4");
  return dk_step(w, w.strands() - 2);
}

TwinWord brunnian_projection(const TwinWord& w) {
  if (!is_pure(w)) throw std::invalid_argument("brunnian_projection requires a pure twin");
  TwinWord out = w;
  for (int k = w.strands() - 2; k >= 2; --k) out = dk_step(out, k);
  return out;
}

int pt3_exponent(const TwinWord& w) {
  if (w.strands() != 3) throw std::invalid_argument("pt3_exponent requires a word in T_3");
  const TwinWord y(3, {1, 2, 1, 2, 1, 2});
  const int m = static_cast<int>(tits_reduce(w).length() / 6);
  if (equal(w, power(y, m))) return m;
  if (equal(w, power(y, -m))) return -m;
  throw std::invalid_argument("word is not a power of (t1 t2)^3");
}

const std::array<TwinWord, 4>& pt4_factor_generators() {
  static const std::array<TwinWord, 4> generators = [] {
    const TwinWord y(3, {1, 2, 1, 2, 1, 2});
    return std::array<TwinWord, 4>{coface(y, 0), coface(y, 1), coface(y, 2), coface(y, 3)};
  }();
  return generators;
}

namespace {

using Matrix = std::array<std::array<long long, 4>, 4>;

long long determinant(Matrix m) {
  // Bareiss elimination keeps every intermediate value an exact integer.
  long long sign = 1;
  long long previous = 1;
  for (int k = 0; k < 4; ++k) {
    auto uk = static_cast<std::size_t>(k);
    if (m[uk][uk] == 0) {
      std::size_t pivot = uk + 1;
      while (pivot < 4 && m[pivot][uk] == 0) ++pivot;
      if (pivot == 4) return 0;
      std::swap(m[uk], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = uk + 1; i < 4; ++i) {
      for (std::size_t j = uk + 1; j < 4; ++j) m[i][j] = (m[i][j] * m[uk][uk] - m[i][uk] * m[uk][j]) / previous;
    }
    previous = m[uk][uk];
  }
  return sign * m[3][3];
}

}  // namespace

Pt4Decomposition decompose_pt4(const TwinWord& w) {
  if (w.strands() != 4 || !is_pure(w)) throw std::invalid_argument("decompose_pt4 requires a pure twin in T_4");
  const auto& g = pt4_factor_generators();
  static const Matrix faces = [&g] {
    Matrix m{};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = pt3_exponent(delete_strand(g[j], static_cast<int>(i)));
    }
    return m;
  }();
  static const long long det = determinant(faces);
  if (det != 1 && det != -1) throw std::logic_error("factor generators do not span PT_4 / Brun(T_4)");

  std::array<long long, 4> target{};
  for (std::size_t i = 0; i < 4; ++i) target[i] = pt3_exponent(delete_strand(w, static_cast<int>(i)));

  Pt4Decomposition d;
  TwinWord tail(4);
  for (std::size_t j = 0; j < 4; ++j) {
    Matrix replaced = faces;
    for (std::size_t i = 0; i < 4; ++i) replaced[i][j] = target[i];
    d.exponents[j] = static_cast<int>(determinant(replaced) / det);
    tail = multiply(tail, power(g[j], d.exponents[j]));
  }
  d.brun = multiply(w, invert(tail));
  return d;
}

TwinWord reassemble(const Pt4Decomposition& d) {
  const auto& g = pt4_factor_generators();
  TwinWord out = d.brun;
  for (std::size_t j = 0; j < 4; ++j) out = multiply(out, power(g[j], d.exponents[j]));
  return out;
}

}  // namespace twinlab
