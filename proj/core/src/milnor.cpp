#include "twinlab/milnor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>

#include "twinlab/bases.hpp"
#include "twinlab/brunnian.hpp"
#include "twinlab/expression.hpp"
#include "twinlab/pt4.hpp"
#include "twinlab/stallings.hpp"

namespace twinlab {

std::vector<int> MilnorGen::tuple() const {
  std::vector<int> values;
  for (int p = 0; p <= degree; ++p) values.push_back(p <= i ? 0 : p <= j ? 1 : 2);
  return values;
}

MilnorGen MilnorGen::from_tuple(const std::vector<int>& values) {
  if (values.size() < 3 || values.front() != 0 || values.back() != 2) {
    throw std::invalid_argument("not a surjection onto {0, 1, 2}");
  }
  MilnorGen g{static_cast<int>(values.size()) - 1, -1, -1};
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (p > 0 && values[p] != values[p - 1] && values[p] != values[p - 1] + 1) {
      throw std::invalid_argument("not a monotone surjection onto {0, 1, 2}");
    }
    if (values[p] == 0) g.i = static_cast<int>(p);
    if (values[p] == 1) g.j = static_cast<int>(p);
  }
  if (g.j < 0) throw std::invalid_argument("surjection misses the value 1");
  return g;
}

namespace {

void require_degree(int degree) {
  if (degree < 0 || degree > kMaxMilnorDegree) {
    throw std::out_of_range("Milnor degree must be in 0.." + std::to_string(kMaxMilnorDegree));
  }
}

const std::vector<AlphabetPtr>& alphabets() {
  static const std::vector<AlphabetPtr> table = [] {
    std::vector<AlphabetPtr> out;
    for (int n = 0; n <= kMaxMilnorDegree; ++n) {
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
      }
      out.push_back(std::make_shared<const Alphabet>(std::move(names)));
    }
    return out;
  }();
  return table;
}

}  // namespace

AlphabetPtr milnor_alphabet(int degree) {
  require_degree(degree);
  return alphabets()[static_cast<std::size_t>(degree)];
}

int milnor_symbol(const MilnorGen& g) {
  if (g.i < 0 || g.i >= g.j || g.j > g.degree - 1) throw std::out_of_range("Milnor generator indices out of range");
  // Generators (i', j') with i' < i come first: sum over i' of (n - 1 - i').
  int symbol = 0;
  for (int i = 0; i < g.i; ++i) symbol += g.degree - 1 - i;
  return symbol + (g.j - g.i - 1);
}

MilnorGen milnor_gen(int degree, int symbol) {
  for (int i = 0; i < degree; ++i) {
    const int row = degree - 1 - i;
    if (symbol < row) return {degree, i, i + 1 + symbol};
    symbol -= row;
  }
  throw std::out_of_range("Milnor symbol out of range");
}

MilnorWord::MilnorWord(int degree_, FreeWord word_) : degree(degree_), word(std::move(word_)) {
  require_degree(degree);
  if (!(*word.alphabet() == *milnor_alphabet(degree))) throw std::invalid_argument("word is not over the Milnor alphabet");
}

MilnorWord MilnorWord::identity(int degree) { return MilnorWord(degree, FreeWord(milnor_alphabet(degree))); }

MilnorWord MilnorWord::generator(const MilnorGen& g) {
  return MilnorWord(g.degree, FreeWord::generator(milnor_alphabet(g.degree), milnor_symbol(g)));
}

MilnorWord MilnorWord::sigma() { return generator({2, 0, 1}); }

MilnorWord multiply(const MilnorWord& u, const MilnorWord& w) {
  if (u.degree != w.degree) throw std::invalid_argument("Milnor words of different degrees");
  return MilnorWord(u.degree, multiply(u.word, w.word));
}

MilnorWord invert(const MilnorWord& w) { return MilnorWord(w.degree, invert(w.word)); }

namespace {

// Applies a map on generators (given as the image of each symbol) letterwise.
MilnorWord substitute(const MilnorWord& w, int target_degree, const std::vector<FreeWord>& images) {
  std::vector<FreeLetter> letters;
  for (const FreeLetter& letter : w.word.letters()) {
    const FreeWord& image = images[static_cast<std::size_t>(letter.symbol)];
    const FreeWord piece = letter.sign > 0 ? image : invert(image);
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return MilnorWord(target_degree, FreeWord(milnor_alphabet(target_degree), std::move(letters)));
}

}  // namespace

MilnorWord m_face(int k, const MilnorWord& w) {
  const int n = w.degree;
  if (n < 1) throw std::invalid_argument("face maps need degree >= 1");
  if (k < 0 || k > n) throw std::out_of_range("face index out of range");
  const AlphabetPtr target = milnor_alphabet(n - 1);
  std::vector<FreeWord> images;
  for (int s = 0; s < static_cast<int>(w.word.alphabet()->size()); ++s) {
    std::vector<int> values = milnor_gen(n, s).tuple();
    values.erase(values.begin() + k);
    const bool onto = std::find(values.begin(), values.end(), 0) != values.end() &&
                      std::find(values.begin(), values.end(), 1) != values.end() &&
                      std::find(values.begin(), values.end(), 2) != values.end();
    images.push_back(onto ? FreeWord::generator(target, milnor_symbol(MilnorGen::from_tuple(values)))
                          : FreeWord(target));
  }
  return substitute(w, n - 1, images);
}

MilnorWord m_degeneracy(int k, const MilnorWord& w) {
  const int n = w.degree;
  if (k < 0 || k > n) throw std::out_of_range("degeneracy index out of range");
  if (n + 1 > kMaxMilnorDegree) throw std::out_of_range("degeneracy exceeds the maximum Milnor degree");
  const AlphabetPtr target = milnor_alphabet(n + 1);
  std::vector<FreeWord> images;
  for (int s = 0; s < static_cast<int>(w.word.alphabet()->size()); ++s) {
    std::vector<int> values = milnor_gen(n, s).tuple();
    values.insert(values.begin() + k, values[static_cast<std::size_t>(k)]);
    images.push_back(FreeWord::generator(target, milnor_symbol(MilnorGen::from_tuple(values))));
  }
  return substitute(w, n + 1, images);
}

bool moore_cycle(const MilnorWord& w) {
  for (int k = 0; k <= w.degree; ++k) {
    if (!m_face(k, w).word.empty()) return false;
  }
  return true;
}

IdentityReport verify_milnor_identities(int max_degree) {
  if (max_degree < 2 || max_degree + 2 > kMaxMilnorDegree) {
    throw std::out_of_range("Milnor identity degree must be in 2.." + std::to_string(kMaxMilnorDegree - 2));
  }
  IdentityReport report;
  std::map<std::string, IdentityCheck> checks;
  std::vector<std::string> order;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    auto [it, fresh] = checks.try_emplace(name, IdentityCheck{name, 0, 0, {}});
    if (fresh) order.push_back(name);
    ++it->second.cases;
    if (!ok) {
      ++it->second.failures;
      if (it->second.counterexamples.size() < 5) it->second.counterexamples.push_back(detail);
    }
  };

  for (int n = 2; n <= max_degree; ++n) {
    for (int s = 0; s < static_cast<int>(milnor_alphabet(n)->size()); ++s) {
      const MilnorWord x = MilnorWord::generator(milnor_gen(n, s));
      auto tag = [&](int i, int j) {
        return x.to_string() + " (degree " + std::to_string(n) + ") i=" + std::to_string(i) + " j=" + std::to_string(j);
      };
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
          if (i < j) {
            record("d_i d_j = d_{j-1} d_i (i<j)", m_face(i, m_face(j, x)) == m_face(j - 1, m_face(i, x)), tag(i, j));
            record("d_i s_j = s_{j-1} d_i (i<j)", m_face(i, m_degeneracy(j, x)) == m_degeneracy(j - 1, m_face(i, x)),
                   tag(i, j));
          }
          if (i <= j) {
            record("s_i s_j = s_{j+1} s_i (i<=j)",
                   m_degeneracy(i, m_degeneracy(j, x)) == m_degeneracy(j + 1, m_degeneracy(i, x)), tag(i, j));
          }
          if (i > j + 1) {
            record("d_i s_j = s_j d_{i-1} (i>j+1)", m_face(i, m_degeneracy(j, x)) == m_degeneracy(j, m_face(i - 1, x)),
                   tag(i, j));
          }
        }
        record("d_j s_j = id", m_face(j, m_degeneracy(j, x)) == x, tag(j, j));
        record("d_{j+1} s_j = id", m_face(j + 1, m_degeneracy(j, x)) == x, tag(j, j));
      }
    }
  }
  for (const auto& name : order) report.checks.push_back(checks.at(name));
  return report;
}

B2ProbeReport b2_probe(int max_length, std::size_t samples, std::uint64_t seed, std::size_t max_attempts) {
  if (max_length < 0) throw std::invalid_argument("max_length must be non-negative");
  if (max_attempts == 0) max_attempts = samples * 1000 + 1000;
  B2ProbeReport report;
  std::mt19937_64 engine(seed);
  const AlphabetPtr alphabet = milnor_alphabet(3);
  const int symbols = static_cast<int>(alphabet->size());
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<int> first_dist(0, 2 * symbols - 1);
  std::uniform_int_distribution<int> next_dist(0, 2 * symbols - 2);

  while (report.kernel_samples < samples && report.attempts < max_attempts) {
    ++report.attempts;
    // Uniform over reduced words of the chosen length: each step avoids
    // only the inverse of the previous letter.
    const int length = length_dist(engine);
    std::vector<FreeLetter> letters;
    for (int p = 0; p < length; ++p) {
      int code = p == 0 ? first_dist(engine) : next_dist(engine);
      if (p > 0) {
        const int forbidden = letters.back().symbol * 2 + (letters.back().sign > 0 ? 1 : 0);
        if (code >= forbidden) ++code;
      }
      letters.push_back({code / 2, code % 2 == 0 ? 1 : -1});
    }
    const MilnorWord w(3, FreeWord(alphabet, std::move(letters)));
    if (!m_face(1, w).word.empty() || !m_face(2, w).word.empty() || !m_face(3, w).word.empty()) continue;
    ++report.kernel_samples;
    const MilnorWord image = m_face(0, w);
    if (!image.word.empty() && report.nontrivial.size() < 20) {
      report.nontrivial.push_back(w.to_string() + " -> " + image.to_string());
    }
  }
  return report;
}

namespace {

TwinWord theta_generator(const MilnorGen& g) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, TwinWord> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_tuple(g.degree, g.i, g.j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  TwinWord c(3, {1, 2, 1, 2, 1, 2});
  for (int m = 0; m < g.degree; ++m) {
    if (m != g.i && m != g.j) c = double_strand(c, m);
  }
  cache.emplace(key, c);
  return c;
}

}  // namespace

TwinWord theta(const MilnorWord& w, int max_degree) {
  if (w.degree > max_degree) {
    throw std::out_of_range("theta degree " + std::to_string(w.degree) + " exceeds cap " + std::to_string(max_degree));
  }
  std::vector<int> letters;
  for (const FreeLetter& letter : w.word.letters()) {
    const TwinWord g = theta_generator(milnor_gen(w.degree, letter.symbol));
    const TwinWord piece = letter.sign > 0 ? g : invert(g);
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return tits_reduce(TwinWord(w.degree + 1, std::move(letters)));
}

std::vector<TwinWord> k_generators(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("K_n has generators only for n >= 2");
  std::vector<TwinWord> out;
  for (int s = 0; s < static_cast<int>(milnor_alphabet(n)->size()); ++s) {
    out.push_back(theta(MilnorWord::generator(milnor_gen(n, s)), max_degree));
  }
  return out;
}

CheckReport verify_k3_k4() {
  CheckReport report;

  // Degree 2: PT_3 is infinite cyclic on y = (t1 t2)^3.
  {
    const auto gens = k_generators(2);
    const AlphabetPtr y = Alphabet::indexed("y", 1);
    std::vector<FreeWord> words;
    for (const TwinWord& g : gens) words.push_back(FreeWord::generator(y, 0, pt3_exponent(g)));
    const int r = fold(y, words).rank();
    report.add("K_2 = <(t1 t2)^3> has rank 1", r == 1, "rank " + std::to_string(r));
  }

  // Degree 3 inside PT_4 = F(x1..x7).
  {
    const BasisTable& x = x_basis();
    const auto gens = k_generators(3);  // (0,1) = c_112, (0,2) = c_121, (1,2) = c_211
    struct Row {
      int index;
      const char* name;
      const char* closed;
      const char* x_word;
    };
    const Row rows[] = {
        {2, "c_211", "(t2 t1 t3 t2)(t1 t2 t3)(t1 t2 t3)", "x3 x5"},
        {1, "c_121", "(t1 t2 t3)(t2 t1 t3 t2)(t1 t2 t3)", "x6 x2"},
        {0, "c_112", "(t1 t2 t3)(t1 t2 t3)(t2 t1 t3 t2)", "x1 x7"},
    };
    std::vector<FreeWord> rewritten;
    for (const Row& row : rows) {
      const TwinWord& c = gens[static_cast<std::size_t>(row.index)];
      report.add(std::string(row.name) + " = " + row.closed, equal(c, parse_twin_expression(row.closed, 4)),
                 c.to_string());
      const FreeWord target = parse_free_expression(row.x_word, x.alphabet);
      report.add(std::string(row.name) + " = " + row.x_word, equal(c, evaluate(target, x)));
      rewritten.push_back(rewrite_pt4(c));
      report.add(std::string("rewrite_pt4(") + row.name + ") = " + row.x_word, rewritten.back() == target,
                 rewritten.back().to_string());
    }
    const int r = fold(x.alphabet, rewritten).rank();
    report.add("K_3 has rank 3", r == 3, "rank " + std::to_string(r));
    report.add("Theta_3 is injective (rank K_3 = rank F[S^2]_3 = 3)", r == 3);
  }

  // Degree 4 inside PT_5 = F(a1..a31).
  {
    report.append(verify_pt5_identities());
    const BasisTable& a = a_basis();
    const auto gens = k_generators(4);
    const auto& ids = pt5_identities();
    // theta(x_ij) in degree 4 is s_p s_q (c_111) for {p > q} = {0..3} \ {i, j}.
    const std::pair<int, int> pairs[] = {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}};
    std::vector<FreeWord> words;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const FreeWord image = parse_free_expression(ids[k].image, a.alphabet);
      words.push_back(image);
      const MilnorGen g{4, pairs[k].first, pairs[k].second};
      const TwinWord& c = gens[static_cast<std::size_t>(milnor_symbol(g))];
      report.add("theta(x" + std::to_string(g.i) + std::to_string(g.j) + ") = " + ids[k].image,
                 equal(c, evaluate(image, a)));
    }
    const int r = fold(a.alphabet, words).rank();
    report.add("K_4 has rank 6", r == 6, "rank " + std::to_string(r));
    report.add("Theta_4 is injective (rank K_4 = rank F[S^2]_4 = 6)", r == 6);
  }
  return report;
}

}  // namespace twinlab
