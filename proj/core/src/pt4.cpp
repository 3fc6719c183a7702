#include "twinlab/pt4.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "twinlab/expression.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab {

namespace {

constexpr int kStrands = 4;

}  // namespace

Pt4Rewriter::Pt4Rewriter(int max_depth) {
  // All 24 permutations, via the words of their lex-least geodesics.
  std::vector<int> images{1, 2, 3, 4};
  do {
    cosets_.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  for (const Permutation& p : cosets_) transversal_.push_back(permutation_word(p));

  // Needed Schreier generators keyed by normal form.
  std::map<TwinWord, std::vector<std::size_t>> wanted;
  lookup_.assign(cosets_.size() * (kStrands - 1), -1);
  for (std::size_t c = 0; c < cosets_.size(); ++c) {
    for (int j = 1; j < kStrands; ++j) {
      const TwinWord step = multiply(transversal_[c], TwinWord(kStrands, {j}));
      const TwinWord& next = transversal_[static_cast<std::size_t>(coset_index(nu(step)))];
      const TwinWord generator = multiply(step, invert(next));
      if (is_trivial(generator)) continue;
      lookup_[c * (kStrands - 1) + static_cast<std::size_t>(j - 1)] = static_cast<int>(table_.size());
      wanted[normal_form(generator)].push_back(table_.size());
      table_.push_back({transversal_[c], j, generator, FreeWord(x_basis().alphabet)});
    }
  }

  // Breadth-first over reduced x-words, stopping once every generator is matched.
  const BasisTable& basis = x_basis();
  const int symbols = static_cast<int>(basis.alphabet->size());
  std::vector<std::vector<FreeLetter>> layer{{}};
  for (int depth = 1; depth <= max_depth && !wanted.empty(); ++depth) {
    std::vector<std::vector<FreeLetter>> next_layer;
    for (const auto& prefix : layer) {
      for (int s = 0; s < symbols && !wanted.empty(); ++s) {
        for (int sign : {1, -1}) {
          if (!prefix.empty() && prefix.back().symbol == s && prefix.back().sign == -sign) continue;
          auto letters = prefix;
          letters.push_back({s, sign});
          const FreeWord candidate(basis.alphabet, letters);
          const auto found = wanted.find(normal_form(evaluate(candidate, basis)));
          if (found != wanted.end()) {
            for (std::size_t index : found->second) table_[index].x_word = candidate;
            wanted.erase(found);
          }
          next_layer.push_back(std::move(letters));
        }
      }
    }
    layer = std::move(next_layer);
  }
  if (!wanted.empty()) {
    throw std::runtime_error("Schreier generator " + wanted.begin()->first.to_string() +
                             " has no x-word of length <= " + std::to_string(max_depth));
  }
}

int Pt4Rewriter::coset_index(const Permutation& p) const {
  const auto it = std::lower_bound(cosets_.begin(), cosets_.end(), p);
  return static_cast<int>(it - cosets_.begin());
}

const SchreierEntry* Pt4Rewriter::entry(int coset, int letter) const {
  const int index = lookup_[static_cast<std::size_t>(coset * (kStrands - 1) + letter - 1)];
  return index < 0 ? nullptr : &table_[static_cast<std::size_t>(index)];
}

FreeWord Pt4Rewriter::rewrite(const TwinWord& w) const {
  if (w.strands() != kStrands) throw std::invalid_argument("rewrite_pt4 requires a word in T_4");
  if (!is_pure(w)) throw std::invalid_argument("rewrite_pt4 requires a pure twin");
  std::vector<FreeLetter> letters;
  Permutation position(kStrands);
  for (int j : w.letters()) {
    if (const SchreierEntry* e = entry(coset_index(position), j)) {
      letters.insert(letters.end(), e->x_word.letters().begin(), e->x_word.letters().end());
    }
    position = position * Permutation::transposition(kStrands, j);
  }
  return FreeWord(x_basis().alphabet, std::move(letters));
}

const Pt4Rewriter& pt4_rewriter() {
  static const Pt4Rewriter rewriter;
  return rewriter;
}

FreeWord rewrite_pt4(const TwinWord& w) { return pt4_rewriter().rewrite(w); }

const std::vector<Pt5Identity>& pt5_identities() {
  static const std::vector<Pt5Identity> identities{
      {1, "x3 x5", "a8 a16 a26"},       {2, "x3 x5", "a23 a9 a31 a17"}, {3, "x3 x5", "a3 a19 a11 a30"},
      {2, "x6 x2", "a29 a25 a10"},      {3, "x6 x2", "a12 a28 a2 a20"}, {3, "x1 x7", "a1 a13 a27"},
  };
  return identities;
}

CheckReport verify_pt5_identities() {
  CheckReport report;
  const BasisTable& x = x_basis();
  const BasisTable& a = a_basis();
  for (const Pt5Identity& id : pt5_identities()) {
    const TwinWord lhs = double_strand(evaluate(parse_free_expression(id.source, x.alphabet), x), id.degeneracy);
    const TwinWord rhs = evaluate(parse_free_expression(id.image, a.alphabet), a);
    report.add("s_" + std::to_string(id.degeneracy) + "(" + id.source + ") = " + id.image, equal(lhs, rhs),
               normal_form(lhs).to_string());
  }
  return report;
}

}  // namespace twinlab
