#include "twinlab/twin_word.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace twinlab {

TwinWord::TwinWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
}

TwinWord::TwinWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  for (int letter : letters_) {
    if (letter < 1 || letter > strands - 1) {
      throw std::out_of_range("generator t" + std::to_string(letter) + " out of range for T_" +
                              std::to_string(strands));
    }
  }
}

std::string TwinWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 't';
    out += std::to_string(letters_[i]);
  }
  return out;
}

namespace {

void require_same_strands(const TwinWord& u, const TwinWord& w) {
  if (u.strands() != w.strands()) {
    throw std::invalid_argument("strand count mismatch: " + std::to_string(u.strands()) + " vs " +
                                std::to_string(w.strands()));
  }
}

// Appends `letter` to a geodesic word, cancelling it against an equal letter
// that can be commuted to the end.
void push_reduced(std::vector<int>& out, int letter) {
  auto j = static_cast<std::ptrdiff_t>(out.size()) - 1;
  while (j >= 0 && far_commute(out[static_cast<std::size_t>(j)], letter)) --j;
  if (j >= 0 && out[static_cast<std::size_t>(j)] == letter) {
    out.erase(out.begin() + j);
  } else {
    out.push_back(letter);
  }
}

// Inserts `letter` into a lexicographic normal form so that the result is the
// lexicographic normal form of (word * letter). The word times letter must be
// geodesic.
void insert_normal(std::vector<int>& out, int letter) {
  auto j = static_cast<std::ptrdiff_t>(out.size()) - 1;
  while (j >= 0 && far_commute(out[static_cast<std::size_t>(j)], letter)) --j;
  auto pos = static_cast<std::size_t>(j + 1);
  while (pos < out.size() && out[pos] < letter) ++pos;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), letter);
}

std::vector<int> lex_normalize(const std::vector<int>& reduced) {
  std::vector<int> out;
  out.reserve(reduced.size());
  for (int letter : reduced) insert_normal(out, letter);
  return out;
}

bool frontable(const std::vector<int>& letters, std::size_t p) {
  for (std::size_t k = 0; k < p; ++k) {
    if (!far_commute(letters[k], letters[p])) return false;
  }
  return true;
}

bool backable(const std::vector<int>& letters, std::size_t q) {
  for (std::size_t k = q + 1; k < letters.size(); ++k) {
    if (!far_commute(letters[k], letters[q])) return false;
  }
  return true;
}

}  // namespace

TwinWord tits_reduce(const TwinWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int letter : w.letters()) push_reduced(out, letter);
  return TwinWord(w.strands(), std::move(out));
}

TwinWord normal_form(const TwinWord& w) {
  return TwinWord(w.strands(), lex_normalize(tits_reduce(w).letters()));
}

bool equal(const TwinWord& u, const TwinWord& w) {
  require_same_strands(u, w);
  return normal_form(u).letters() == normal_form(w).letters();
}

bool is_trivial(const TwinWord& w) { return tits_reduce(w).empty(); }

TwinWord multiply(const TwinWord& u, const TwinWord& w) {
  require_same_strands(u, w);
  std::vector<int> out = tits_reduce(u).letters();
  for (int letter : w.letters()) push_reduced(out, letter);
  return TwinWord(u.strands(), std::move(out));
}

TwinWord invert(const TwinWord& w) {
  std::vector<int> reversed(w.letters().rbegin(), w.letters().rend());
  return tits_reduce(TwinWord(w.strands(), std::move(reversed)));
}

TwinWord power(const TwinWord& w, int exponent) {
  const TwinWord base = exponent < 0 ? invert(w) : tits_reduce(w);
  std::vector<int> out;
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
    for (int letter : base.letters()) push_reduced(out, letter);
  }
  return TwinWord(w.strands(), std::move(out));
}

TwinWord conjugate(const TwinWord& w, const TwinWord& g) { return multiply(multiply(invert(g), w), g); }

TwinWord commutator(const TwinWord& u, const TwinWord& w) {
  return multiply(multiply(invert(u), invert(w)), multiply(u, w));
}

Permutation nu(const TwinWord& w) {
  std::vector<int> at(static_cast<std::size_t>(w.strands()));  // at[pos-1] = strand
  for (int i = 0; i < w.strands(); ++i) at[static_cast<std::size_t>(i)] = i + 1;
  for (int letter : w.letters()) std::swap(at[static_cast<std::size_t>(letter - 1)], at[static_cast<std::size_t>(letter)]);
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) images[static_cast<std::size_t>(at[pos] - 1)] = static_cast<int>(pos) + 1;
  return Permutation::from_images(std::move(images));
}

bool is_pure(const TwinWord& w) { return nu(w).is_identity(); }

bool is_cyclically_reduced(const TwinWord& w) {
  const auto& letters = w.letters();
  for (std::size_t r = 0; r < letters.size(); ++r) {
    std::vector<int> rotated(letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
    rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r));
    if (tits_reduce(TwinWord(w.strands(), std::move(rotated))).length() != letters.size()) return false;
  }
  return true;
}

TwinWord cyclic_reduce(const TwinWord& w) {
  std::vector<int> letters = tits_reduce(w).letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < letters.size() && !changed; ++p) {
      if (!frontable(letters, p)) continue;
      for (std::size_t q = letters.size(); q-- > p + 1;) {
        if (letters[q] == letters[p] && backable(letters, q)) {
          letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(q));
          letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(p));
          changed = true;
          break;
        }
      }
    }
  }
  return TwinWord(w.strands(), lex_normalize(letters));
}

TwinWord conjugacy_representative(const TwinWord& w) {
  const TwinWord start = cyclic_reduce(w);
  std::set<std::vector<int>> seen{start.letters()};
  std::deque<std::vector<int>> queue{start.letters()};
  while (!queue.empty()) {
    std::vector<int> current = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p < current.size(); ++p) {
      // Move a letter that can reach the front over to the back, and a letter
      // that can reach the back over to the front.
      for (int direction = 0; direction < 2; ++direction) {
        if (direction == 0 ? !frontable(current, p) : !backable(current, p)) continue;
        std::vector<int> next(current);
        const int letter = next[p];
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(p));
        if (direction == 0) {
          next.push_back(letter);
        } else {
          next.insert(next.begin(), letter);
        }
        next = lex_normalize(next);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return TwinWord(w.strands(), *seen.begin());
}

TwinWord permutation_word(const Permutation& target) {
  const int degree = target.degree();
  if (degree < 1 || degree > 8) throw std::out_of_range("permutation_word supports degrees 1..8");
  static std::mutex mutex;
  static std::map<int, std::map<std::vector<int>, std::vector<int>>> tables;
  std::lock_guard lock(mutex);
  auto& table = tables[degree];
  if (table.empty()) {
    // Breadth-first search in shortlex order: the first word reaching a
    // permutation is its lexicographically least geodesic.
    const Permutation identity(degree);
    table.emplace(identity.images(), std::vector<int>{});
    std::deque<std::pair<Permutation, std::vector<int>>> queue{{identity, {}}};
    while (!queue.empty()) {
      auto [perm, word] = std::move(queue.front());
      queue.pop_front();
      for (int letter = 1; letter < degree; ++letter) {
        Permutation next = perm * Permutation::transposition(degree, letter);
        if (table.contains(next.images())) continue;
        std::vector<int> next_word = word;
        next_word.push_back(letter);
        table.emplace(next.images(), next_word);
        queue.emplace_back(std::move(next), std::move(next_word));
      }
    }
  }
  return TwinWord(degree, table.at(target.images()));
}

}  // namespace twinlab
