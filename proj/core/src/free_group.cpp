#include "twinlab/free_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace twinlab {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), names_[i]) !=
        names_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw std::invalid_argument("duplicate generator name " + names_[i]);
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::indexed(std::string_view prefix, int count, int first) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(first + i));
  return std::make_shared<const Alphabet>(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<FreeLetter> free_reduce(std::vector<FreeLetter> letters) {
  std::vector<FreeLetter> out;
  out.reserve(letters.size());
  for (const FreeLetter& letter : letters) {
    if (!out.empty() && out.back().symbol == letter.symbol && out.back().sign == -letter.sign) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

FreeWord::FreeWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("free word requires an alphabet");
}

FreeWord::FreeWord(AlphabetPtr alphabet, std::vector<FreeLetter> letters) : FreeWord(std::move(alphabet)) {
  for (const FreeLetter& letter : letters) {
    if (letter.symbol < 0 || letter.symbol >= static_cast<int>(alphabet_->size()) ||
        (letter.sign != 1 && letter.sign != -1)) {
      throw std::out_of_range("free letter outside alphabet");
    }
  }
  letters_ = free_reduce(std::move(letters));
}

FreeWord FreeWord::generator(AlphabetPtr alphabet, int symbol, int exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  std::vector<FreeLetter> letters(static_cast<std::size_t>(exponent * sign), FreeLetter{symbol, sign});
  return FreeWord(std::move(alphabet), std::move(letters));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const auto run = static_cast<int>(j - i) * letters_[i].sign;
    if (!out.empty()) out += ' ';
    out += alphabet_->name(letters_[i].symbol);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace {

void require_same_alphabet(const FreeWord& u, const FreeWord& w) {
  if (u.alphabet() != w.alphabet() && !(*u.alphabet() == *w.alphabet())) {
    throw std::invalid_argument("free words over different alphabets");
  }
}

}  // namespace

FreeWord multiply(const FreeWord& u, const FreeWord& w) {
  require_same_alphabet(u, w);
  std::vector<FreeLetter> letters(u.letters());
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return FreeWord(u.alphabet(), std::move(letters));
}

FreeWord invert(const FreeWord& w) {
  std::vector<FreeLetter> letters(w.letters().rbegin(), w.letters().rend());
  for (FreeLetter& letter : letters) letter.sign = -letter.sign;
  return FreeWord(w.alphabet(), std::move(letters));
}

FreeWord power(const FreeWord& w, int exponent) {
  const FreeWord base = exponent < 0 ? invert(w) : w;
  std::vector<FreeLetter> letters;
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  }
  return FreeWord(w.alphabet(), std::move(letters));
}

FreeWord conjugate(const FreeWord& w, const FreeWord& g) { return multiply(multiply(invert(g), w), g); }

FreeWord commutator(const FreeWord& u, const FreeWord& w) {
  return multiply(multiply(invert(u), invert(w)), multiply(u, w));
}

int log_sum(const FreeWord& w, int symbol) {
  int total = 0;
  for (const FreeLetter& letter : w.letters()) {
    if (letter.symbol == symbol) total += letter.sign;
  }
  return total;
}

}  // namespace twinlab
