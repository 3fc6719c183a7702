#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twinlab {

/// Ordered set of named free generators. Symbols are 0-based indices.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Names prefix+first, prefix+(first+1), ... (e.g. x1..x7).
  static std::shared_ptr<const Alphabet> indexed(std::string_view prefix, int count, int first = 1);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int symbol) const { return names_.at(static_cast<std::size_t>(symbol)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

struct FreeLetter {
  int symbol = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word over an alphabet. Construction always reduces.
class FreeWord {
 public:
  explicit FreeWord(AlphabetPtr alphabet);
  FreeWord(AlphabetPtr alphabet, std::vector<FreeLetter> letters);

  /// symbol^exponent.
  static FreeWord generator(AlphabetPtr alphabet, int symbol, int exponent = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<FreeLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// "x4 x5^-1", with runs collapsed to powers; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_ && *a.alphabet_ == *b.alphabet_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<FreeLetter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
std::vector<FreeLetter> free_reduce(std::vector<FreeLetter> letters);

/// Throws std::invalid_argument when the words use different alphabets.
FreeWord multiply(const FreeWord& u, const FreeWord& w);
FreeWord invert(const FreeWord& w);
FreeWord power(const FreeWord& w, int exponent);
FreeWord conjugate(const FreeWord& w, const FreeWord& g);
FreeWord commutator(const FreeWord& u, const FreeWord& w);

/// Signed exponent sum of `symbol` in w.
int log_sum(const FreeWord& w, int symbol);

}  // namespace twinlab
