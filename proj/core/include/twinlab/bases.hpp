#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "twinlab/free_group.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Named free basis of a pure twin group: generator k of `alphabet` is
/// `words[k]`, defined in the source file by `expressions[k]`.
struct BasisTable {
  std::string prefix;
  int strands = 0;
  AlphabetPtr alphabet;
  std::vector<TwinWord> words;
  std::vector<std::string> expressions;

  const TwinWord& word(int symbol) const { return words.at(static_cast<std::size_t>(symbol)); }
};

struct BasisFile {
  int version = 0;
  std::vector<BasisTable> tables;

  /// Throws std::out_of_range if no block uses the prefix.
  const BasisTable& table(std::string_view prefix) const;
};

/// Parses the basis file format; throws ParseError with a line-qualified
/// message on malformed input.
BasisFile parse_basis_file(std::string_view text);
BasisFile load_basis_file(const std::filesystem::path& path);

/// The basis file compiled into the library (a copy of data/bases.txt).
std::string_view default_basis_text();
const BasisFile& default_bases();

/// x_1..x_7 in T_4 and a_1..a_31 in T_5, from the compiled-in file.
const BasisTable& x_basis();
const BasisTable& a_basis();

/// Substitutes each generator of w by its twin word.
TwinWord evaluate(const FreeWord& w, const BasisTable& basis);

}  // namespace twinlab
