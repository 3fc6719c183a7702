#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twinlab/free_group.hpp"
#include "twinlab/twin_word.hpp"

namespace twinlab {

/// Syntax or range error in a word expression, with the 0-based character
/// offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, std::vector<std::string> expected = {});

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Grammar shared by both parsers:
//   expr    := term (('*')? term)*
//   term    := primary ('^' power)*
//   power   := '-'? integer | primary       (w^g means g^-1 w g)
//   primary := atom | '1' | '(' expr ')'
// Twin atoms are t<k> with 1 <= k <= strands-1; free atoms are alphabet names.

TwinWord parse_twin_expression(std::string_view text, int strands);
FreeWord parse_free_expression(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace twinlab
