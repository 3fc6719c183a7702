#include "twinlab/bases.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twinlab/expression.hpp"

namespace twinlab {

namespace detail {
extern const std::string_view kDefaultBasisText;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message, 0);
}

void finish(BasisFile& file, BasisTable& table, std::vector<std::string>& names) {
  if (table.prefix.empty()) return;
  table.alphabet = std::make_shared<const Alphabet>(std::move(names));
  file.tables.push_back(std::move(table));
  table = BasisTable{};
  names.clear();
}

}  // namespace

const BasisTable& BasisFile::table(std::string_view prefix) const {
  for (const auto& t : tables) {
    if (t.prefix == prefix) return t;
  }
  throw std::out_of_range("no basis with prefix " + std::string(prefix));
}

BasisFile parse_basis_file(std::string_view text) {
  BasisFile file;
  BasisTable current;
  std::vector<std::string> names;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string_view line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;

    std::istringstream words{std::string(line)};
    std::string keyword;
    words >> keyword;
    if (keyword == "version") {
      if (!(words >> file.version) || file.version != 1) fail(line_no, "unsupported version");
    } else if (keyword == "basis") {
      finish(file, current, names);
      if (!(words >> current.prefix >> current.strands) || current.strands < 2) fail(line_no, "malformed basis header");
      for (const auto& t : file.tables) {
        if (t.prefix == current.prefix) fail(line_no, "duplicate basis " + current.prefix);
      }
    } else {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail(line_no, "expected '<name> = <expression>'");
      if (current.prefix.empty()) fail(line_no, "definition outside a basis block");
      const std::string name(trim(line.substr(0, eq)));
      const std::string expected = current.prefix + std::to_string(names.size() + 1);
      if (name != expected) fail(line_no, "expected definition of " + expected + ", found " + name);
      const std::string expression(trim(line.substr(eq + 1)));
      try {
        current.words.push_back(parse_twin_expression(expression, current.strands));
      } catch (const ParseError& e) {
        fail(line_no, e.what());
      }
      if (!is_pure(current.words.back())) fail(line_no, name + " is not a pure twin");
      current.expressions.push_back(expression);
      names.push_back(name);
    }
  }
  finish(file, current, names);
  if (file.version == 0) throw ParseError("missing version line", 0);
  return file;
}

BasisFile load_basis_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_basis_file(buffer.str());
}

std::string_view default_basis_text() { return detail::kDefaultBasisText; }

const BasisFile& default_bases() {
  static const BasisFile file = parse_basis_file(default_basis_text());
  return file;
}

const BasisTable& x_basis() {
  static const BasisTable& table = default_bases().table("x");
  return table;
}

const BasisTable& a_basis() {
  static const BasisTable& table = default_bases().table("a");
  return table;
}

TwinWord evaluate(const FreeWord& w, const BasisTable& basis) {
  if (!(*w.alphabet() == *basis.alphabet)) throw std::invalid_argument("word is not over the basis alphabet");
  std::vector<int> letters;
  for (const FreeLetter& letter : w.letters()) {
    const TwinWord& g = basis.word(letter.symbol);
    const TwinWord piece = letter.sign > 0 ? g : invert(g);
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return tits_reduce(TwinWord(basis.strands, std::move(letters)));
}

}  // namespace twinlab
