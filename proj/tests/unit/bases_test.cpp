#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "twinlab/bases.hpp"
#include "twinlab/expression.hpp"
#include "twinlab/stallings.hpp"

namespace twinlab {
namespace {

TEST(Bases, DataFileMatchesTheCompiledInTable) {
  const std::string path = std::string(TWINLAB_DATA_DIR) + "/bases.txt";
  std::ifstream in(path);
  ASSERT_TRUE(in) << path;
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), std::string(default_basis_text()));

  const BasisFile loaded = load_basis_file(path);
  ASSERT_EQ(loaded.tables.size(), default_bases().tables.size());
  for (std::size_t t = 0; t < loaded.tables.size(); ++t) {
    const BasisTable& a = loaded.tables[t];
    const BasisTable& b = default_bases().tables[t];
    EXPECT_EQ(a.prefix, b.prefix);
    EXPECT_EQ(a.strands, b.strands);
    EXPECT_EQ(a.expressions, b.expressions);
    EXPECT_EQ(a.words, b.words);
  }
}

TEST(Bases, ShapesAndPurity) {
  EXPECT_EQ(x_basis().strands, 4);
  EXPECT_EQ(x_basis().words.size(), 7u);
  EXPECT_EQ(a_basis().strands, 5);
  EXPECT_EQ(a_basis().words.size(), 31u);
  for (const auto* table : {&x_basis(), &a_basis()}) {
    for (const auto& w : table->words) EXPECT_TRUE(is_pure(w));
  }
  EXPECT_EQ(x_basis().expressions[3], "((t1 t2)^3)^(t3 t2 t1)");
  EXPECT_THROW(default_bases().table("z"), std::out_of_range);
}

TEST(Bases, GeneratorsArePairwiseDistinct) {
  for (const auto* table : {&x_basis(), &a_basis()}) {
    for (std::size_t i = 0; i < table->words.size(); ++i) {
      for (std::size_t j = i + 1; j < table->words.size(); ++j) {
        EXPECT_FALSE(testing::matrix_equal(table->words[i], table->words[j])) << i << " " << j;
      }
    }
  }
}

TEST(Bases, EvaluateSubstitutesGenerators) {
  const FreeWord f = parse_free_expression("x4 x5^-1", x_basis().alphabet);
  const TwinWord w = evaluate(f, x_basis());
  EXPECT_TRUE(testing::matrix_equal(w, multiply(x_basis().word(3), invert(x_basis().word(4)))));
}

TEST(BasisFileFormat, ReportsTheOffendingLine) {
  auto message = [](const std::string& text) {
    try {
      parse_basis_file(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("version 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("version 1\nbasis x 3\nx2 = (t1 t2)^3\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("version 1\nbasis x 3\nx1 = t1\n").find("not a pure twin"), std::string::npos);
  EXPECT_NE(message("version 1\nbasis x 3\nx1 = (t1 t2\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("version 1\nx1 = (t1 t2)^3\n").find("outside"), std::string::npos);
}

TEST(BasisFileFormat, AcceptsCommentsAndBlankLines) {
  const BasisFile f = parse_basis_file("# header\nversion 1\n\nbasis y 3  # PT_3\ny1 = (t1 t2)^3\n");
  ASSERT_EQ(f.tables.size(), 1u);
  EXPECT_EQ(f.table("y").words.size(), 1u);
  EXPECT_EQ(f.table("y").alphabet->name(0), "y1");
}

TEST(Bases, XBasisFreelyGeneratesRankSeven) {
  const BasisTable& x = x_basis();
  std::vector<FreeWord> gens;
  for (int s = 0; s < 7; ++s) gens.push_back(FreeWord::generator(x.alphabet, s));
  EXPECT_EQ(fold(x.alphabet, gens).rank(), 7);
}

}  // namespace
}  // namespace twinlab
