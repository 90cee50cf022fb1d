#include <gtest/gtest.h>

#include "brute_oracle.hpp"
#include "wordchains/families.hpp"
#include "wordchains/semantics.hpp"

using namespace wordchains;

namespace {

Assignment h(std::string_view text, Mode mode = Mode::monoid) {
  return parse_assignment(text, mode);
}

}  // namespace

TEST(Apply, Examples) {
  EXPECT_EQ(apply(h("x=a, y=b, z=abab"), VarWord("xyz")), ConstWord("ababab"));
  EXPECT_TRUE(apply(h("x=a"), VarWord()).empty());
  EXPECT_THROW(apply(h("x=a, y=b"), VarWord("xyz")), UnmappedVariable);
  try {
    apply(h("x=a, y=b"), VarWord("xyz"));
  } catch (const UnmappedVariable& e) {
    EXPECT_EQ(e.variable(), 'z');
  }
}

TEST(Solves, Examples) {
  const Assignment w1 = h("x=a, y=b, z=abab");
  EXPECT_TRUE(solves(w1, parse_equation("xyz = zxy")));
  EXPECT_FALSE(solves(w1, parse_equation("xyxzyz = zxzyxy")));
  EXPECT_TRUE(solves(h("x=1, y=1"), parse_equation("xxy = yx")));
  EXPECT_THROW(solves(h("x=a"), parse_equation("xy = yx")), UnmappedVariable);
}

TEST(SolvesSystem, Examples) {
  const EquationSystem dc3 = chain_dc3().system;
  EXPECT_TRUE(solves_system(h("x=1, y=1, z=1"), dc3));
  EXPECT_FALSE(solves_system(h("x=a, y=b, z=abab"), dc3));
  EXPECT_TRUE(solves_system(h("x=ab"), EquationSystem{}));
}

TEST(AssignmentTest, SemigroupImagesNonempty) {
  EXPECT_THROW(h("x=1", Mode::semigroup), ParseError);
  EXPECT_THROW(Assignment(Alphabet("x"), {ConstWord()}, Mode::semigroup), std::invalid_argument);
  EXPECT_THROW(Assignment(Alphabet("xy"), {ConstWord("a")}), std::invalid_argument);
}

TEST(AssignmentTest, TextRoundTrip) {
  const Assignment a = h("x=a, y=1, z=abab");
  EXPECT_EQ(format_assignment(a), "x=a, y=1, z=abab");
  EXPECT_EQ(h(format_assignment(a)), a);
  EXPECT_EQ(parse_assignment("z=b, x=a", Alphabet("xz")).images()[0], ConstWord("a"));
  EXPECT_THROW(parse_assignment("x=a", Alphabet("xz")), ParseError);
  EXPECT_THROW(h("x=a, x=b"), ParseError);
  EXPECT_THROW(h("x=ac2"), ParseError);
  EXPECT_THROW(h("xa"), ParseError);
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(ConstWord("ab"), ConstWord("abab")));
  EXPECT_FALSE(commutes(ConstWord("a"), ConstWord("b")));
  EXPECT_TRUE(commutes(ConstWord(), ConstWord("aba")));
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(ConstWord("abab")), ConstWord("ab"));
  EXPECT_EQ(primitive_root(ConstWord("aaaaaa")), ConstWord("a"));
  EXPECT_EQ(primitive_root(ConstWord("ababa")), ConstWord("ababa"));
  EXPECT_EQ(primitive_root(ConstWord("ababa")), ConstWord(brute::root("ababa")));
  EXPECT_THROW(primitive_root(ConstWord()), std::invalid_argument);
}

TEST(PrimitiveRoot, MatchesBruteForceOnAllShortWords) {
  for (const auto& w : brute::words_up_to("ab", 1, 10)) {
    ASSERT_EQ(primitive_root(ConstWord(w)).symbols(), brute::root(w)) << w;
  }
}

TEST(Periodic, Examples) {
  EXPECT_TRUE(is_periodic(h("x=a, y=aa, z=a")));
  EXPECT_FALSE(is_periodic(h("x=a, y=b, z=ab")));
  EXPECT_TRUE(is_periodic(h("x=1, y=1, z=1")));
  EXPECT_TRUE(is_periodic(h("x=1, y=abab, z=ab")));
  EXPECT_TRUE(is_periodic_by_root(h("x=1, y=1, z=1")));
  EXPECT_FALSE(is_periodic_by_root(h("x=a, y=b, z=ab")));
}
