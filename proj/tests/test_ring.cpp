#include <gtest/gtest.h>

#include <random>

#include "censym/errors.hpp"
#include "censym/ring.hpp"

using namespace censym;

namespace {

std::vector<Ring> ring_grid() {
  return {Ring::integers(),       Ring::rationals(),         Ring::parse("zmod:4"), Ring::parse("gf:2"),
          Ring::parse("gf:5"),    Ring::parse("zmod:9"),     Ring::parse("c2:int"), Ring::parse("c2:zmod:4"),
          Ring::parse("c2:rat"),  Ring::parse("c2:c2:gf:3")};
}

}  // namespace

TEST(Ring, Literals) {
  EXPECT_EQ(Ring::parse("int").literal(), "int");
  EXPECT_EQ(Ring::parse("rat").literal(), "rat");
  EXPECT_EQ(Ring::parse("zmod:7").literal(), "gf:7");
  EXPECT_EQ(Ring::parse("zmod:4").literal(), "zmod:4");
  EXPECT_EQ(Ring::parse("c2:zmod:4").literal(), "c2:zmod:4");
  EXPECT_EQ(Ring::parse("gf:5"), Ring::modular(5));
  EXPECT_EQ(Ring::parse("c2:int").base(), Ring::integers());
  EXPECT_EQ(Ring::parse("c2:c2:rat").depth(), 2);
}

TEST(Ring, BadLiterals) {
  for (const char* lit : {"", "integer", "zmod:", "zmod:1", "zmod:x", "gf:4", "gf:1", "c2:", "c2:foo", "rat:3"}) {
    EXPECT_THROW(Ring::parse(lit), std::invalid_argument) << lit;
  }
}

TEST(Ring, FieldFlags) {
  EXPECT_FALSE(Ring::integers().is_field());
  EXPECT_TRUE(Ring::rationals().is_field());
  EXPECT_TRUE(Ring::parse("gf:2").is_field());
  EXPECT_FALSE(Ring::parse("zmod:9").is_field());
  EXPECT_FALSE(Ring::parse("c2:rat").is_field());
  EXPECT_EQ(Ring::parse("c2:zmod:4").cardinality(), 16);
}

TEST(Ring, Arith) {
  const Ring z4 = Ring::parse("zmod:4");
  EXPECT_EQ(arith(ArithOp::mul, z4.from_int(2), z4.from_int(3)), z4.from_int(2));
  EXPECT_EQ(z4.from_int(6).to_string(), "2");
  EXPECT_EQ(z4.from_int(-1).to_string(), "3");

  const Ring c2 = Ring::parse("c2:int");
  const auto a = c2.parse_element("1+1*x");
  const auto b = c2.parse_element("1+-1*x");
  EXPECT_TRUE(arith(ArithOp::mul, a, b).is_zero());

  const Ring q = Ring::rationals();
  EXPECT_EQ(arith(ArithOp::add, q.parse_element("1/2"), q.parse_element("1/3")).to_string(), "5/6");
  EXPECT_EQ(q.parse_element("-4/6").to_string(), "-2/3");
}

TEST(Ring, Mismatch) {
  const auto a = Ring::integers().one();
  const auto b = Ring::rationals().one();
  try {
    arith(ArithOp::add, a, b);
    FAIL() << "no exception";
  } catch (const RingMismatchError& e) {
    EXPECT_EQ(e.lhs(), "int");
    EXPECT_EQ(e.rhs(), "rat");
  }
  EXPECT_THROW(a * b, RingMismatchError);
}

TEST(Ring, InvertTwo) {
  EXPECT_EQ(invert_two(Ring::parse("zmod:9"))->to_string(), "5");
  EXPECT_EQ(invert_two(Ring::rationals())->to_string(), "1/2");
  EXPECT_FALSE(invert_two(Ring::integers()));
  EXPECT_FALSE(invert_two(Ring::parse("gf:2")));
  EXPECT_FALSE(invert_two(Ring::parse("zmod:4")));
  EXPECT_TRUE(invert_two(Ring::parse("c2:gf:3")));
}

TEST(Ring, GroupRing) {
  const Ring f2 = Ring::parse("c2:zmod:2");
  const auto u = f2.one() + f2.generator();
  EXPECT_TRUE((u * u).is_zero());

  const Ring q = Ring::parse("c2:rat");
  const auto e = q.parse_element("1/2+1/2*x");
  EXPECT_EQ(e * e, e);

  const Ring z = Ring::parse("c2:int");
  EXPECT_TRUE((z.generator() * z.generator()).is_one());
  EXPECT_NE(z.generator(), z.one());
  auto [a, b] = z.parse_element("3+2*x").split();
  EXPECT_EQ(a.to_string(), "3");
  EXPECT_EQ(b.to_string(), "2");
  EXPECT_EQ(RingElt::combine(a, b), z.parse_element("3+2*x"));
}

TEST(Ring, Units) {
  EXPECT_TRUE(Ring::integers().from_int(-1).is_unit());
  EXPECT_FALSE(Ring::integers().from_int(2).is_unit());
  const Ring z9 = Ring::parse("zmod:9");
  EXPECT_FALSE(z9.from_int(3).is_unit());
  EXPECT_EQ(*z9.from_int(2).inverse(), z9.from_int(5));
  // x is its own inverse; 1+x is a zero divisor.
  const Ring c2 = Ring::parse("c2:int");
  EXPECT_EQ(*c2.generator().inverse(), c2.generator());
  EXPECT_FALSE((c2.one() + c2.generator()).inverse());
}

TEST(Ring, BadElements) {
  EXPECT_THROW(Ring::integers().parse_element("1/2"), ParseError);
  EXPECT_THROW(Ring::integers().parse_element("x"), ParseError);
  EXPECT_THROW(Ring::rationals().parse_element("1/0"), ParseError);
  EXPECT_THROW(Ring::rationals().parse_element("4/-6"), ParseError);
  EXPECT_THROW(Ring::parse("c2:int").parse_element("1+2*y"), ParseError);
}

class RingAxioms : public ::testing::TestWithParam<Ring> {};

TEST_P(RingAxioms, RandomTriples) {
  const Ring r = GetParam();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = r.random(rng), b = r.random(rng), c = r.random(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * r.one(), a);
    ASSERT_EQ(a + r.zero(), a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(r.parse_element(a.to_string()), a) << a.to_string();
    if (auto inv = a.inverse()) {
      ASSERT_TRUE((a * *inv).is_one());
    }
  }
}

TEST_P(RingAxioms, FiniteElementsExhaustive) {
  const Ring r = GetParam();
  if (!r.is_finite() || r.cardinality() > 16) GTEST_SKIP();
  const auto all = r.elements();
  ASSERT_EQ(mpz_class(static_cast<unsigned long>(all.size())), r.cardinality());
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) ASSERT_EQ((a + b) * c, a * c + b * c);
}

INSTANTIATE_TEST_SUITE_P(Grid, RingAxioms, ::testing::ValuesIn(ring_grid()),
                         [](const auto& info) {
                           std::string s = info.param.literal();
                           for (auto& ch : s)
                             if (ch == ':') ch = '_';
                           return s;
                         });
