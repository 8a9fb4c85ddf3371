#include "cubewalk/bitspace.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "support/brute_force.hpp"

using namespace cubewalk;

TEST(bitspace, xor_sum_examples) {
  EXPECT_EQ(xor_sum(parse_set("100,010,001", 3)).bits(), 0b111u);
  EXPECT_EQ(xor_sum(ConnectionSet::empty(3)).bits(), 0u);
  EXPECT_EQ(xor_sum(parse_set("100,010,001,111", 3)).bits(), 0u);
}

TEST(bitspace, dot_parity_examples) {
  const auto e = [](Label x) { return GroupElement(x, 3); };
  EXPECT_EQ(dot_parity(e(0b111), e(0b101)), 0);
  EXPECT_EQ(dot_parity(e(0b111), e(0b100)), 1);
  for (Label a = 0; a < 8; ++a) EXPECT_EQ(dot_parity(e(a), e(0)), 0);
}

TEST(bitspace, dot_parity_dimension_mismatch) {
  EXPECT_THROW(dot_parity(GroupElement(1, 3), GroupElement(1, 4)), InvalidInput);
}

TEST(bitspace, dot_parity_bilinear_exhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const Label order = Label{1} << n;
    for (Label a = 0; a < order; ++a)
      for (Label b = 0; b < order; ++b)
        for (Label c = 0; c < order; ++c) {
          const GroupElement ea(a, n), eb(b, n), ec(c, n);
          ASSERT_EQ(dot_parity(ea ^ eb, ec), dot_parity(ea, ec) ^ dot_parity(eb, ec));
          ASSERT_EQ(dot_parity(ea, ec), reference::bit_dot(a, c, n));
        }
  }
}

TEST(bitspace, parse_set_examples) {
  const auto s = parse_set("100,010,001", 3);
  EXPECT_EQ(std::vector<Label>(s.elements().begin(), s.elements().end()),
            (std::vector<Label>{1, 2, 4}));
  EXPECT_EQ(s.degree(), 3);
  EXPECT_EQ(s.u().bits(), 7u);

  const auto h = parse_set("0x7", 3);
  EXPECT_EQ(h.degree(), 1);
  EXPECT_EQ(h.u().bits(), 7u);

  EXPECT_THROW(parse_set("000", 3), InvalidInput);
}

TEST(bitspace, parse_set_errors) {
  EXPECT_THROW(parse_set("10", 3), InvalidInput);        // wrong width
  EXPECT_THROW(parse_set("1a0", 3), InvalidInput);       // malformed
  EXPECT_THROW(parse_set("100,100", 3), InvalidInput);   // duplicate
  EXPECT_THROW(parse_set("100,0x4", 3), InvalidInput);   // duplicate across formats
  EXPECT_THROW(parse_set("0x8", 3), InvalidInput);       // >= 2^n
  EXPECT_THROW(parse_set("0x0", 3), InvalidInput);       // zero
  EXPECT_THROW(parse_set("100,,010", 3), InvalidInput);  // empty token
  EXPECT_THROW(parse_set("0xZZ", 3), InvalidInput);
  EXPECT_THROW(ConnectionSet(3, {1, 1}), InvalidInput);
  EXPECT_THROW(ConnectionSet(25, {}), InvalidInput);
  EXPECT_THROW(ConnectionSet(0, {}), InvalidInput);
}

TEST(bitspace, empty_text_is_empty_set) {
  EXPECT_TRUE(parse_set("", 4).empty());
  EXPECT_EQ(format_set(ConnectionSet::empty(4)), "");
}

TEST(bitspace, format_parse_round_trip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto set = reference::random_set(n, rng, true);
    ASSERT_EQ(parse_set(format_set(set), n), set);
  }
  EXPECT_EQ(format_set(parse_set("111,001", 3)), "001,111");
}

TEST(bitspace, u_independent_of_order) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto set = reference::random_set(n, rng);
    std::vector<Label> elems(set.elements().begin(), set.elements().end());
    for (int perm = 0; perm < 5; ++perm) {
      std::shuffle(elems.begin(), elems.end(), rng);
      Label folded = 0;
      for (Label x : elems) folded ^= x;
      ASSERT_EQ(folded, set.u().bits());
      ASSERT_EQ(ConnectionSet(n, elems), set);
    }
  }
}

TEST(bitspace, group_element_basics) {
  EXPECT_EQ(GroupElement::basis(3, 1).bits(), 0b100u);
  EXPECT_EQ(GroupElement::basis(3, 3).bits(), 0b001u);
  EXPECT_EQ(GroupElement::all_ones(5).bits(), 31u);
  const GroupElement x(0b1011, 4);
  EXPECT_TRUE((x ^ x).is_zero());
  EXPECT_THROW(GroupElement(16, 4), InvalidInput);
  EXPECT_THROW(GroupElement(1, 3) ^ GroupElement(1, 4), InvalidInput);
  EXPECT_EQ(format_element(x), "1011");
  EXPECT_EQ(parse_element("0xb", 4), x);
}

TEST(bitspace, from_mask_labels) {
  const auto s = ConnectionSet::from_mask(2, 0b101);
  EXPECT_EQ(format_set(s), "01,11");
  EXPECT_EQ(format_set(ConnectionSet::hypercube(3)), "001,010,100");
}
