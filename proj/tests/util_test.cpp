#include <gtest/gtest.h>

#include <sstream>

#include "gtpmm/csv.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/money.hpp"
#include "gtpmm/rng.hpp"

namespace gtpmm {
namespace {

TEST(Money, Arithmetic) {
  EXPECT_EQ(Money(5) + Money(7), Money(12));
  EXPECT_EQ(3 * Money(7), Money(21));
  EXPECT_LT(Money(1), Money::infinity());
  EXPECT_TRUE(saturating_add(Money::infinity(), Money(1)).is_infinite());
  EXPECT_EQ(saturating_add(Money(2), Money(3)), Money(5));
}

TEST(Money, MajorString) {
  EXPECT_EQ(Money(1305).to_major_string(), "13.05");
  EXPECT_EQ(Money(7).to_major_string(), "0.07");
  EXPECT_EQ(Money(0).to_major_string(), "0.00");
}

TEST(FixedPoint, Parses) {
  EXPECT_EQ(parse_fixed_point("2.50", 2), 250);
  EXPECT_EQ(parse_fixed_point(" 4 ", 2), 400);
  EXPECT_EQ(parse_fixed_point("0.0125", 4), 125);
  EXPECT_EQ(parse_fixed_point("0.125", 2), 13);
  EXPECT_EQ(parse_fixed_point("0.124", 2), 12);
  EXPECT_EQ(parse_fixed_point(".5", 2), 50);
}

TEST(FixedPoint, Rejects) {
  EXPECT_THROW(parse_fixed_point("-1.00", 2), ConfigError);
  EXPECT_THROW(parse_fixed_point("", 2), ConfigError);
  EXPECT_THROW(parse_fixed_point("1.2.3", 2), ConfigError);
  EXPECT_THROW(parse_fixed_point("abc", 2), ConfigError);
}

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(g.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, UniformCoversRange) {
  SplitMix64 g(42);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = g.uniform(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) {
    EXPECT_GT(h, 850);
    EXPECT_LT(h, 1150);
  }
  for (int i = 0; i < 1000; ++i) {
    const double u = g.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(SplitMix64, MixSeedSeparatesStreams) {
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
  EXPECT_EQ(mix_seed(5, 9), mix_seed(5, 9));
}

TEST(Csv, QuotesCrlfAndBom) {
  std::istringstream in(
      "\xEF\xBB\xBF" "a,b,c\r\n"
      "1,\"x, y\",\"say \"\"hi\"\"\"\r\n"
      "\r\n"
      "2,\"multi\nline\",3\n");
  CsvReader csv(in, "t.csv");
  EXPECT_EQ(csv.header(), (std::vector<std::string>{"a", "b", "c"}));
  std::vector<std::string> row;
  ASSERT_TRUE(csv.next(row));
  EXPECT_EQ(row, (std::vector<std::string>{"1", "x, y", "say \"hi\""}));
  EXPECT_EQ(csv.line(), 2u);
  ASSERT_TRUE(csv.next(row));
  EXPECT_EQ(row[1], "multi\nline");
  EXPECT_EQ(csv.line(), 4u);
  EXPECT_FALSE(csv.next(row));
}

TEST(Csv, FieldCountMismatch) {
  std::istringstream in("a,b\n1,2\n3\n");
  CsvReader csv(in, "t.csv");
  std::vector<std::string> row;
  ASSERT_TRUE(csv.next(row));
  try {
    csv.next(row);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.file(), "t.csv");
  }
}

TEST(Csv, MissingColumn) {
  std::istringstream in("a,b\n");
  CsvReader csv(in, "t.csv");
  EXPECT_EQ(csv.column("b"), 1u);
  EXPECT_FALSE(csv.column("z", false));
  EXPECT_THROW(csv.column("z"), ParseError);
}

TEST(Csv, Escape) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("q\"t"), "\"q\"\"t\"");
}

}  // namespace
}  // namespace gtpmm
