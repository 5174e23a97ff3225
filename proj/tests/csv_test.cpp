/*
 * Copyright 2026 The semcn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "semcn/core_model.hpp"
#include "semcn/csv.hpp"

namespace semcn::csv {
namespace {

TEST(Csv, NumbersUseShortestRoundTripForm) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  EXPECT_EQ(format_number(1e-27), "1e-27");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_TRUE(std::isinf(parse_number("inf")));
  EXPECT_LT(parse_number("-inf"), 0.0);
  EXPECT_TRUE(std::isnan(parse_number("nan")));
  EXPECT_THROW(parse_number("1.5x"), ValidationError);
  EXPECT_THROW(parse_number(""), ValidationError);
}

TEST(Csv, RandomDoublesRoundTripBitExactly) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int i = 0; i < 2000; ++i) {
    const double v = (rng() & 1 ? -1.0 : 1.0) * std::pow(10.0, exponent(rng)) * (1.0 + (rng() % 1000) / 1000.0);
    EXPECT_EQ(parse_number(format_number(v)), v);
  }
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  Table t{{"a", "b"}, {{"plain", "has,comma"}, {"say \"hi\"", "two\nlines"}, {"", "x"}}};
  EXPECT_EQ(to_string(t), "a,b\nplain,\"has,comma\"\n\"say \"\"hi\"\"\",\"two\nlines\"\n,x\n");
}

TEST(Csv, WriteReadRoundTrip) {
  Table t{{"kind", "value", "note"},
          {{"task", "0.25", "a,b"}, {"summary", "inf", "quote\"d"}, {"", "", "multi\r\nline"}}};
  EXPECT_EQ(parse(to_string(t)), t);
}

TEST(Csv, ReadsCrlfAndRejectsRaggedRows) {
  const Table t = parse("a,b\r\n1,2\r\n");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][1], "2");
  EXPECT_THROW(parse("a,b\n1,2,3\n"), ValidationError);
  EXPECT_THROW(parse("a,b\n1\n"), ValidationError);
  EXPECT_THROW(parse("a,b\n\"open,1\n"), ValidationError);
}

TEST(Csv, ColumnLookup) {
  const Table t{{"x", "y"}, {}};
  EXPECT_EQ(t.column("y"), 1u);
  EXPECT_THROW(t.column("z"), ValidationError);
}

}  // namespace
}  // namespace semcn::csv
