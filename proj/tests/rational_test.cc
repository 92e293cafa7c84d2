// Copyright 2026 The refpoint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "refpoint/rational.h"

#include <gtest/gtest.h>

namespace refpoint {
namespace {

TEST(RationalTest, StoresLowestTerms) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, Rational(-3, 4));
  EXPECT_EQ(Rational(0, 5), Rational(0));
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(7, 12) - Rational(-1, 4), Rational(5, 6));
  EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(-Rational(1, 12), Rational(-1, 12));
  EXPECT_LT(Rational(1, 6), Rational(1, 4));
  EXPECT_DOUBLE_EQ(Rational(5, 12).ToDouble(), 5.0 / 12.0);
}

TEST(RationalTest, ToString) {
  EXPECT_EQ(Rational(1, 2).ToString(), "1/2");
  EXPECT_EQ(Rational(4, 4).ToString(), "1");
  EXPECT_EQ(Rational(0).ToString(), "0");
  EXPECT_EQ(Rational(-5, 6).ToString(), "-5/6");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace refpoint
