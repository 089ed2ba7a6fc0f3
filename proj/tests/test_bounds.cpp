#include <doctest.h>

#include "oracles.hpp"
#include "orientable/bounds.hpp"
#include "orientable/errors.hpp"

using namespace orientable;

namespace {

struct Row {
  std::size_t n;
  long long lower;
  long long upper;
};

// n, L_n, U_n
constexpr Row kTable[] = {
    {5, 0, 6},           {6, 6, 17},          {7, 14, 40},         {8, 48, 96},
    {9, 126, 206},       {10, 300, 443},      {11, 682, 918},      {12, 1530, 1908},
    {13, 3276, 3882},    {14, 6916, 7905},    {15, 14520, 15948},  {16, 29808, 32192},
    {17, 61200, 64662},  {18, 124368, 129911}, {19, 252434, 260386}, {20, 509220, 521964},
};

// Upper bound on acyclic sequences, n = 6..20.
constexpr long long kAosUpper[] = {33,   62,   127,   248,   505,   1002,   2027,  4044,
                                   8141, 16270, 32655, 65296, 130833, 261650, 523795};

}  // namespace

TEST_CASE("integer formatting") {
  CHECK(to_string(Int128{0}) == "0");
  CHECK(to_string(Int128{-42}) == "-42");
  CHECK(to_string(Int128{1} << 100) == "1267650600228229401496703205376");
}

TEST_CASE("mobius") {
  const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::size_t n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n - 1]);
  CHECK(mobius(30) == -1);
  CHECK(mobius(64) == 0);
}

TEST_CASE("lower and upper bounds match the published table, n = 5..20") {
  for (const Row& r : kTable) {
    CAPTURE(r.n);
    CHECK(lower_bound_L(r.n) == r.lower);
    CHECK(upper_bound_U(r.n) == r.upper);
  }
}

TEST_CASE("trivial and acyclic upper bounds") {
  CHECK(trivial_upper_bound(5) == 12);
  CHECK(trivial_upper_bound(2) == 1);
  CHECK(trivial_upper_bound(9) == 240);
  for (std::size_t n = 6; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(aos_upper_bound(n) == kAosUpper[n - 6]);
    CHECK(aos_upper_bound(n) == trivial_upper_bound(n) + Int128(n - 1));
  }
  CHECK(trivial_upper_bound(64) == (Int128{1} << 63) - (Int128{1} << 31));
}

TEST_CASE("L_n counts S(n) word by word, n <= 14") {
  for (std::size_t n = 2; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(lower_bound_L(n) == Int128(oracle::size_of_S(n)));
  }
}

TEST_CASE("property: formula and enumeration agree, n = 6..20") {
  for (std::size_t n = 6; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(lower_bound_L(n, LowerBoundMethod::formula) == lower_bound_L(n, LowerBoundMethod::enumeration));
  }
}

TEST_CASE("asymmetric bracelet counts") {
  CHECK(count_asymmetric_bracelets(9) == 14);
  CHECK(count_asymmetric_bracelets(6) == 1);
  CHECK(count_asymmetric_bracelets(15) == 968);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(count_asymmetric_bracelets(n) == Int128(oracle::asymmetric_bracelets(n).size()));
  }
  CHECK_THROWS_AS(count_asymmetric_bracelets(kMaxEnumerationOrder + 1), UnsupportedSize);
}

TEST_CASE("property: n |A(n)| <= 2 L_n, n = 6..20") {
  for (std::size_t n = 6; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(Int128(n) * count_asymmetric_bracelets(n) <= 2 * lower_bound_L(n));
  }
}

TEST_CASE("property: L_n relative to the trivial bound does not decrease, n = 8..20") {
  for (std::size_t n = 8; n < 20; ++n) {
    CAPTURE(n);
    // L_n / T_n <= L_{n+1} / T_{n+1}, cross-multiplied
    CHECK(lower_bound_L(n) * trivial_upper_bound(n + 1) <= lower_bound_L(n + 1) * trivial_upper_bound(n));
  }
}

TEST_CASE("bound ordering, n = 6..64") {
  for (std::size_t n = 6; n <= kMaxBoundOrder; ++n) {
    CAPTURE(n);
    CHECK(lower_bound_L(n) <= upper_bound_U(n));
    CHECK(upper_bound_U(n) <= trivial_upper_bound(n));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS(lower_bound_L(1));
  CHECK_THROWS(upper_bound_U(4));
  CHECK_THROWS_AS(lower_bound_L(kMaxBoundOrder + 1), UnsupportedSize);
  const auto rec = bounds_record(9);
  CHECK(rec.lower == 126);
  CHECK(rec.upper == Int128{206});
  CHECK(rec.aos_upper == 248);
  CHECK(rec.asym_count == Int128{14});
  CHECK_FALSE(bounds_record(30).asym_count.has_value());
  CHECK_FALSE(bounds_record(4).upper.has_value());
}
