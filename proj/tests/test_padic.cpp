#include <doctest.h>

#include <random>

#include "bellift/errors.hpp"
#include "bellift/padic.hpp"

using namespace bellift;

TEST_CASE("expansion of 1/29 in Z_7") {
  const PadicInt x = from_rat(make_rat(1, 29), 7, 6);
  CHECK(digits(x) == std::vector<unsigned long>{1, 3, 1, 1, 2, 5});
  CHECK(unit_inverse(from_int(29, 7, 6)) == x);
}

TEST_CASE("construction reduces the residue") {
  CHECK(from_int(-6, 7, 2).residue() == 43);
  CHECK(PadicInt(5, 1, 12).residue() == 2);
  CHECK_THROWS_AS(PadicInt(1, 3, 0), Error);
  CHECK_THROWS_AS(PadicInt(5, 0, 0), Error);
}

TEST_CASE("arithmetic") {
  const PadicInt two = from_int(2, 5, 2);
  CHECK(pow(two, 5).residue() == 7);
  CHECK((two * two).residue() == 4);
  CHECK((two - from_int(3, 5, 2)).residue() == 24);
  CHECK((-two).residue() == 23);
  const PadicInt coarse = from_int(7, 5, 1);
  CHECK((two + coarse).precision() == 1);
  CHECK_THROWS_AS(two + from_int(2, 7, 2), Error);
}

TEST_CASE("valuation is exact or a lower bound") {
  const auto v = valuation(from_int(50, 5, 4));
  CHECK(v.is_exact());
  CHECK(v.value() == 2);
  const auto z = valuation(from_int(625, 5, 4));
  CHECK_FALSE(z.is_exact());
  CHECK(z.value() == 4);
  CHECK(z.to_string() == ">=4");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(from_rat(make_rat(1, 7), 7, 3), Error);
  CHECK_THROWS_AS(unit_inverse(from_int(14, 7, 3)), Error);
  try {
    unit_inverse(from_int(14, 7, 3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
}

TEST_CASE("printing and JSON round trip") {
  const PadicInt x = from_int(239, 7, 3);
  CHECK(to_string(x) == "1 + 6*7 + 4*7^2 + O(7^3)");
  const auto j = to_json(x);
  CHECK(j["p"] == 7);
  CHECK(padic_from_json(j) == x);
}

TEST_CASE("ring operations match integer arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (Prime p : {2UL, 3UL, 13UL}) {
    for (int i = 0; i < 200; ++i) {
      const Int a(dist(rng));
      const Int b(dist(rng));
      const unsigned long n = 1 + i % 9;
      CHECK(from_int(a, p, n) + from_int(b, p, n) == from_int(a + b, p, n));
      CHECK(from_int(a, p, n) * from_int(b, p, n) == from_int(a * b, p, n));
      if (mpz_divisible_ui_p(b.get_mpz_t(), p) == 0) {
        CHECK(from_int(a, p, n) * unit_inverse(from_int(b, p, n)) == from_rat(make_rat(a, b), p, n));
      }
    }
  }
}
