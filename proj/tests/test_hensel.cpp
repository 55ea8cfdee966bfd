#include <doctest.h>

#include <random>

#include "bellift/errors.hpp"
#include "bellift/hensel.hpp"

using namespace bellift;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

// f with a known integer root: (x - root) * cofactor.
IntPolynomial planted(const Int& root, const std::vector<Int>& cofactor) {
  return IntPolynomial({-root, 1}) * IntPolynomial(cofactor);
}

}  // namespace

TEST_CASE("Taylor shift") {
  const IntPolynomial f({1, 11, -5});
  const auto s = taylor_shift(f, 1, 7, 0);
  CHECK(s.cs == std::vector<Int>{7, 1, -5});
  const IntPolynomial g({17, 6, 2});
  CHECK(taylor_shift(g, 1, 5, 1).cs == std::vector<Int>{1, 2, 2});
  CHECK(code_of([&] { taylor_shift(g, 1, 5, 2); }) == Errc::NonIntegralShift);
}

TEST_CASE("simple lift of 1 + 11x - 5x^2 over Z_7") {
  const IntPolynomial f({1, 11, -5});
  const auto r = lift_simple(f, 1, 7, 3);
  CHECK(r.root.residue() == 239);
  for (int seed : {1, 4}) {
    const auto deep = lift_simple(f, seed, 7, 40);
    CHECK(deep.residual_valuation.value() >= 40);
    CHECK(deep.root == newton_lift(f, seed, 7, 40));
    CHECK(deep.root == lift_quadratic(1, 11, -5, seed, 7, 40).root);
  }
}

TEST_CASE("simple lift errors") {
  const IntPolynomial f({1, 11, -5});
  CHECK(code_of([&] { lift_simple(f, 2, 7, 5); }) == Errc::NotARootModP);
  CHECK(code_of([&] { lift_simple(f, 1, 2, 5); }) == Errc::EvenPrime);
  CHECK(code_of([&] { lift_simple(IntPolynomial({9, 0, 1}), 0, 3, 5); }) == Errc::DerivativeNotUnit);
  CHECK(code_of([&] { lift_sparse(3, 1, 1, 1, 3, 2, 5, 5); }) == Errc::BadExponents);
  CHECK(code_of([&] { lift_sparse(1, 1, 1, 1, 2, 3, 5, 5); }) == Errc::NotDivisible);
  CHECK(code_of([&] { lift_sparse(5, 5, 1, 1, 2, 3, 5, 5); }) == Errc::DerivativeNotUnit);
  CHECK(code_of([&] { teichmuller(0, 5, 3); }) == Errc::OutOfRange);
  CHECK(code_of([&] { teichmuller(5, 5, 3); }) == Errc::OutOfRange);
}

TEST_CASE("root series length covers every omitted term") {
  for (Prime p : {3UL, 5UL, 7UL}) {
    for (unsigned long v = 1; v <= 3; ++v) {
      for (unsigned long N = 1; N <= 60; N += 7) {
        const auto K = root_series_length(v, p, N);
        for (std::size_t n = K; n < K + 200; ++n) {
          REQUIRE(v * (n + 1) >= N + vp_factorial(n + 1, p));
        }
        if (K > 0) CHECK(v * K < N + vp_factorial(K, p));
      }
    }
  }
  CHECK(code_of([] { root_series_length(1, 2, 5); }) == Errc::EvenPrime);
}

TEST_CASE("random simple lifts agree with Newton") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> dist(-20, 20);
  int lifted = 0;
  for (int trial = 0; trial < 300 && lifted < 80; ++trial) {
    const Prime p = std::vector<Prime>{3, 5, 7, 11, 13}[trial % 5];
    std::vector<Int> c;
    for (int i = 0; i < 1 + trial % 5; ++i) c.emplace_back(dist(rng));
    c.emplace_back(1 + trial % 3);
    const IntPolynomial f(c);
    for (unsigned long r = 0; r < p; ++r) {
      const Int seed(r);
      if (mod(f(seed), Int(p)) != 0 || mod(f.derivative()(seed), Int(p)) == 0) continue;
      const auto series = lift_simple(f, seed, p, 25);
      CHECK(series.root == newton_lift(f, seed, p, 25));
      ++lifted;
    }
  }
  CHECK(lifted >= 40);
}

TEST_CASE("cubic and sparse specializations agree with Newton") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Prime p = std::vector<Prime>{3, 5, 7}[trial % 3];
    const Int a1 = dist(rng) * Int(p) + 1 + trial % (p - 1);
    const Int a0 = Int(p) * dist(rng);
    const Int a2 = dist(rng);
    const Int a3 = dist(rng);
    if (a3 == 0) continue;
    const IntPolynomial cubic({a0, a1, a2, a3});
    CHECK(lift_cubic(a0, a1, a2, a3, 0, p, 20).root == newton_lift(cubic, 0, p, 20));
    const unsigned long l = 2 + trial % 3;
    const unsigned long m = l + 1 + trial % 4;
    std::vector<Int> sparse(m + 1, Int(0));
    sparse[0] = a0;
    sparse[1] = a1;
    sparse[l] = a2;
    sparse[m] = a3;
    CHECK(lift_sparse(a0, a1, a2, a3, l, m, p, 20).root == newton_lift(IntPolynomial(sparse), 0, p, 20));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("cubic lift at a nonzero seed") {
  const IntPolynomial f({-10, 3, -1, 1});
  for (unsigned long r = 0; r < 5; ++r) {
    if (mod(f(Int(r)), Int(5)) != 0 || mod(f.derivative()(Int(r)), Int(5)) == 0) continue;
    CHECK(lift_cubic(-10, 3, -1, 1, r, 5, 30).root == newton_lift(f, r, 5, 30));
  }
}

TEST_CASE("general lift recovers planted integer roots") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> dist(-30, 30);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p = std::vector<Prime>{2, 3, 5, 7}[trial % 4];
    const unsigned long kappa = 1 + trial % 2;
    const Int root = dist(rng);
    // Second root congruent mod p^kappa but not mod p^{kappa+1}: v(f'(root)) = kappa.
    const Int other = root + prime_power(p, kappa) * (1 + trial % (p - 1));
    if (vp(Int(other - root), p) != Valuation(static_cast<long>(kappa))) continue;
    const IntPolynomial f = planted(root, {-other, Int(1)});
    // Seed agrees with root mod p^{2 kappa + 2}.
    const unsigned long nu = 2 * kappa + 2;
    const Int seed = root + prime_power(p, nu) * dist(rng);
    const auto r = lift_general(f, seed, p, 30, {});
    CHECK(r.root == from_int(root, p, 30));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("general lift parameter checks") {
  const IntPolynomial f({17, 6, 2});
  CHECK(code_of([&] { lift_general(f, 1, 5, 10, {2, 1}); }) == Errc::InsufficientCongruence);
  CHECK(code_of([&] { lift_general(f, 6, 5, 10, {3, 0}); }) == Errc::DerivativeValuationMismatch);
  CHECK(code_of([&] { lift_general(f, 6, 5, 10, {9, 1}); }) == Errc::NotARootModP);
  // x^2 - 17 over Z_2 at 1: kappa = 1, nu = 4.
  const IntPolynomial g({-17, 0, 1});
  CHECK(lift_general(g, 1, 2, 20).residual_valuation.value() >= 20);
  // x^2 - 5 over Z_2 at 1: nu = 2, kappa = 1 fails.
  CHECK(code_of([&] { lift_general(IntPolynomial({-5, 0, 1}), 1, 2, 20); }) ==
        Errc::InsufficientCongruence);
}

TEST_CASE("double seed splits into two roots") {
  const IntPolynomial f({17, 6, 2});
  const auto roots = lift_rescaled(f, 1, 5, 1, 30);
  REQUIRE(roots.size() == 2);
  CHECK(mod(roots[0].root.residue(), Int(25)) == 6);
  CHECK(mod(roots[1].root.residue(), Int(25)) == 16);
  CHECK(lift_general(f, 6, 5, 30).root == roots[0].root);
  CHECK(lift_general(f, 16, 5, 30).root == roots[1].root);
}

TEST_CASE("Teichmuller lifts") {
  CHECK(teichmuller(2, 5, 2).residue() == 7);
  CHECK(teichmuller(1, 7, 5).residue() == 1);
  for (Prime p : {3UL, 5UL, 7UL}) {
    for (unsigned long q = 1; q < p; ++q) {
      const auto xi = teichmuller(q, p, 15);
      CHECK(xi == teichmuller_oracle(q, p, 15));
      CHECK(pow(xi, p - 1).residue() == 1);
    }
  }
}
