#pragma once

// Exact integer and rational arithmetic plus p-adic valuation helpers.
//
// Int and Rat are GMP-backed. Every Rat produced by this library is in
// canonical form (reduced, positive denominator); build one from a
// numerator/denominator pair through make_rat, never through the raw
// two-argument mpq_class constructor.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bellift {

using Int = mpz_class;
using Rat = mpq_class;

/// Primes are machine words; coefficients are unbounded.
using Prime = unsigned long;

Rat make_rat(const Int& num, const Int& den);

/// Valuation of an exact quantity: a (possibly negative) integer, or
/// infinity for zero. Infinity compares greater than every finite value.
class Valuation {
 public:
  explicit Valuation(long value) : value_(value), infinite_(false) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws Error(InvalidArgument) when infinite.
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  friend Valuation operator+(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  Valuation() : value_(0), infinite_(true) {}

  long value_;
  bool infinite_;
};

/// Exponent of the highest power of p dividing a; infinity for a = 0.
Valuation vp(const Int& a, Prime p);

/// v_p(num) - v_p(den) on the reduced form; infinity for 0.
Valuation vp(const Rat& x, Prime p);

/// Base-p digit sum s_p(n).
unsigned long digit_sum(unsigned long n, Prime p);

/// v_p(n!) via Legendre: (n - s_p(n)) / (p - 1).
unsigned long vp_factorial(unsigned long n, Prime p);

Int factorial(unsigned long n);

/// Falling factorial a(a-1)...(a-n+1); 1 for n = 0.
Int falling(const Int& a, unsigned long n);

/// falling(n, k) / k!. Zero when 0 <= n < k.
Int binom(const Int& n, unsigned long k);

Int pow(const Int& base, unsigned long exponent);
Rat pow(const Rat& base, long exponent);
Int prime_power(Prime p, unsigned long exponent);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primality of an arbitrary integer: exact below 2^64, GMP's
/// probabilistic test (50 rounds) above.
bool is_prime(const Int& n);

/// Nonnegative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

Int parse_int(std::string_view text);
/// Accepts "a" or "a/b".
Rat parse_rat(std::string_view text);

/// Always "num/den", also for integers ("5/1").
std::string to_fraction_string(const Rat& x);

}  // namespace bellift
