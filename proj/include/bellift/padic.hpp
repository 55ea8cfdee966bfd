#pragma once

// p-adic integers known modulo p^N.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellift/bigmath.hpp"

namespace bellift {

/// Valuation of a finite-precision p-adic: exact when the residue is
/// nonzero, otherwise only a lower bound (the precision).
class PadicValuation {
 public:
  static PadicValuation exact(unsigned long v) { return PadicValuation(v, false); }
  static PadicValuation at_least(unsigned long n) { return PadicValuation(n, true); }

  bool is_exact() const noexcept { return !lower_bound_only_; }
  /// The exact valuation, or the guaranteed lower bound.
  unsigned long value() const noexcept { return value_; }

  friend bool operator==(const PadicValuation&, const PadicValuation&) = default;

  std::string to_string() const;

 private:
  PadicValuation(unsigned long v, bool lb) : value_(v), lower_bound_only_(lb) {}

  unsigned long value_;
  bool lower_bound_only_;
};

class PadicInt {
 public:
  /// Reduces `residue` into [0, p^precision). precision >= 1.
  PadicInt(Prime p, unsigned long precision, const Int& residue);

  Prime prime() const noexcept { return p_; }
  unsigned long precision() const noexcept { return precision_; }
  const Int& residue() const noexcept { return residue_; }
  const Int& modulus() const noexcept { return modulus_; }

  bool is_zero() const { return residue_ == 0; }

  /// Same value at lower precision.
  PadicInt reduce(unsigned long precision) const;

  friend bool operator==(const PadicInt&, const PadicInt&) = default;

 private:
  Prime p_;
  unsigned long precision_;
  Int modulus_;
  Int residue_;
};

PadicInt from_int(const Int& a, Prime p, unsigned long precision);

/// Throws NotPadicInteger when v_p(x) < 0.
PadicInt from_rat(const Rat& x, Prime p, unsigned long precision);

PadicValuation valuation(const PadicInt& x);

/// Throws NotAUnit unless valuation(x) is exactly 0.
PadicInt unit_inverse(const PadicInt& x);

/// Base-p digits d_0..d_{N-1}, least significant first.
std::vector<unsigned long> digits(const PadicInt& x);

// Mixed-precision arithmetic truncates to the smaller precision.
// Operands with different primes throw PrimeMismatch.
PadicInt operator+(const PadicInt& a, const PadicInt& b);
PadicInt operator-(const PadicInt& a, const PadicInt& b);
PadicInt operator*(const PadicInt& a, const PadicInt& b);
PadicInt operator-(const PadicInt& a);
PadicInt pow(const PadicInt& x, unsigned long exponent);

/// "d0 + d1*p + d2*p^2 + ... + O(p^N)", every digit written out.
std::string to_string(const PadicInt& x);

/// {"p":..., "precision":..., "digits":[...]}
nlohmann::json to_json(const PadicInt& x);
PadicInt padic_from_json(const nlohmann::json& j);

}  // namespace bellift
