#pragma once

// Truncated formal power series over Q, Lagrange inversion, and the
// formal root of f(x) = 0 for f with invertible linear coefficient.

#include <cstddef>
#include <span>
#include <vector>

#include "bellift/bigmath.hpp"

namespace bellift {

/// u_0 + u_1 x + ... + u_M x^M + O(x^{M+1}). Zeros are kept, so the
/// coefficient vector always has M + 1 entries.
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1, Rat(0)) {}
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit Series(std::vector<Rat> coeffs);

  static Series constant(const Rat& c, std::size_t order);
  /// The series x truncated at `order`.
  static Series identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }
  /// Zero beyond the order, rather than out of range.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }

  Series truncate(std::size_t order) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> coeffs_;
};

// Binary operations keep the smaller truncation order.
Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
Series operator*(const Rat& c, const Series& f);

/// f(g(x)); g(0) must be 0 (CompositionNeedsZeroConstant).
Series compose(const Series& f, const Series& g);

/// 1/f; f(0) must be nonzero (NotInvertible).
Series reciprocal(const Series& f);

Series derivative(const Series& f);

/// f^e for any integer e; negative exponents need f(0) != 0.
Series pow(const Series& f, long exponent);

/// t(1 + sum_{r>=1} c_r t^r / r!) truncated at order c.size() + 1, the
/// shape shared by phi and its inverse in Lagrange inversion.
Series factorial_shape_series(std::span<const Rat> c);

/// beta_n = sum_{j=1}^n (-1)^j (n+j)!/(n+1)! B_{n,j}(alpha_1, alpha_2, ...)
/// for n = 1..alphas.size().
std::vector<Rat> lagrange_invert(std::span<const Rat> alphas);

/// One summand of the formal root: value = bracket * (a0/a1)^{n+1}.
struct RootTerm {
  Rat bracket;
  Rat value;
};

/// Terms n = 0..n_max of the formal root of a_0 + a_1 x + a_2 x^2 + ... = 0:
///   bracket_n = sum_{k=0}^n (-1)^{n-k+1} / (a_1^k (n+1)!) C(2n+1, n-k)
///               B_{n+k,k}(1! a_1, 2! a_2, ...).
/// Throws LinearCoefficientZero when a_1 = 0.
std::vector<RootTerm> formal_root_terms(std::span<const Rat> a, std::size_t n_max);

/// Same terms through the intermediate single-Bell form
///   bracket_n = sum_{j=0}^n (-1)^{n+j+1} / (a_1^j n!) (n+j)!/(n+1)!
///               B_{n,j}(1! a_2, 2! a_3, ...).
std::vector<RootTerm> formal_root_terms_alt(std::span<const Rat> a, std::size_t n_max);

/// Summand k of the root of x^m + p x - q = 0:
///   (-1)^k / p^k C(mk, k) / ((m-1)k + 1) (q/p)^{(m-1)k+1}.
struct TrinomialTerm {
  unsigned long exponent;  ///< power of q, (m-1)k + 1
  Rat coefficient;         ///< factor multiplying q^exponent
  Rat value;               ///< coefficient * q^exponent
};

/// Throws DegenerateExponent for m <= 1, InvalidArgument for pcoef = 0.
std::vector<TrinomialTerm> trinomial_root_terms(unsigned long m, const Rat& pcoef, const Rat& q,
                                                std::size_t k_max);

}  // namespace bellift
