#pragma once

// Factorization in Z[[x]] of series p^w + p^m g1 x + g2 x^2 + ... that
// have a root r in pZ_p with v_p(r) = l <= m:
//
//   f = (p^l - x - x sum a_n x^n) (p^{w-l} + (p^{w-2l} + p^{m-l} g1) x + x sum b_n x^n)
//
// together with the reducibility classification by constant term and the
// gcd(f, f') split for multiple roots.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellift/bigmath.hpp"
#include "bellift/padic.hpp"
#include "bellift/polynomial.hpp"
#include "bellift/series.hpp"

namespace bellift {

enum class Reducibility {
  Unit,
  IrreduciblePrime,
  IrreduciblePrimePowerUnitLinear,
  ReducibleComposite,
  NeedsRootAnalysis,
};

const char* to_string(Reducibility r) noexcept;

struct Classification {
  Reducibility kind;
  /// Set for the prime and prime-power cases.
  Int prime = 0;
  unsigned long w = 0;
  /// v_p(f1); only meaningful for NeedsRootAnalysis.
  Valuation m = Valuation::infinity();

  std::string to_string() const;
};

/// Case analysis on |f0| and gcd(p, f1). Throws ZeroConstantTerm for f0 = 0.
Classification classify(const Int& f0, const Int& f1);

/// (p, w) with |n| = p^w, p prime, w >= 1; nullopt otherwise.
std::optional<std::pair<Int, unsigned long>> prime_power_decompose(const Int& n);

/// r = p^l (1 + sum_{j>=1} e_j p^{l j}) with base-p^l digits 0 <= e_j < p^l.
struct RootDigits {
  unsigned long ell = 0;
  std::vector<Int> e;  ///< e[0] is e_1
};

/// First `count` digits of the unit part. Needs v_p(r) = l exactly
/// (WrongValuation), unit part = 1 mod p^l (UnitPartNotOne), and precision
/// >= l (count + 2) (InsufficientPrecision).
RootDigits root_to_digits(const PadicInt& r, unsigned long ell, std::size_t count);

/// a_1..a_M with a_n = (1/n!) sum_k (-1)^k (n+k)!/(n+1)! B_{n,k}(1! e_1, 2! e_2, ...).
/// Throws IntegralityViolation if a value is not an integer.
std::vector<Int> a_coeffs(std::span<const Int> e, std::size_t order);

/// t_1..t_M, the coefficients of 1/A_hat(x) = 1 + x + x sum t_n x^n.
std::vector<Int> t_coeffs(std::span<const Int> e, Prime p, unsigned long ell, std::size_t order);

/// T_n(x) = E^{-n-2}(E + x E') for n >= 1 and E^{1-n} T_1 for n <= 0,
/// with E = 1 + sum e_j x^j, truncated at `order`.
Series tn_series(std::span<const Int> e, long n, std::size_t order);

/// T_n for n >= 1 from its Bell-polynomial coefficient formula.
Series tn_series_by_bell(std::span<const Int> e, long n, std::size_t order);

/// sum_{k <= nu+1} T[k] p^{l k} reduced mod p^{l (nu + 2)}.
Int tn_value_at_p_ell(const Series& t_nu, Prime p, unsigned long ell, long nu);

struct FactorizationProblem {
  Prime p = 0;
  unsigned long w = 0;
  unsigned long m = 0;
  /// gamma_1, gamma_2, ...; rational only after unit rescaling, always
  /// p-integral. Entries past the end are zero.
  std::vector<Rat> gammas;

  Rat gamma(std::size_t j) const { return j >= 1 && j <= gammas.size() ? gammas[j - 1] : Rat(0); }
};

struct BhatCoefficients {
  std::vector<Rat> bhat;  ///< bhat_1..bhat_M
  std::vector<Rat> b;     ///< bhat_n / p^{l n}
};

/// b_hat_n = p^{w-2l} t_n + p^{m-l} g1 t_{n-1} + sum_{j>=2} p^{l(j-2)} g_j t_{n-j}
/// with t_0 = t_{-1} = 1 and t_{-n} = 0 beyond. Throws DivisibilityViolation
/// unless v_p(b_hat_n) >= l n.
BhatCoefficients bhat_coeffs(const FactorizationProblem& prob, unsigned long ell,
                             std::span<const Int> t, std::size_t order);

/// A power series given by its leading coefficients and a tail: either
/// zero (a polynomial) or geometric, where the last listed coefficient
/// repeats multiplied by `ratio` each step (c x^k / (1 - ratio x)).
struct PowerSeriesInput {
  std::vector<Int> head;
  std::optional<Int> geometric_ratio;

  Int coefficient(std::size_t i) const;
  std::vector<Int> coefficients(std::size_t order) const;
  bool is_polynomial() const noexcept { return !geometric_ratio; }
  /// Polynomial with the same roots in pZ_p: f itself, or f (1 - ratio x).
  IntPolynomial numerator() const;
  /// "zero" or "geometric:<ratio>"
  std::string tail_descriptor() const;
};

/// Parses the CLI tail descriptor. Throws InvalidArgument.
std::optional<Int> parse_tail(const std::string& text);

struct FactorOptions {
  std::optional<Prime> prime;
  /// Use this root instead of searching; its precision must suffice.
  std::optional<PadicInt> root;
  /// Digits added to the required root precision l (M + 3).
  unsigned long extra_precision = 0;
};

struct FactorChecks {
  bool product = false;
  bool divisibility = false;
  bool tn_congruences = false;
  bool reciprocal = false;
  bool root_annihilation = false;
  bool integrality = false;
  bool two_ell_le_w = false;

  bool all() const noexcept {
    return product && divisibility && tn_congruences && reciprocal && root_annihilation &&
           integrality && two_ell_le_w;
  }
};

struct FactorPair {
  Series A = Series(std::size_t{0});
  Series B = Series(std::size_t{0});
};

struct FactorResult {
  FactorPair pair;
  Prime p = 0;
  unsigned long w = 0;
  unsigned long m = 0;
  unsigned long ell = 0;
  PadicInt root = PadicInt(2, 1, 0);
  bool exact_root = false;
  RootDigits digits;
  /// e0* of the unit rescaling g(x) = f(x / e0*); 1 when none was needed.
  /// A and B are then A_g(e0* x) and B_g(e0* x).
  Int rescale = 1;
  // a, t, bhat and b belong to the normalized series g (f itself when
  // rescale = 1); b is rational only after rescaling.
  std::vector<Int> a;
  std::vector<Int> t;
  std::vector<Rat> bhat;
  std::vector<Rat> b;
  FactorChecks checks;
};

/// Errors: ShapeMismatch, EvenPrime, NoSuitableRoot, DivisibilityViolation,
/// IntegralityViolation, PrecisionExhausted.
FactorResult factor(const PowerSeriesInput& f, std::size_t order, const FactorOptions& options = {});

struct VerificationReport {
  bool product = false;
  std::optional<std::size_t> first_mismatch;
  bool constant = false;
  bool integral = false;

  bool ok() const noexcept { return product && constant && integral; }
};

/// Compares A*B with f coefficientwise through x^order.
VerificationReport verify_factorization(std::span<const Int> f, const FactorPair& pair,
                                        std::size_t order);

struct MultipleRootSplit {
  IntPolynomial G;
  IntPolynomial f_red;
};

/// G = primitive gcd(f, f'), f_red = f / G. Requires G to have a root in
/// pZ_p; p is inferred from |f(0)| = p^w when not given.
/// Throws NoMultipleRoot.
MultipleRootSplit factor_multiple_root(const IntPolynomial& f, std::optional<Prime> p = {});

}  // namespace bellift
