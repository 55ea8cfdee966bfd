#pragma once

// Explicit Hensel lifting in Z_p: the Bell-polynomial root series and its
// quadratic, cubic, sparse and roots-of-unity specializations, next to a
// classical Newton iteration that serves as the independent oracle.

#include <cstddef>
#include <optional>
#include <vector>

#include "bellift/bigmath.hpp"
#include "bellift/padic.hpp"
#include "bellift/polynomial.hpp"

namespace bellift {

/// Coefficients of g(x) = p^{-2 kappa} f(r0 + p^kappa x), i.e.
/// c_j = p^{(j-2) kappa} f^{(j)}(r0) / j!.
struct ShiftedTaylor {
  std::vector<Int> cs;
  Int shift;
  unsigned long kappa = 0;

  IntPolynomial polynomial() const { return IntPolynomial(cs); }
};

/// Throws NonIntegralShift when c_0 or c_1 is not an integer (2 kappa is
/// too large for this r0).
ShiftedTaylor taylor_shift(const IntPolynomial& f, const Int& r0, Prime p, unsigned long kappa);

struct LiftReport {
  PadicInt root;
  /// Number of series terms summed (Newton steps for the oracle).
  std::size_t terms_used = 0;
  /// Valuation of f(root) at the root's precision; always >= precision.
  PadicValuation residual_valuation = PadicValuation::at_least(0);
};

/// v_p(f(root)) observed at root.precision().
PadicValuation residual_valuation(const IntPolynomial& f, const PadicInt& root);

/// Number of root-series terms that must be summed so that every omitted
/// term n has v_p(c0^{n+1}/(n+1)!) >= precision, given v = v_p(c0).
/// Requires v (p-1) > 1.
std::size_t root_series_length(unsigned long v, Prime p, unsigned long precision);

/// Simple-root lift: f(r0) = 0 mod p, v_p(f'(r0)) = 0, p > 2.
/// Errors: EvenPrime, NotARootModP, DerivativeNotUnit.
LiftReport lift_simple(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision);

struct LiftParameters {
  std::optional<unsigned long> nu;
  std::optional<unsigned long> kappa;
};

/// Lift from f(r0) = 0 mod p^nu with v_p(f'(r0)) = kappa and 2 kappa < nu.
/// Missing parameters are derived from f and r0. p = 2 is accepted only
/// when nu - 2 kappa >= 2. Errors: InsufficientCongruence, NotARootModP,
/// DerivativeValuationMismatch, EvenPrime.
LiftReport lift_general(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision,
                        LiftParameters params = {});

/// For a seed whose congruence is too weak (2 kappa >= nu), lift every
/// simple root mod p of g(x) = p^{-2 kappa} f(r0 + p^kappa x) and map it
/// back as r0 + p^kappa * root(g). Roots are ordered by residue.
std::vector<LiftReport> lift_rescaled(const IntPolynomial& f, const Int& r0, Prime p,
                                      unsigned long kappa, unsigned long precision);

/// Classical Newton iteration with precision doubling.
PadicInt newton_lift(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision);

/// r = r0 - (c0/c1) sum Cat_n (c0 c2 / c1^2)^n.
LiftReport lift_quadratic(const Int& a0, const Int& a1, const Int& a2, const Int& r0, Prime p,
                          unsigned long precision);

/// Double-sum cubic formula over (k, j).
LiftReport lift_cubic(const Int& a0, const Int& a1, const Int& a2, const Int& a3, const Int& r0,
                      Prime p, unsigned long precision);

/// Root at seed 0 of a0 + a1 x + a_l x^l + a_m x^m with 1 < l < m.
/// Errors: BadExponents, NotDivisible (p does not divide a0),
/// DerivativeNotUnit, EvenPrime.
LiftReport lift_sparse(const Int& a0, const Int& a1, const Int& a_l, const Int& a_m,
                       unsigned long l, unsigned long m, Prime p, unsigned long precision);

/// The (p-1)-st root of unity congruent to q mod p, by the closed-form
/// triple sum. Errors: OutOfRange unless 1 <= q <= p-1, EvenPrime.
PadicInt teichmuller(unsigned long q, Prime p, unsigned long precision);

/// lim q^{p^k} mod p^N, by repeated p-th powering until it stabilizes.
PadicInt teichmuller_oracle(unsigned long q, Prime p, unsigned long precision);

}  // namespace bellift
