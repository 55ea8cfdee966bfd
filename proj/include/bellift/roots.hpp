#pragma once

// Discovery of roots in pZ_p for polynomials over Z: exact rational roots
// via the rational root test, and simple roots via a residue-tree scan
// seeded into lift_general.

#include <cstddef>
#include <optional>
#include <vector>

#include "bellift/bigmath.hpp"
#include "bellift/padic.hpp"
#include "bellift/polynomial.hpp"

namespace bellift {

struct FoundRoot {
  PadicInt root;
  unsigned long ell;           ///< v_p(root)
  std::optional<Rat> exact;    ///< set when the root is rational
};

struct RootSearchLimits {
  /// Deepest residue level p^depth explored by the tree scan.
  unsigned long max_depth = 8;
  /// Cap on the number of live residues per level (multiple roots make
  /// the tree branch).
  std::size_t max_frontier = 20000;
  /// Largest |a| or |b| whose divisors are enumerated in the rational test.
  unsigned long long divisor_bound = 1000000000000ULL;
};

/// Positive divisors of |n|, or nullopt when |n| exceeds the bound.
std::optional<std::vector<Int>> small_divisors(const Int& n, unsigned long long bound);

/// Rational roots a/b of f with p | a and p not dividing b.
std::vector<Rat> rational_roots_in_pZp(const IntPolynomial& f, Prime p,
                                       const RootSearchLimits& limits = {});

/// Exact roots first, then lifted simple roots, deduplicated, at the given
/// precision. Sorted by (ell, residue).
std::vector<FoundRoot> find_roots_in_pZp(const IntPolynomial& f, Prime p, unsigned long precision,
                                         const RootSearchLimits& limits = {});

}  // namespace bellift
