#include "bellift/roots.hpp"

#include <algorithm>
#include <set>

#include "bellift/errors.hpp"
#include "bellift/hensel.hpp"

namespace bellift {

std::optional<std::vector<Int>> small_divisors(const Int& n, unsigned long long bound) {
  Int a = abs(n);
  if (a == 0 || a > Int(std::to_string(bound))) return std::nullopt;
  std::vector<Int> divs{1};
  Int rest = a;
  for (unsigned long q = 2; Int(q) * q <= rest; ++q) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q) == 0) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
      rest /= q;
      ++e;
    }
    const std::size_t count = divs.size();
    Int pw = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      pw *= q;
      for (std::size_t k = 0; k < count; ++k) divs.push_back(divs[k] * pw);
    }
  }
  if (rest > 1) {
    const std::size_t count = divs.size();
    for (std::size_t k = 0; k < count; ++k) divs.push_back(divs[k] * rest);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rat> rational_roots_in_pZp(const IntPolynomial& f, Prime p,
                                       const RootSearchLimits& limits) {
  std::vector<Rat> out;
  if (f.degree() < 1) return out;
  // Strip x^s; 0 itself is a root then.
  std::size_t shift = 0;
  while (f.coeffs()[shift] == 0) ++shift;
  if (shift > 0) out.emplace_back(0);
  if (static_cast<long>(shift) == f.degree()) return out;
  const auto nums = small_divisors(f.coeffs()[shift], limits.divisor_bound);
  const auto dens = small_divisors(f.leading(), limits.divisor_bound);
  if (!nums || !dens) return out;
  std::set<Rat> seen;
  for (const auto& a : *nums) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p) == 0) continue;
    for (const auto& b : *dens) {
      if (mpz_divisible_ui_p(b.get_mpz_t(), p) != 0) continue;
      for (int sign : {1, -1}) {
        const Rat r = make_rat(Int(sign * a), b);
        if (seen.contains(r)) continue;
        seen.insert(r);
        if (f(r) == 0) out.push_back(r);
      }
    }
  }
  return out;
}

std::vector<FoundRoot> find_roots_in_pZp(const IntPolynomial& f, Prime p, unsigned long precision,
                                         const RootSearchLimits& limits) {
  std::vector<FoundRoot> found;
  std::set<Int> residues;
  auto add = [&](PadicInt root, std::optional<Rat> exact) {
    if (root.is_zero() || residues.contains(root.residue())) return;
    residues.insert(root.residue());
    const auto ell = valuation(root).value();
    found.push_back({std::move(root), ell, std::move(exact)});
  };

  for (const auto& r : rational_roots_in_pZp(f, p, limits)) {
    if (r == 0) continue;
    add(from_rat(r, p, precision), r);
  }

  const IntPolynomial df = f.derivative();
  const Int prime(p);
  std::vector<Int> frontier;
  if (mod(f(Int(0)), prime) == 0) frontier.push_back(Int(0));
  Int level_modulus = prime;
  for (unsigned long depth = 1; depth <= limits.max_depth && !frontier.empty(); ++depth) {
    std::vector<Int> next;
    const Int next_modulus = level_modulus * prime;
    for (const auto& r : frontier) {
      const Valuation kappa = vp(df(r), p);
      const Valuation nu = vp(f(r), p);
      // The lifted root is the only one within p^{nu-kappa} of r, which
      // covers the whole disk r + p^depth Z_p only once nu - kappa <= depth.
      if (!kappa.is_infinite() && Valuation(2 * kappa.value()) < nu &&
          nu <= Valuation(kappa.value() + depth)) {
        try {
          auto report = lift_general(f, r, p, precision);
          // Exact rational roots were already recorded with their value.
          add(std::move(report.root), std::nullopt);
          continue;
        } catch (const Error&) {
        }
      }
      for (unsigned long t = 0; t < p; ++t) {
        Int child = r + level_modulus * t;
        if (mod(f(child), next_modulus) == 0) next.push_back(std::move(child));
      }
      if (next.size() > limits.max_frontier) break;
    }
    if (next.size() > limits.max_frontier) break;
    frontier = std::move(next);
    level_modulus = next_modulus;
  }

  std::sort(found.begin(), found.end(), [](const FoundRoot& a, const FoundRoot& b) {
    if (a.ell != b.ell) return a.ell < b.ell;
    return a.root.residue() < b.root.residue();
  });
  return found;
}

}  // namespace bellift
