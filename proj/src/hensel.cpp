#include "bellift/hensel.hpp"

#include <algorithm>
#include <string>

#include "bellift/errors.hpp"
#include "bellift/series.hpp"

namespace bellift {

namespace {

// floor(log_p(x)) for x >= 1.
unsigned long ilog(unsigned long x, Prime p) {
  unsigned long r = 0;
  while (x >= p) {
    x /= p;
    ++r;
  }
  return r;
}

// Smallest K such that every term k >= K of a series whose k-th term has
// valuation >= v(k+1) - floor(log_p(slope*k + 1)) vanishes mod p^precision.
// For k >= 1 that bound is nondecreasing in k (p > 2, v >= 1).
std::size_t cutoff_with_log_loss(unsigned long v, Prime p, unsigned long precision,
                                 unsigned long slope) {
  auto bound = [&](unsigned long k) -> long {
    return static_cast<long>(v * (k + 1)) - static_cast<long>(ilog(slope * k + 1, p));
  };
  unsigned long k = 1;
  while (bound(k) < static_cast<long>(precision)) ++k;
  if (k == 1 && bound(0) >= static_cast<long>(precision)) return 0;
  return k;
}

Int eval(const IntPolynomial& f, const Int& x) { return f(x); }

void require_odd(Prime p) {
  if (p == 2) throw Error(Errc::EvenPrime, "this formula requires p > 2");
}

// Seed checks shared by every simple-root lift. Returns (c0, c1).
std::pair<Int, Int> simple_seed(const IntPolynomial& f, const Int& r0, Prime p) {
  Int c0 = eval(f, r0);
  Int c1 = eval(f.derivative(), r0);
  if (mod(c0, Int(p)) != 0) {
    throw Error(Errc::NotARootModP, "f(" + r0.get_str() + ") is not 0 mod " + std::to_string(p));
  }
  if (mod(c1, Int(p)) == 0) {
    throw Error(Errc::DerivativeNotUnit, "f'(" + r0.get_str() + ") is divisible by p");
  }
  return {c0, c1};
}

LiftReport finish(const IntPolynomial& f, PadicInt root, std::size_t terms) {
  auto residual = residual_valuation(f, root);
  if (residual.is_exact()) {
    throw Error(Errc::ResidualCheckFailed,
                "f(root) has valuation " + residual.to_string() + " below the precision");
  }
  return {std::move(root), terms, residual};
}

// Sum of the Bell root series for g = sum cs_j x^j with v_p(c0) >= 1 and
// v_p(c1) = 0, reduced mod p^precision.
std::pair<PadicInt, std::size_t> root_series(const std::vector<Int>& cs, Prime p,
                                             unsigned long precision) {
  if (cs[0] == 0) return {PadicInt(p, precision, 0), 0};
  const auto v = static_cast<unsigned long>(vp(cs[0], p).value());
  const std::size_t n_terms = root_series_length(v, p, precision);
  if (n_terms == 0) return {PadicInt(p, precision, 0), 0};
  std::vector<Rat> a(cs.begin(), cs.end());
  Rat sum = 0;
  for (const auto& term : formal_root_terms(a, n_terms - 1)) sum += term.value;
  return {from_rat(sum, p, precision), n_terms};
}

}  // namespace

PadicValuation residual_valuation(const IntPolynomial& f, const PadicInt& root) {
  return valuation(PadicInt(root.prime(), root.precision(), eval(f, root.residue())));
}

std::size_t root_series_length(unsigned long v, Prime p, unsigned long precision) {
  const unsigned long slope = v * (p - 1) - 1;
  if (v * (p - 1) <= 1) throw Error(Errc::EvenPrime, "root series needs v_p(c0) (p-1) > 1");
  // Past this index (n+1)(v - 1/(p-1)) >= precision, which the Legendre
  // bound turns into a strict guarantee.
  unsigned long linear = (precision * (p - 1) + slope - 1) / slope;
  std::size_t n_stop = linear == 0 ? 0 : linear - 1;
  auto legendre_ok = [&](std::size_t n) {
    return v * (n + 1) >= precision + vp_factorial(n + 1, p);
  };
  while (n_stop > 0 && legendre_ok(n_stop - 1)) --n_stop;
  return n_stop;
}

ShiftedTaylor taylor_shift(const IntPolynomial& f, const Int& r0, Prime p, unsigned long kappa) {
  ShiftedTaylor out;
  out.shift = r0;
  out.kappa = kappa;
  const auto& a = f.coeffs();
  const Int pk = prime_power(p, kappa);
  for (std::size_t j = 0; j < a.size(); ++j) {
    Int c = 0;
    Int rpow = 1;
    for (std::size_t i = j; i < a.size(); ++i) {
      c += binom(Int(static_cast<unsigned long>(i)), j) * a[i] * rpow;
      rpow *= r0;
    }
    if (j < 2) {
      const Int div = j == 0 ? Int(pk * pk) : pk;
      if (mpz_divisible_p(c.get_mpz_t(), div.get_mpz_t()) == 0) {
        throw Error(Errc::NonIntegralShift,
                    "c_" + std::to_string(j) + " is not integral for kappa = " + std::to_string(kappa));
      }
      c /= div;
    } else {
      c *= pow(pk, j - 2);
    }
    out.cs.push_back(std::move(c));
  }
  return out;
}

LiftReport lift_simple(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision) {
  require_odd(p);
  const Int seed = mod(r0, Int(p));
  simple_seed(f, seed, p);
  const auto shifted = taylor_shift(f, seed, p, 0);
  auto [rho, terms] = root_series(shifted.cs, p, precision);
  return finish(f, from_int(seed, p, precision) + rho, terms);
}

LiftReport lift_general(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision,
                        LiftParameters params) {
  const Int f_r0 = eval(f, r0);
  const Valuation kappa_v = vp(eval(f.derivative(), r0), p);
  if (kappa_v.is_infinite()) {
    throw Error(Errc::InsufficientCongruence, "f'(r0) = 0, no finite kappa");
  }
  const auto kappa = static_cast<unsigned long>(kappa_v.value());
  if (params.kappa && *params.kappa != kappa) {
    throw Error(Errc::DerivativeValuationMismatch,
                "v_p(f'(r0)) = " + std::to_string(kappa) + ", expected " + std::to_string(*params.kappa));
  }
  const Valuation nu_actual = vp(f_r0, p);
  unsigned long nu;
  if (params.nu) {
    nu = *params.nu;
    if (nu_actual < Valuation(static_cast<long>(nu))) {
      throw Error(Errc::NotARootModP, "f(r0) is not 0 mod p^" + std::to_string(nu));
    }
  } else {
    const unsigned long cap = std::max(precision, 2 * kappa + 1);
    nu = nu_actual.is_infinite() ? cap
                                 : std::min(static_cast<unsigned long>(nu_actual.value()), cap);
  }
  if (2 * kappa >= nu) {
    throw Error(Errc::InsufficientCongruence,
                "need 2 kappa < nu (kappa = " + std::to_string(kappa) + ", nu = " + std::to_string(nu) + ")");
  }
  if (p == 2 && nu - 2 * kappa < 2) {
    throw Error(Errc::EvenPrime, "p = 2 needs nu - 2 kappa >= 2");
  }

  const Int seed = mod(r0, prime_power(p, nu));
  const auto shifted = taylor_shift(f, seed, p, kappa);
  const unsigned long inner_precision = precision > kappa ? precision - kappa : 1;
  auto [rho, terms] = root_series(shifted.cs, p, inner_precision);
  const Int root = seed + prime_power(p, kappa) * rho.residue();
  return finish(f, from_int(root, p, precision), terms);
}

std::vector<LiftReport> lift_rescaled(const IntPolynomial& f, const Int& r0, Prime p,
                                      unsigned long kappa, unsigned long precision) {
  const auto g = taylor_shift(f, r0, p, kappa).polynomial();
  const unsigned long inner_precision = precision > kappa ? precision - kappa : 1;
  const Int pk = prime_power(p, kappa);
  std::vector<LiftReport> out;
  for (unsigned long s = 0; s < p; ++s) {
    if (mod(eval(g, Int(s)), Int(p)) != 0) continue;
    if (mod(eval(g.derivative(), Int(s)), Int(p)) == 0) continue;
    auto inner = lift_general(g, Int(s), p, inner_precision);
    const Int root = r0 + pk * inner.root.residue();
    out.push_back(finish(f, from_int(root, p, precision), inner.terms_used));
  }
  return out;
}

PadicInt newton_lift(const IntPolynomial& f, const Int& r0, Prime p, unsigned long precision) {
  Int r = mod(r0, Int(p));
  simple_seed(f, r, p);
  const IntPolynomial df = f.derivative();
  unsigned long current = 1;
  while (current < precision) {
    current = std::min(2 * current, precision);
    const Int modulus = prime_power(p, current);
    Int inv;
    const Int d = mod(eval(df, r), modulus);
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    r = mod(Int(r - eval(f, r) * inv), modulus);
  }
  return PadicInt(p, precision, r);
}

LiftReport lift_quadratic(const Int& a0, const Int& a1, const Int& a2, const Int& r0, Prime p,
                          unsigned long precision) {
  require_odd(p);
  const IntPolynomial f({a0, a1, a2});
  const Int seed = mod(r0, Int(p));
  auto [c0, c1] = simple_seed(f, seed, p);
  if (c0 == 0) return finish(f, from_int(seed, p, precision), 0);
  const auto v = static_cast<unsigned long>(vp(c0, p).value());
  const std::size_t n_terms = (precision + v - 1) / v;
  const Rat ratio = make_rat(c0 * a2, c1 * c1);
  Rat sum = 0;
  Rat power = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    const Int catalan = binom(Int(static_cast<unsigned long>(2 * n)), n) / (n + 1);
    sum += catalan * power;
    power *= ratio;
  }
  const Rat correction = make_rat(c0, c1) * sum;
  return finish(f, from_int(seed, p, precision) - from_rat(correction, p, precision), n_terms);
}

LiftReport lift_cubic(const Int& a0, const Int& a1, const Int& a2, const Int& a3, const Int& r0,
                      Prime p, unsigned long precision) {
  require_odd(p);
  const IntPolynomial f({a0, a1, a2, a3});
  const Int seed = mod(r0, Int(p));
  auto [c0, c1] = simple_seed(f, seed, p);
  if (c0 == 0) return finish(f, from_int(seed, p, precision), 0);
  const Int c2 = a2 + 3 * a3 * seed;
  const Int& c3 = a3;
  const auto v = static_cast<unsigned long>(vp(c0, p).value());
  const std::size_t n_terms = cutoff_with_log_loss(v, p, precision, 2);

  const Rat inner_ratio = make_rat(c0 * c3, c1);
  const Rat outer_ratio = make_rat(c0, c1 * c1);
  Rat sum = 0;
  Rat outer_pow = 1;
  for (std::size_t k = 0; k < n_terms; ++k) {
    Rat bracket = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      Rat term = make_rat(binom(Int(static_cast<unsigned long>(k)), j) *
                              binom(Int(static_cast<unsigned long>(3 * k - j)), k),
                          Int(static_cast<unsigned long>(2 * k - j + 1)));
      term *= pow(c2, j);
      term *= pow(inner_ratio, static_cast<long>(k - j));
      if ((k - j) % 2 == 1) term = -term;
      bracket += term;
    }
    sum += bracket * outer_pow;
    outer_pow *= outer_ratio;
  }
  const Rat correction = make_rat(c0, c1) * sum;
  return finish(f, from_int(seed, p, precision) - from_rat(correction, p, precision), n_terms);
}

LiftReport lift_sparse(const Int& a0, const Int& a1, const Int& a_l, const Int& a_m,
                       unsigned long l, unsigned long m, Prime p, unsigned long precision) {
  require_odd(p);
  if (!(1 < l && l < m)) throw Error(Errc::BadExponents, "need 1 < l < m");
  if (mod(a0, Int(p)) != 0) throw Error(Errc::NotDivisible, "p does not divide a0");
  if (mod(a1, Int(p)) == 0) throw Error(Errc::DerivativeNotUnit, "p divides a1");
  std::vector<Int> coeffs(m + 1, Int(0));
  coeffs[0] = a0;
  coeffs[1] = a1;
  coeffs[l] = a_l;
  coeffs[m] = a_m;
  const IntPolynomial f(coeffs);
  if (a0 == 0) return finish(f, PadicInt(p, precision, 0), 0);

  const auto v = static_cast<unsigned long>(vp(a0, p).value());
  const std::size_t n_terms = cutoff_with_log_loss(v, p, precision, m - 1);
  const Rat inner_ratio = make_rat(pow(a0, m - l) * a_m, pow(a1, m - l));
  const Rat outer_ratio = make_rat(pow(a0, l - 1), pow(a1, l));
  Rat sum = 0;
  Rat outer_pow = 1;
  for (std::size_t k = 0; k < n_terms; ++k) {
    Rat bracket = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const unsigned long e = m * (k - j) + l * j;
      Rat term = make_rat(binom(Int(static_cast<unsigned long>(k)), j) * binom(Int(e), k),
                          Int(e - k + 1));
      term *= pow(a_l, j);
      term *= pow(inner_ratio, static_cast<long>(k - j));
      if (e % 2 == 1) term = -term;
      bracket += term;
    }
    sum += bracket * outer_pow;
    outer_pow *= outer_ratio;
  }
  const Rat root = -make_rat(a0, a1) * sum;
  return finish(f, from_rat(root, p, precision), n_terms);
}

PadicInt teichmuller(unsigned long q, Prime p, unsigned long precision) {
  require_odd(p);
  if (q < 1 || q > p - 1) throw Error(Errc::OutOfRange, "q must lie in [1, p-1]");
  const unsigned long m = p - 1;
  const Int c0 = pow(Int(q), m) - 1;
  const Int c1 = Int(m) * pow(Int(q), m - 1);
  if (c0 == 0) return PadicInt(p, precision, Int(q));
  const auto v = static_cast<unsigned long>(vp(c0, p).value());
  const std::size_t n_terms = root_series_length(v, p, precision);

  // falling[j][s] = (j m)_s
  std::vector<std::vector<Int>> falling_table(n_terms + 1);
  for (std::size_t j = 0; j <= n_terms; ++j) {
    auto& row = falling_table[j];
    row.resize(2 * n_terms + 1);
    row[0] = 1;
    const Int a = Int(static_cast<unsigned long>(j)) * m;
    for (std::size_t s = 1; s < row.size(); ++s) row[s] = row[s - 1] * (a - static_cast<unsigned long>(s - 1));
  }

  const Rat ratio = make_rat(c0, Int(q) * c1);
  Rat sum = 0;
  Rat ratio_pow = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rat bracket = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      // S_k = sum_j (-1)^{k-j} C(k,j) (jm)_{n+k}
      Int s_k = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        Int t = binom(Int(static_cast<unsigned long>(k)), j) * falling_table[j][n + k];
        if ((k - j) % 2 == 0) {
          s_k += t;
        } else {
          s_k -= t;
        }
      }
      if (s_k == 0) continue;
      Rat term = make_rat(binom(Int(static_cast<unsigned long>(2 * n + 1)), n - k) * s_k,
                          factorial(k) * pow(Int(m), k));
      if ((n - k) % 2 == 1) term = -term;
      bracket += term;
    }
    sum += bracket / Rat(factorial(n + 1)) * ratio_pow;
    ratio_pow *= ratio;
  }
  const Rat xi = Rat(q) - make_rat(c0, c1) * sum;
  return from_rat(xi, p, precision);
}

PadicInt teichmuller_oracle(unsigned long q, Prime p, unsigned long precision) {
  PadicInt x(p, precision, Int(q));
  for (unsigned long i = 0; i <= precision + 1; ++i) {
    PadicInt next = pow(x, p);
    if (next == x) return x;
    x = next;
  }
  return x;
}

}  // namespace bellift
