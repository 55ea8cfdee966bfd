#include "bellift/series.hpp"

#include <algorithm>

#include "bellift/bell.hpp"
#include "bellift/errors.hpp"

namespace bellift {

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
}

Series Series::constant(const Rat& c, std::size_t order) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::identity(std::size_t order) {
  Series s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Series Series::truncate(std::size_t order) const {
  Series s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = coeff(i);
  return s;
}

Series operator+(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = f[i] + g[i];
  return r;
}

Series operator-(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = f[i] - g[i];
  return r;
}

Series operator-(const Series& f) {
  Series r(f.order());
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = -f[i];
  return r;
}

Series operator*(const Series& f, const Series& g) {
  Series r(std::min(f.order(), g.order()));
  const std::size_t order = r.order();
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (g[j] != 0) r[i + j] += f[i] * g[j];
    }
  }
  return r;
}

Series operator*(const Rat& c, const Series& f) {
  Series r(f.order());
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = c * f[i];
  return r;
}

Series compose(const Series& f, const Series& g) {
  if (g[0] != 0) {
    throw Error(Errc::CompositionNeedsZeroConstant, "inner series must have zero constant term");
  }
  const std::size_t order = std::min(f.order(), g.order());
  const Series inner = g.truncate(order);
  Series r = Series::constant(f[order], order);
  for (std::size_t i = order; i-- > 0;) {
    r = r * inner;
    r[0] += f[i];
  }
  return r;
}

Series reciprocal(const Series& f) {
  if (f[0] == 0) throw Error(Errc::NotInvertible, "series with zero constant term");
  Series r(f.order());
  const Rat inv0 = 1 / f[0];
  r[0] = inv0;
  for (std::size_t n = 1; n <= r.order(); ++n) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (f[i] != 0) acc += f[i] * r[n - i];
    }
    r[n] = -inv0 * acc;
  }
  return r;
}

Series derivative(const Series& f) {
  if (f.order() == 0) return Series(0);
  Series r(f.order() - 1);
  for (std::size_t i = 1; i <= f.order(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  return r;
}

Series pow(const Series& f, long exponent) {
  Series base = exponent < 0 ? reciprocal(f) : f;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Series r = Series::constant(1, f.order());
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

Series factorial_shape_series(std::span<const Rat> c) {
  Series s(c.size() + 1);
  s[1] = 1;
  for (std::size_t r = 1; r <= c.size(); ++r) s[r + 1] = c[r - 1] / Rat(factorial(r));
  return s;
}

std::vector<Rat> lagrange_invert(std::span<const Rat> alphas) {
  const std::size_t m = alphas.size();
  BellTable<Rat> table(alphas, m);
  std::vector<Rat> betas(m);
  for (std::size_t n = 1; n <= m; ++n) {
    Rat beta = 0;
    const Int np1_fact = factorial(n + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      const Rat& b = table(n, j);
      if (b == 0) continue;
      Rat term = b * Int(factorial(n + j) / np1_fact);
      if (j % 2 == 1) {
        beta -= term;
      } else {
        beta += term;
      }
    }
    betas[n - 1] = std::move(beta);
  }
  return betas;
}

namespace {

void require_linear_coefficient(std::span<const Rat> a) {
  if (a.size() < 2 || a[1] == 0) {
    throw Error(Errc::LinearCoefficientZero, "formal root needs an invertible linear coefficient");
  }
}

std::vector<RootTerm> attach_values(std::vector<Rat> brackets, const Rat& a0, const Rat& a1) {
  const Rat ratio = a0 / a1;
  std::vector<RootTerm> terms;
  terms.reserve(brackets.size());
  Rat power = ratio;
  for (auto& b : brackets) {
    Rat value = b * power;
    terms.push_back({std::move(b), std::move(value)});
    power *= ratio;
  }
  return terms;
}

}  // namespace

std::vector<RootTerm> formal_root_terms(std::span<const Rat> a, std::size_t n_max) {
  require_linear_coefficient(a);
  std::vector<Rat> xs;
  for (std::size_t j = 1; j < a.size(); ++j) xs.push_back(a[j] * factorial(j));
  const BellTable<Rat> table(xs, 2 * n_max);
  const Rat inv_a1 = 1 / a[1];

  std::vector<Rat> brackets;
  brackets.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rat sum = 0;
    Rat inv_a1_pow = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rat& b = table(n + k, k);
      if (b != 0) {
        Rat term = inv_a1_pow * binom(Int(static_cast<unsigned long>(2 * n + 1)), n - k) * b;
        if ((n - k + 1) % 2 == 1) {
          sum -= term;
        } else {
          sum += term;
        }
      }
      inv_a1_pow *= inv_a1;
    }
    brackets.push_back(sum / Rat(factorial(n + 1)));
  }
  return attach_values(std::move(brackets), a[0], a[1]);
}

std::vector<RootTerm> formal_root_terms_alt(std::span<const Rat> a, std::size_t n_max) {
  require_linear_coefficient(a);
  std::vector<Rat> xs;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) xs.push_back(a[i + 1] * factorial(i));
  const BellTable<Rat> table(xs, n_max);
  const Rat inv_a1 = 1 / a[1];

  std::vector<Rat> brackets;
  brackets.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rat sum = 0;
    Rat inv_a1_pow = 1;
    const Int np1_fact = factorial(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      const Rat& b = table(n, j);
      if (b != 0) {
        Rat term = inv_a1_pow * make_rat(factorial(n + j), np1_fact) * b;
        if ((n + j + 1) % 2 == 1) {
          sum -= term;
        } else {
          sum += term;
        }
      }
      inv_a1_pow *= inv_a1;
    }
    brackets.push_back(sum / Rat(factorial(n)));
  }
  return attach_values(std::move(brackets), a[0], a[1]);
}

std::vector<TrinomialTerm> trinomial_root_terms(unsigned long m, const Rat& pcoef, const Rat& q,
                                                std::size_t k_max) {
  if (m <= 1) throw Error(Errc::DegenerateExponent, "trinomial needs m > 1");
  if (pcoef == 0) throw Error(Errc::InvalidArgument, "linear coefficient must be nonzero");
  std::vector<TrinomialTerm> terms;
  terms.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const unsigned long exponent = (m - 1) * k + 1;
    Rat coefficient = make_rat(binom(Int(m * k), k), Int(exponent));
    coefficient /= pow(pcoef, static_cast<long>(k + exponent));
    if (k % 2 == 1) coefficient = -coefficient;
    Rat value = coefficient * pow(q, static_cast<long>(exponent));
    terms.push_back({exponent, std::move(coefficient), std::move(value)});
  }
  return terms;
}

}  // namespace bellift
