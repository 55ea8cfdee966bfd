#include "bellift/factorize.hpp"

#include <algorithm>
#include <limits>

#include "bellift/bell.hpp"
#include "bellift/errors.hpp"
#include "bellift/hensel.hpp"
#include "bellift/roots.hpp"

namespace bellift {

namespace {

Int require_integer(const Rat& x, const char* what) {
  if (x.get_den() != 1) {
    throw Error(Errc::IntegralityViolation,
                std::string(what) + " is not an integer: " + to_fraction_string(x));
  }
  return x.get_num();
}

Int digit(std::span<const Int> e, std::size_t j) { return j >= 1 && j <= e.size() ? e[j - 1] : Int(0); }

// E(x) = 1 + sum e_j x^j.
Series e_series(std::span<const Int> e, std::size_t order) {
  Series s(order);
  s[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) s[j] = digit(e, j);
  return s;
}

// (k! e_k)_k for k = 1..n.
std::vector<Int> factorial_digits(std::span<const Int> e, std::size_t n) {
  std::vector<Int> xs;
  for (std::size_t k = 1; k <= n; ++k) xs.push_back(factorial(k) * digit(e, k));
  return xs;
}

// sum_{j=1}^k (-1)^j (n+j)!/(n+1)! B_{k,j}
Int signed_bell_sum(const BellTable<Int>& bells, long n, std::size_t k) {
  Int sum = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    const Int& b = bells(k, j);
    if (b == 0) continue;
    const Int ratio = falling(Int(n + static_cast<long>(j)), j - 1);
    if (j % 2 == 1) {
      sum -= ratio * b;
    } else {
      sum += ratio * b;
    }
  }
  return sum;
}

// s(c x)
Series scale_argument(const Series& s, const Int& c) {
  Series out(s.order());
  Int power = 1;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    out[k] = s[k] * Rat(power);
    power *= c;
  }
  return out;
}

}  // namespace

const char* to_string(Reducibility r) noexcept {
  switch (r) {
    case Reducibility::Unit: return "Unit";
    case Reducibility::IrreduciblePrime: return "IrreduciblePrime";
    case Reducibility::IrreduciblePrimePowerUnitLinear: return "IrreduciblePrimePowerUnitLinear";
    case Reducibility::ReducibleComposite: return "ReducibleComposite";
    case Reducibility::NeedsRootAnalysis: return "NeedsRootAnalysis";
  }
  return "?";
}

std::string Classification::to_string() const {
  std::string out = bellift::to_string(kind);
  switch (kind) {
    case Reducibility::IrreduciblePrime:
      out += " p=" + prime.get_str();
      break;
    case Reducibility::IrreduciblePrimePowerUnitLinear:
      out += " p=" + prime.get_str() + " w=" + std::to_string(w);
      break;
    case Reducibility::NeedsRootAnalysis:
      out += " p=" + prime.get_str() + " w=" + std::to_string(w) + " m=" + m.to_string();
      break;
    default:
      break;
  }
  return out;
}

std::optional<std::pair<Int, unsigned long>> prime_power_decompose(const Int& n) {
  const Int a = abs(n);
  if (a < 2) return std::nullopt;
  const auto bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  // Largest exponent first, so a perfect power of a prime is found with its
  // prime base rather than a composite one.
  for (unsigned long w = bits; w >= 1; --w) {
    Int root;
    if (mpz_root(root.get_mpz_t(), a.get_mpz_t(), w) == 0) continue;
    if (is_prime(root)) return std::make_pair(root, w);
  }
  return std::nullopt;
}

Classification classify(const Int& f0, const Int& f1) {
  if (f0 == 0) throw Error(Errc::ZeroConstantTerm, "f(0) = 0: x divides f");
  if (abs(f0) == 1) return {Reducibility::Unit};
  const auto pp = prime_power_decompose(f0);
  if (!pp) return {Reducibility::ReducibleComposite};
  const auto& [p, w] = *pp;
  if (w == 1) return {Reducibility::IrreduciblePrime, p, 1};
  if (mpz_divisible_p(f1.get_mpz_t(), p.get_mpz_t()) == 0) {
    return {Reducibility::IrreduciblePrimePowerUnitLinear, p, w};
  }
  Valuation m = Valuation::infinity();
  if (f1 != 0) {
    Int rest;
    m = Valuation(static_cast<long>(mpz_remove(rest.get_mpz_t(), f1.get_mpz_t(), p.get_mpz_t())));
  }
  return {Reducibility::NeedsRootAnalysis, p, w, m};
}

RootDigits root_to_digits(const PadicInt& r, unsigned long ell, std::size_t count) {
  const auto v = valuation(r);
  if (!v.is_exact() || v.value() != ell || ell == 0) {
    throw Error(Errc::WrongValuation, "root valuation " + v.to_string() + ", expected " +
                                          std::to_string(ell));
  }
  const unsigned long need = ell * (count + 2);
  if (r.precision() < need) {
    throw Error(Errc::InsufficientPrecision, "root known to p^" + std::to_string(r.precision()) +
                                                 ", digits need p^" + std::to_string(need));
  }
  const Prime p = r.prime();
  const Int q = prime_power(p, ell);
  const Int u = r.residue() / q;
  if (mod(u, q) != 1) {
    throw Error(Errc::UnitPartNotOne, "unit part is " + mod(u, q).get_str() + " mod p^" +
                                          std::to_string(ell) + ", expected 1");
  }
  RootDigits out{ell, {}};
  Int rest = (u - 1) / q;
  for (std::size_t j = 0; j < count; ++j) {
    out.e.push_back(mod(rest, q));
    rest /= q;
  }
  return out;
}

std::vector<Int> a_coeffs(std::span<const Int> e, std::size_t order) {
  if (order == 0) return {};
  std::vector<Rat> alphas;
  for (const auto& x : factorial_digits(e, order)) alphas.emplace_back(x);
  const auto betas = lagrange_invert(alphas);
  std::vector<Int> a;
  for (std::size_t n = 1; n <= order; ++n) {
    a.push_back(require_integer(betas[n - 1] / Rat(factorial(n)), "a_n"));
  }
  return a;
}

std::vector<Int> t_coeffs(std::span<const Int> e, Prime p, unsigned long ell, std::size_t order) {
  const auto xs = factorial_digits(e, order);
  const BellTable<Int> bells(xs, order);
  const Int q = prime_power(p, ell);
  std::vector<Int> t;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat sum = 1;
    Int qk = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      qk *= q;
      const Int inner = signed_bell_sum(bells, static_cast<long>(n), k);
      if (inner == 0) continue;
      sum += make_rat(qk * Int(static_cast<unsigned long>(n + 1 - k)) * inner, factorial(k));
    }
    t.push_back(require_integer(sum, "t_n"));
  }
  return t;
}

Series tn_series(std::span<const Int> e, long n, std::size_t order) {
  if (order == 0) throw Error(Errc::InvalidArgument, "T_n needs order >= 1");
  const Series E = e_series(e, order);
  if (n <= 0) return pow(E, 1 - n) * tn_series(e, 1, order);
  Series xde(order);
  for (std::size_t k = 1; k <= order; ++k) xde[k] = Rat(static_cast<unsigned long>(k)) * E[k];
  return pow(E, -n - 2) * (E + xde);
}

Series tn_series_by_bell(std::span<const Int> e, long n, std::size_t order) {
  if (n < 1) throw Error(Errc::InvalidArgument, "Bell form of T_n needs n >= 1");
  const auto xs = factorial_digits(e, order);
  const BellTable<Int> bells(xs, order);
  Series out(order);
  out[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    const Int inner = signed_bell_sum(bells, n, k);
    out[k] = make_rat(Int(n + 1 - static_cast<long>(k)) * inner, factorial(k));
  }
  return out;
}

Int tn_value_at_p_ell(const Series& t_nu, Prime p, unsigned long ell, long nu) {
  if (nu < -1) throw Error(Errc::InvalidArgument, "congruence defined for nu >= -1");
  const auto top = static_cast<std::size_t>(nu + 1);
  if (t_nu.order() < top) {
    throw Error(Errc::InsufficientPrecision, "T_nu truncated below x^(nu+1)");
  }
  const Int modulus = prime_power(p, ell * static_cast<unsigned long>(nu + 2));
  const Int q = prime_power(p, ell);
  Int sum = 0;
  Int qk = 1;
  for (std::size_t k = 0; k <= top; ++k) {
    sum += require_integer(t_nu[k], "T_nu coefficient") * qk;
    qk *= q;
  }
  return mod(sum, modulus);
}

BhatCoefficients bhat_coeffs(const FactorizationProblem& prob, unsigned long ell,
                             std::span<const Int> t, std::size_t order) {
  if (2 * ell > prob.w || ell > prob.m) {
    throw Error(Errc::ShapeMismatch, "need 2l <= w and l <= m");
  }
  if (t.size() < order) throw Error(Errc::InvalidArgument, "t_n needed through index M");
  const Prime p = prob.p;
  auto t_at = [&](long i) -> Int {
    if (i >= 1) return t[static_cast<std::size_t>(i - 1)];
    return i >= -1 ? Int(1) : Int(0);
  };
  auto fhat = [&](std::size_t j) -> Rat {
    if (j == 0) return Rat(prime_power(p, prob.w - 2 * ell));
    if (j == 1) return Rat(prime_power(p, prob.m - ell)) * prob.gamma(1);
    return Rat(prime_power(p, ell * (j - 2))) * prob.gamma(j);
  };
  BhatCoefficients out;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat sum = 0;
    for (std::size_t j = 0; j <= n + 1; ++j) {
      const Int tj = t_at(static_cast<long>(n) - static_cast<long>(j));
      if (tj != 0) sum += fhat(j) * Rat(tj);
    }
    const Valuation v = vp(sum, p);
    if (v < Valuation(static_cast<long>(ell * n))) {
      throw Error(Errc::DivisibilityViolation, "v_p(bhat_" + std::to_string(n) + ") = " +
                                                   v.to_string() + " < " +
                                                   std::to_string(ell * n));
    }
    out.b.push_back(sum / Rat(prime_power(p, ell * n)));
    out.bhat.push_back(std::move(sum));
  }
  return out;
}

Int PowerSeriesInput::coefficient(std::size_t i) const {
  if (i < head.size()) return head[i];
  if (!geometric_ratio || head.empty()) return 0;
  return head.back() * pow(*geometric_ratio, i - head.size() + 1);
}

std::vector<Int> PowerSeriesInput::coefficients(std::size_t order) const {
  std::vector<Int> out;
  for (std::size_t i = 0; i <= order; ++i) out.push_back(coefficient(i));
  return out;
}

IntPolynomial PowerSeriesInput::numerator() const {
  if (!geometric_ratio || head.empty()) return IntPolynomial(head);
  // f = sum_{k<K-1} c_k x^k + c_{K-1} x^{K-1} / (1 - r x)
  const std::size_t K = head.size();
  std::vector<Int> n(K, Int(0));
  for (std::size_t k = 0; k + 1 < K; ++k) {
    n[k] += head[k];
    n[k + 1] -= *geometric_ratio * head[k];
  }
  n[K - 1] += head[K - 1];
  return IntPolynomial(std::move(n));
}

std::string PowerSeriesInput::tail_descriptor() const {
  return geometric_ratio ? "geometric:" + geometric_ratio->get_str() : "zero";
}

std::optional<Int> parse_tail(const std::string& text) {
  if (text == "zero") return std::nullopt;
  const std::string prefix = "geometric:";
  if (text.starts_with(prefix)) return parse_int(text.substr(prefix.size()));
  throw Error(Errc::InvalidArgument, "tail must be 'zero' or 'geometric:<r>', got '" + text + "'");
}

VerificationReport verify_factorization(std::span<const Int> f, const FactorPair& pair,
                                        std::size_t order) {
  VerificationReport report;
  auto f_at = [&](std::size_t i) { return i < f.size() ? f[i] : Int(0); };
  const Series product = (pair.A.truncate(std::min(order, pair.A.order())) *
                          pair.B.truncate(std::min(order, pair.B.order())));
  report.product = product.order() >= order;
  for (std::size_t k = 0; k <= order; ++k) {
    if (product.coeff(k) != Rat(f_at(k))) {
      report.product = false;
      report.first_mismatch = k;
      break;
    }
  }
  report.constant = pair.A.coeff(0) * pair.B.coeff(0) == Rat(f_at(0));
  report.integral = true;
  for (const Series* s : {&pair.A, &pair.B}) {
    for (std::size_t k = 0; k <= std::min(order, s->order()); ++k) {
      if ((*s)[k].get_den() != 1) report.integral = false;
    }
  }
  return report;
}

FactorResult factor(const PowerSeriesInput& f, std::size_t order, const FactorOptions& options) {
  if (order == 0) throw Error(Errc::InvalidArgument, "order M must be >= 1");
  const std::size_t M = order;
  const Int f0 = f.coefficient(0);
  const Int f1 = f.coefficient(1);

  const auto pp = f0 > 0 ? prime_power_decompose(f0) : std::nullopt;
  if (!pp) throw Error(Errc::ShapeMismatch, "f(0) must be a positive prime power p^w");
  if (pp->first > std::numeric_limits<Prime>::max()) {
    throw Error(Errc::InvalidArgument, "prime exceeds the machine word");
  }
  const Prime p = pp->first.get_ui();
  const unsigned long w = pp->second;
  if (options.prime && *options.prime != p) {
    throw Error(Errc::ShapeMismatch, "f(0) is not a power of the given prime");
  }
  if (w < 2) throw Error(Errc::ShapeMismatch, "|f(0)| is prime: f is irreducible");
  if (p == 2) throw Error(Errc::EvenPrime, "factorization needs an odd prime");
  const Valuation mv = vp(f1, p);
  if (mv.is_infinite() || mv.value() < 1) {
    throw Error(Errc::ShapeMismatch, "need v_p(f_1) = m with 1 <= m < infinity");
  }
  const auto m = static_cast<unsigned long>(mv.value());

  // Root acquisition.
  const IntPolynomial numer = f.numerator();
  PadicInt root(p, 1, 0);
  bool exact = false;
  if (options.root) {
    root = *options.root;
    if (root.prime() != p) throw Error(Errc::PrimeMismatch, "root is over a different prime");
    const auto v = valuation(root);
    if (!v.is_exact() || v.value() < 1 || v.value() > m) {
      throw Error(Errc::WrongValuation, "supplied root needs 1 <= v_p(r) <= m");
    }
    if (residual_valuation(numer, root).value() < root.precision()) {
      throw Error(Errc::ResidualCheckFailed, "supplied value is not a root of f");
    }
  } else {
    RootSearchLimits limits;
    limits.max_depth = std::max<unsigned long>(limits.max_depth, 2 * m + 4);
    const unsigned long search_precision = m * (M + 3) + options.extra_precision;
    const auto roots = find_roots_in_pZp(numer, p, search_precision, limits);
    const auto it = std::find_if(roots.begin(), roots.end(),
                                 [&](const FoundRoot& r) { return r.ell >= 1 && r.ell <= m; });
    if (it == roots.end()) {
      throw Error(Errc::NoSuitableRoot,
                  "no root r in pZ_p with v_p(r) <= m = " + std::to_string(m) +
                      (w > 2 * m ? "; w > 2m, so a factorization may still exist by other means"
                                 : "; w <= 2m"));
    }
    root = it->root;
    exact = it->exact.has_value();
  }
  const unsigned long ell = valuation(root).value();
  const unsigned long need = ell * (M + 3);
  if (root.precision() < need) {
    throw Error(Errc::PrecisionExhausted, "root known to p^" + std::to_string(root.precision()) +
                                              ", need p^" + std::to_string(need));
  }
  root = root.reduce(need + options.extra_precision);

  // Normalize the unit part to 1 mod p^l by substituting x -> x / e0*.
  const Int q = prime_power(p, ell);
  const Int e0 = mod(root.residue() / q, q);
  Int rescale = 1;
  if (e0 != 1) mpz_invert(rescale.get_mpz_t(), e0.get_mpz_t(), q.get_mpz_t());
  const PadicInt normalized = root * from_int(rescale, p, root.precision());

  FactorizationProblem prob{p, w, m, {}};
  prob.gammas.push_back(make_rat(f1 / prime_power(p, m), rescale));
  for (std::size_t j = 2; j <= M + 1; ++j) {
    prob.gammas.push_back(make_rat(f.coefficient(j), pow(rescale, j)));
  }

  FactorResult out;
  out.p = p;
  out.w = w;
  out.m = m;
  out.ell = ell;
  out.root = root;
  out.exact_root = exact;
  out.rescale = rescale;
  out.digits = root_to_digits(normalized, ell, M + 1);
  const auto& e = out.digits.e;
  out.checks.two_ell_le_w = 2 * ell <= w;
  if (!out.checks.two_ell_le_w) {
    throw Error(Errc::ResidualCheckFailed, "root with 2l > w contradicts the shape of f");
  }
  out.a = a_coeffs(e, M);
  out.t = t_coeffs(e, p, ell, M);
  auto bh = bhat_coeffs(prob, ell, out.t, M);
  out.checks.divisibility = true;
  out.bhat = std::move(bh.bhat);
  out.b = std::move(bh.b);

  // A_g through x^{M+1} and B_g through x^M for the normalized series.
  Series Ag(M + 1);
  Ag[0] = Rat(q);
  Ag[1] = -1;
  for (std::size_t n = 1; n <= M; ++n) Ag[n + 1] = -Rat(out.a[n - 1]);
  Series Bg(M);
  Bg[0] = Rat(prime_power(p, w - ell));
  Bg[1] = Rat(prime_power(p, w - 2 * ell)) + Rat(prime_power(p, m - ell)) * prob.gamma(1);
  for (std::size_t n = 1; n + 1 <= M; ++n) Bg[n + 1] = out.b[n - 1];
  out.pair = {scale_argument(Ag, rescale).truncate(M), scale_argument(Bg, rescale)};

  const auto report = verify_factorization(f.coefficients(M), out.pair, M);
  out.checks.integrality = report.integral;
  out.checks.product = report.product && report.constant;

  // Reciprocal identity for A_hat(x) = p^{-l} A_g(p^l x).
  Series ahat(M + 1);
  ahat[0] = 1;
  ahat[1] = -1;
  Int qn = 1;
  for (std::size_t n = 1; n <= M; ++n) {
    qn *= q;
    ahat[n + 1] = -Rat(qn * out.a[n - 1]);
  }
  Series recip(M + 1);
  recip[0] = 1;
  recip[1] = 1;
  for (std::size_t n = 1; n <= M; ++n) recip[n + 1] = Rat(out.t[n - 1]);
  out.checks.reciprocal = ahat * recip == Series::constant(1, M + 1);

  out.checks.tn_congruences = true;
  for (long nu = -1; nu <= static_cast<long>(M); ++nu) {
    const Int lhs = tn_value_at_p_ell(tn_series(e, nu, M + 1), p, ell, nu);
    const Int t_nu = nu >= 1 ? out.t[static_cast<std::size_t>(nu - 1)] : Int(1);
    if (lhs != mod(t_nu, prime_power(p, ell * static_cast<unsigned long>(nu + 2)))) {
      out.checks.tn_congruences = false;
    }
  }

  const Int annihilation_modulus = prime_power(p, ell * (M + 2));
  Int acc = 0;
  for (std::size_t k = Ag.order() + 1; k-- > 0;) {
    acc = mod(acc * normalized.residue() + Ag[k].get_num(), annihilation_modulus);
  }
  out.checks.root_annihilation = acc == 0;

  if (!out.checks.all()) {
    throw Error(Errc::ResidualCheckFailed, "factorization self-check failed");
  }
  return out;
}

MultipleRootSplit factor_multiple_root(const IntPolynomial& f, std::optional<Prime> p) {
  if (f.degree() < 2) throw Error(Errc::NoMultipleRoot, "degree below 2");
  Prime prime = 0;
  if (p) {
    prime = *p;
  } else {
    const auto pp = prime_power_decompose(f.coeff(0));
    if (!pp || pp->first > std::numeric_limits<Prime>::max()) {
      throw Error(Errc::InvalidArgument, "cannot infer p: |f(0)| is not a prime power");
    }
    prime = pp->first.get_ui();
  }
  const RatPolynomial fq = to_rational(f);
  const IntPolynomial G = primitive_part(gcd(fq, fq.derivative()));
  if (G.degree() < 1) throw Error(Errc::NoMultipleRoot, "f is squarefree");

  const RatPolynomial gq = to_rational(G);
  const IntPolynomial radical = primitive_part(divrem(gq, gcd(gq, gq.derivative())).first);
  const bool has_root = radical.coeff(0) == 0 || !find_roots_in_pZp(radical, prime, 8).empty();
  if (!has_root) throw Error(Errc::NoMultipleRoot, "gcd(f, f') has no root in pZ_p");

  const auto [quot, rem] = divrem(fq, gq);
  if (!rem.is_zero()) throw Error(Errc::NoMultipleRoot, "gcd does not divide f");
  std::vector<Int> red;
  for (const auto& c : quot.coeffs()) red.push_back(require_integer(c, "f / G coefficient"));
  return {G, IntPolynomial(std::move(red))};
}

}  // namespace bellift
