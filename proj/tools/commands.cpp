#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellift/bell.hpp"
#include "bellift/bigmath.hpp"
#include "bellift/errors.hpp"
#include "bellift/factorize.hpp"
#include "bellift/hensel.hpp"
#include "bellift/padic.hpp"
#include "bellift/polynomial.hpp"
#include "bellift/series.hpp"

namespace bellift::cli {

namespace {

using nlohmann::json;

// Bad flags or values: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr unsigned long kScanLimit = 1000000;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const auto& s : split_list(text)) {
    try {
      out.push_back(parse_int(s));
    } catch (const Error&) {
      throw UsageError("not an integer: '" + s + "'");
    }
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& s : split_list(text)) {
    try {
      out.push_back(parse_rat(s));
    } catch (const Error&) {
      throw UsageError("not a rational: '" + s + "'");
    }
  }
  return out;
}

Int parse_int_flag(const std::string& text, const char* flag) {
  try {
    return parse_int(text);
  } catch (const Error&) {
    throw UsageError(std::string(flag) + ": not an integer: '" + text + "'");
  }
}

Prime parse_prime(const std::string& text) {
  const Int p = parse_int_flag(text, "--prime");
  if (p < 2 || p > std::numeric_limits<Prime>::max() || !is_prime(p)) {
    throw UsageError("--prime: " + text + " is not a prime below 2^64");
  }
  return p.get_ui();
}

json strings(const std::vector<Int>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

json series_strings(const Series& s) {
  json out = json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.get_str());
  return out;
}

std::vector<Int> int_list_from_json(const json& j) {
  std::vector<Int> out;
  for (const auto& s : j) out.push_back(parse_int(s.get<std::string>()));
  return out;
}

// "3 - x + 4*x^2 + O(x^3)"
std::string series_text(const Series& s) {
  std::string out;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    const Rat& c = s[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string var = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += var;
    } else {
      out += mag.get_str() + "*" + var;
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(s.order() + 1) + ")";
}

struct Output {
  std::ostream& out;
  bool as_json;

  void emit(json payload, const std::string& text) const {
    if (as_json) {
      payload["status"] = "ok";
      out << payload.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

// ---- lift ----

struct LiftArgs {
  std::string poly;
  std::string prime;
  std::optional<std::string> seed;
  unsigned long precision = 0;
  std::optional<unsigned long> nu;
  std::optional<unsigned long> kappa;
};

json lift_json(const LiftReport& r, const std::string& method, const Int& seed) {
  return {{"seed", seed.get_str()},
          {"method", method},
          {"root", to_json(r.root)},
          {"residue", r.root.residue().get_str()},
          {"terms_used", r.terms_used},
          {"residual_valuation", r.residual_valuation.to_string()}};
}

std::string lift_text(const LiftReport& r, const std::string& method, const Int& seed) {
  std::ostringstream s;
  s << "seed " << seed << " (" << method << ")\n"
    << "  root = " << to_string(r.root) << "\n"
    << "  residue = " << r.root.residue() << " mod " << r.root.prime() << "^"
    << r.root.precision() << "\n"
    << "  terms used = " << r.terms_used
    << ", v_p(f(root)) " << r.residual_valuation.to_string() << "\n";
  return s.str();
}

struct Lifted {
  LiftReport report;
  std::string method;
};

// Simple seeds go through the single series; seeds with f'(r0) = 0 mod p
// through lift_general, falling back to the rescaled lift (one root per
// simple root of p^{-2k} f(r0 + p^k x) mod p) when 2 kappa >= nu.
std::vector<Lifted> lift_seed(const IntPolynomial& f, const Int& seed, Prime p,
                              unsigned long precision, const LiftArgs& a) {
  const Valuation kappa = vp(f.derivative()(seed), p);
  const bool simple = p != 2 && !a.nu && (!a.kappa || *a.kappa == 0) && kappa == Valuation(0);
  if (simple) return {{lift_simple(f, seed, p, precision), "simple"}};
  try {
    return {{lift_general(f, seed, p, precision, {a.nu, a.kappa}), "general"}};
  } catch (const Error& e) {
    if (e.code() != Errc::InsufficientCongruence || kappa.is_infinite()) throw;
    const auto k = a.kappa.value_or(static_cast<unsigned long>(kappa.value()));
    std::vector<Lifted> out;
    for (auto& r : lift_rescaled(f, seed, p, k, precision)) out.push_back({std::move(r), "rescaled"});
    return out;
  }
}

int cmd_lift(const LiftArgs& a, const Output& o) {
  const auto coeffs = parse_int_list(a.poly);
  const Prime p = parse_prime(a.prime);
  const IntPolynomial f(coeffs);
  if (f.degree() < 1) throw UsageError("--poly: need degree >= 1");
  json payload{{"command", "lift"}, {"poly", strings(coeffs)}, {"prime", p},
               {"precision", a.precision}, {"roots", json::array()}};
  std::string text;
  auto record = [&](const Int& seed, const std::vector<Lifted>& lifted) {
    for (const auto& l : lifted) {
      payload["roots"].push_back(lift_json(l.report, l.method, seed));
      text += lift_text(l.report, l.method, seed);
    }
  };
  if (a.seed) {
    const Int seed = parse_int_flag(*a.seed, "--seed");
    record(seed, lift_seed(f, seed, p, a.precision, a));
  } else {
    if (p > kScanLimit) throw UsageError("--seed is required for p > 10^6");
    payload["skipped"] = json::array();
    for (unsigned long r = 0; r < p; ++r) {
      const Int seed(r);
      if (mod(f(seed), Int(p)) != 0) continue;
      try {
        record(seed, lift_seed(f, seed, p, a.precision, a));
      } catch (const Error& e) {
        payload["skipped"].push_back({{"seed", seed.get_str()}, {"code", to_string(e.code())}});
        text += "seed " + seed.get_str() + " skipped: " + e.what() + "\n";
      }
    }
    if (text.empty()) text = "no roots mod p\n";
  }
  o.emit(payload, text);
  return 0;
}

// ---- teichmuller ----

int cmd_teichmuller(const std::string& prime, std::optional<unsigned long> q,
                    unsigned long precision, const Output& o) {
  const Prime p = parse_prime(prime);
  std::vector<unsigned long> qs;
  if (q) {
    qs.push_back(*q);
  } else {
    if (p > kScanLimit) throw UsageError("--q is required for p > 10^6");
    for (unsigned long i = 1; i < p; ++i) qs.push_back(i);
  }
  json lifts = json::array();
  std::string text;
  for (const auto qi : qs) {
    const PadicInt xi = teichmuller(qi, p, precision);
    lifts.push_back({{"q", qi}, {"residue", xi.residue().get_str()}, {"root", to_json(xi)}});
    text += "xi_" + std::to_string(qi) + " = " + xi.residue().get_str() + " mod " +
            std::to_string(p) + "^" + std::to_string(precision) + "  (" + to_string(xi) + ")\n";
  }
  o.emit({{"command", "teichmuller"}, {"prime", p}, {"precision", precision}, {"lifts", lifts}},
         text);
  return 0;
}

// ---- bell / invert / classify ----

int cmd_bell(unsigned long n, unsigned long k, const std::string& xs, const Output& o) {
  const auto values = parse_rat_list(xs);
  const Rat b = bell(n, k, values);
  o.emit({{"command", "bell"}, {"n", n}, {"k", k}, {"value", to_fraction_string(b)}},
         b.get_str() + "\n");
  return 0;
}

int cmd_invert(const std::string& alphas, const Output& o) {
  const auto as = parse_rat_list(alphas);
  const auto betas = lagrange_invert(as);
  json out = json::array();
  std::string text;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    out.push_back(to_fraction_string(betas[i]));
    text += "beta_" + std::to_string(i + 1) + " = " + betas[i].get_str() + "\n";
  }
  o.emit({{"command", "invert"}, {"betas", out}}, text);
  return 0;
}

int cmd_classify(const std::string& f0s, const std::string& f1s, const Output& o) {
  const Int f0 = parse_int_flag(f0s, "--f0");
  const Int f1 = parse_int_flag(f1s, "--f1");
  const auto c = classify(f0, f1);
  json payload{{"command", "classify"}, {"kind", to_string(c.kind)}};
  if (c.kind != Reducibility::Unit && c.kind != Reducibility::ReducibleComposite) {
    payload["p"] = c.prime.get_str();
    payload["w"] = c.w;
  }
  if (c.kind == Reducibility::NeedsRootAnalysis) payload["m"] = c.m.to_string();
  o.emit(payload, c.to_string() + "\n");
  return 0;
}

// ---- factor ----

struct FactorArgs {
  std::string coeffs;
  std::optional<std::string> prime;
  std::size_t order = 0;
  std::string tail = "zero";
};

json checks_json(const FactorChecks& c) {
  return {{"product", c.product},
          {"divisibility", c.divisibility},
          {"tn_congruences", c.tn_congruences},
          {"reciprocal", c.reciprocal},
          {"root_annihilation", c.root_annihilation},
          {"integrality", c.integrality},
          {"two_ell_le_w", c.two_ell_le_w}};
}

int cmd_factor(const FactorArgs& a, const Output& o) {
  PowerSeriesInput f;
  f.head = parse_int_list(a.coeffs);
  try {
    f.geometric_ratio = parse_tail(a.tail);
  } catch (const Error& e) {
    throw UsageError(std::string("--tail: ") + e.what());
  }
  FactorOptions options;
  if (a.prime) options.prime = parse_prime(*a.prime);
  const auto r = factor(f, a.order, options);

  std::vector<std::string> digit_strings;
  for (const auto& e : r.digits.e) digit_strings.push_back(e.get_str());
  json payload{{"command", "factor"},
               {"coeffs", strings(f.head)},
               {"tail", f.tail_descriptor()},
               {"order", a.order},
               {"prime", r.p},
               {"w", r.w},
               {"m", r.m},
               {"ell", r.ell},
               {"root", to_json(r.root)},
               {"exact_root", r.exact_root},
               {"root_digits", digit_strings},
               {"rescale", r.rescale.get_str()},
               {"A", series_strings(r.pair.A)},
               {"B", series_strings(r.pair.B)},
               {"checks", checks_json(r.checks)}};

  std::ostringstream s;
  s << "p = " << r.p << ", w = " << r.w << ", m = " << r.m << ", l = " << r.ell << "\n"
    << "root = " << to_string(r.root) << (r.exact_root ? " (exact)" : "") << "\n";
  if (r.rescale != 1) s << "unit part rescaled: A(x) = A_g(" << r.rescale << "x), same for B\n";
  s << "A = " << series_text(r.pair.A) << "\n"
    << "B = " << series_text(r.pair.B) << "\n"
    << "checks: product, divisibility, T_n congruences, reciprocal, root annihilation, "
       "integrality all pass\n";
  o.emit(payload, s.str());
  return 0;
}

// ---- verify (hidden) ----

int cmd_verify(const std::string& path, const Output& o) {
  json doc;
  try {
    if (path == "-") {
      doc = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open '" + path + "'");
      doc = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("input is not JSON: ") + e.what());
  }

  bool ok = true;
  std::string detail;
  try {
    const auto command = doc.at("command").get<std::string>();
    if (command == "lift") {
      const IntPolynomial f(int_list_from_json(doc.at("poly")));
      for (const auto& r : doc.at("roots")) {
        const PadicInt root = padic_from_json(r.at("root"));
        const auto v = residual_valuation(f, root);
        if (v.value() < root.precision()) {
          ok = false;
          detail += "f(root) only divisible by p^" + std::to_string(v.value()) + "\n";
        }
      }
    } else if (command == "factor") {
      PowerSeriesInput f;
      f.head = int_list_from_json(doc.at("coeffs"));
      f.geometric_ratio = parse_tail(doc.at("tail").get<std::string>());
      const auto order = doc.at("order").get<std::size_t>();
      auto read_series = [](const json& j) {
        std::vector<Rat> c;
        for (const auto& s : j) c.push_back(parse_rat(s.get<std::string>()));
        if (c.empty()) throw Error(Errc::InvalidArgument, "empty series");
        return Series(std::move(c));
      };
      const FactorPair pair{read_series(doc.at("A")), read_series(doc.at("B"))};
      const auto report = verify_factorization(f.coefficients(order), pair, order);
      if (!report.ok()) {
        ok = false;
        detail = "A*B != f";
        if (report.first_mismatch) detail += " at x^" + std::to_string(*report.first_mismatch);
        detail += "\n";
      }
    } else {
      throw UsageError("verify understands lift and factor output, got '" + command + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed document: ") + e.what());
  }
  if (!ok) throw Error(Errc::ResidualCheckFailed, detail);
  o.emit({{"command", "verify"}, {"verified", true}}, "verified\n");
  return 0;
}

void report_error(const Output& o, std::ostream& err, const std::string& code,
                  const std::string& message) {
  if (o.as_json) {
    o.out << json{{"status", "error"}, {"code", code}, {"message", message}}.dump(2) << "\n";
  } else {
    err << "error: " << code << ": " << message << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic Hensel lifting and Z[[x]] factorization via Bell polynomials", "bellift"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON document instead of text");

  LiftArgs lift;
  auto* lift_cmd = app.add_subcommand("lift", "Lift a root of f mod p to Z_p");
  lift_cmd->add_option("--poly", lift.poly, "Coefficients, constant term first")->required();
  lift_cmd->add_option("--prime", lift.prime, "The prime p")->required();
  lift_cmd->add_option("--seed", lift.seed, "r0 with f(r0) = 0 mod p (all roots mod p if absent)");
  lift_cmd->add_option("--precision", lift.precision, "Digits N")
      ->required()
      ->check(CLI::PositiveNumber);
  lift_cmd->add_option("--nu", lift.nu, "v_p(f(r0)) lower bound");
  lift_cmd->add_option("--kappa", lift.kappa, "v_p(f'(r0))");

  std::string t_prime;
  std::optional<unsigned long> t_q;
  unsigned long t_precision = 0;
  auto* teich_cmd = app.add_subcommand("teichmuller", "(p-1)-st roots of unity in Z_p");
  teich_cmd->add_option("--prime", t_prime, "The prime p")->required();
  teich_cmd->add_option("--q", t_q, "Residue 1..p-1 (all if absent)");
  teich_cmd->add_option("--precision", t_precision, "Digits N")
      ->required()
      ->check(CLI::PositiveNumber);

  unsigned long b_n = 0;
  unsigned long b_k = 0;
  std::string b_xs;
  auto* bell_cmd = app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}(x1, x2, ...)");
  bell_cmd->add_option("n", b_n)->required();
  bell_cmd->add_option("k", b_k)->required();
  bell_cmd->add_option("xs", b_xs, "x1,x2,... (integers or a/b)")->required();

  std::string alphas;
  auto* invert_cmd = app.add_subcommand("invert", "Lagrange inversion of t(1 + sum a_r t^r/r!)");
  invert_cmd->add_option("alphas", alphas, "a1,a2,... (integers or a/b)")->required();

  std::string f0;
  std::string f1;
  auto* classify_cmd = app.add_subcommand("classify", "Reducibility by f(0) and f'(0)");
  classify_cmd->add_option("--f0", f0)->required();
  classify_cmd->add_option("--f1", f1)->required();

  FactorArgs fac;
  auto* factor_cmd = app.add_subcommand("factor", "Factor p^w + p^m g1 x + ... in Z[[x]]");
  factor_cmd->add_option("--coeffs", fac.coeffs, "Coefficients, constant term first")->required();
  factor_cmd->add_option("--prime", fac.prime, "The prime p (inferred from f(0) if absent)");
  factor_cmd->add_option("--order", fac.order, "Truncation order M")
      ->required()
      ->check(CLI::PositiveNumber);
  factor_cmd->add_option("--tail", fac.tail, "zero | geometric:<r>");

  std::string v_input = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Re-check lift or factor JSON output");
  verify_cmd->group("");
  verify_cmd->add_option("input", v_input, "JSON file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Output o{out, as_json};
  try {
    if (*lift_cmd) return cmd_lift(lift, o);
    if (*teich_cmd) return cmd_teichmuller(t_prime, t_q, t_precision, o);
    if (*bell_cmd) return cmd_bell(b_n, b_k, b_xs, o);
    if (*invert_cmd) return cmd_invert(alphas, o);
    if (*classify_cmd) return cmd_classify(f0, f1, o);
    if (*factor_cmd) return cmd_factor(fac, o);
    if (*verify_cmd) return cmd_verify(v_input, o);
  } catch (const UsageError& e) {
    report_error(o, err, "UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(o, err, to_string(e.code()), e.what());
    return 1;
  }
  return 2;
}

}  // namespace bellift::cli
