#include "qeuler/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <regex>

#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/padic_core.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/parse.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

namespace {

using json = nlohmann::ordered_json;

// ---- point access ----

std::string text(const json& pt, const char* key) {
  if (!pt.contains(key)) throw DomainError(std::string("missing parameter '") + key + "'");
  const json& v = pt.at(key);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string text(const json& pt, const char* key, const std::string& fallback) {
  return pt.contains(key) ? text(pt, key) : fallback;
}

long integer(const json& pt, const char* key) {
  if (!pt.contains(key)) throw DomainError(std::string("missing parameter '") + key + "'");
  const json& v = pt.at(key);
  if (v.is_number_integer()) return v.get<long>();
  const Rational r = parse_exact(text(pt, key));
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw DomainError(std::string("parameter '") + key + "' must be an integer");
  return r.get_num().get_si();
}

long integer(const json& pt, const char* key, long fallback) { return pt.contains(key) ? integer(pt, key) : fallback; }

unsigned long prime(const json& pt) {
  const long p = integer(pt, "p");
  if (!is_odd_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  return static_cast<unsigned long>(p);
}

// "random:<seed>" draws a rational in (0, 1) with small height.
Rational exact_q(const json& pt) {
  const std::string s = text(pt, "q");
  if (s.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(std::stoull(s.substr(7)));
    const long den = 2 + static_cast<long>(rng() % 11);
    const long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
    return make_rational(num, den);
  }
  return parse_exact(s);
}

DirichletCharacter character(const json& pt) { return parse_character(text(pt, "chi", "trivial")); }

QEulerParams<Cyclo> exact_params(const json& pt) {
  const XiSpec xi = parse_xi(text(pt, "xi", "1"));
  return QEulerParams<Cyclo>(integer(pt, "h", 1), Cyclo(exact_q(pt)), xi.value(), xi.order);
}

long bits_of(const json& pt) {
  const long bits = integer(pt, "bits", kDefaultBits);
  if (bits < 53) throw DomainError("complex mode needs at least 53 bits");
  return bits;
}

ComplexParams complex_of(const json& pt, long bits) {
  const XiSpec xi = parse_xi(text(pt, "xi", "1"));
  ComplexParams params = complex_params(integer(pt, "h", 1), BigFloat(exact_q(pt), bits), xi.value(), bits);
  params.xi_order = xi.order;
  return params;
}

SeriesOptions options_of(const json& pt) {
  SeriesOptions o;
  o.bits = bits_of(pt);
  if (pt.contains("target")) o.target = parse_exact(text(pt, "target")).get_d();
  if (pt.contains("max_terms")) o.max_terms = integer(pt, "max_terms");
  return o;
}

PadicLContext padic_context(const json& pt) {
  PadicLContext ctx;
  ctx.p = prime(pt);
  ctx.N = integer(pt, "N", 6);
  ctx.chi = character(pt);
  ctx.F = integer(pt, "F");
  ctx.h = integer(pt, "h", 1);
  ctx.q = parse_padic_q(text(pt, "q", "1+p"), ctx.p);
  ctx.xi_order = static_cast<unsigned long>(integer(pt, "xi_order", 1));
  ctx.xi_exponent = ctx.xi_order == 1 ? 0 : integer(pt, "xi_exp", 1);
  return ctx;
}

// ---- report helpers ----

BigFloat value_slack(const BigComplex& v, long bits) {
  return BigFloat::exp2(20 - bits, bits) * (BigFloat(1.0, bits) + abs(v));
}

VerificationReport series_report(const std::string& identity, const json& pt, const SeriesResult& lhs,
                                 const BigComplex& rhs, BigFloat extra, long bits) {
  BigFloat bound = lhs.tail_bound + rounding_slack(lhs) + value_slack(rhs, bits) + extra;
  VerificationReport r = complex_report(identity, pt, lhs.value, rhs, bound);
  r.params["terms"] = lhs.terms_used;
  if (!lhs.converged) {
    r.pass = false;
    r.status = "fail";
    r.note = "series did not reach the target accuracy";
  }
  return r;
}

VerificationReport two_series_report(const std::string& identity, const json& pt, const SeriesResult& lhs,
                                     const SeriesResult& rhs, long bits) {
  BigFloat extra = rhs.tail_bound + rounding_slack(rhs);
  VerificationReport r = series_report(identity, pt, lhs, rhs.value, extra, bits);
  if (!rhs.converged) {
    r.pass = false;
    r.status = "fail";
    r.note = "series did not reach the target accuracy";
  }
  return r;
}

template <class P>
VerificationReport certified_report(const std::string& identity, json pt, const P& lhs, long lhs_cert, const P& rhs,
                                    long rhs_cert, long c) {
  const long certified = std::min(lhs_cert, rhs_cert);
  pt["certified"] = certified;
  return padic_report(identity, pt, lhs, rhs, certified - c);
}

// Sums until the tail bound reaches the target, doubling the term count.
SeriesResult to_target(const std::function<SeriesResult(long)>& series, const SeriesOptions& o) {
  long terms = 64;
  SeriesResult r = series(terms);
  while (r.tail_bound.to_double() > o.target && terms < o.max_terms) {
    terms = std::min(2 * terms, o.max_terms);
    r = series(terms);
  }
  r.converged = r.tail_bound.to_double() <= o.target;
  return r;
}

BigComplex embed(const Cyclo& x, long bits) { return embed_complex(x, bits); }

// f(x) = x^k from "1", "x" or "x^k".
long monomial_degree(const std::string& f) {
  if (f == "1") return 0;
  if (f == "x") return 1;
  static const std::regex power(R"(x\^(\d+))");
  std::smatch m;
  if (std::regex_match(f, m, power)) return std::stol(m[1]);
  throw DomainError("integrand '" + f + "' not recognized (expected 1, x or x^k)");
}

// ---- suites ----

VerificationReport functional_eq(const json& pt) {
  const unsigned long p = prime(pt);
  const long N = integer(pt, "N", 6);
  const XDomain dom{static_cast<unsigned long>(integer(pt, "d", 1)), p, N};
  const long k = monomial_degree(text(pt, "f", "x"));
  const long n = integer(pt, "n");
  auto f = [&](long x) { return PadicScalar(p, N, ipow(BigInt(x), static_cast<unsigned long>(k))); };
  VerificationReport r = check_functional_equation(f, n, dom, integer(pt, "c", 0), PadicScalar(p, N, 1));
  const json form = r.params["form"];
  r.params = pt;
  r.params["form"] = form;
  return r;
}

RamifiedScalar padic_xi(unsigned long p, long N, long order) {
  if (order == 1) return RamifiedScalar(PadicScalar(p, N, 1));
  if (order != static_cast<long>(p)) throw DomainError("p-adic twists need xi of order 1 or p");
  return RamifiedScalar::xi_power(p, N, 1);
}

VerificationReport moments(const json& pt) {
  const std::string kind = text(pt, "kind");
  const unsigned long p = prime(pt);
  const long N = integer(pt, "N", 6);
  const long c = integer(pt, "c", 0);
  const PadicScalar one(p, N, 1);
  if (kind == "constant" || kind == "linear") {
    const XDomain dom{static_cast<unsigned long>(integer(pt, "d", 1)), p, N};
    const long deg = kind == "linear" ? 1 : 0;
    const auto I = fermionic_integral<PadicScalar>(
        [&](long x) { return PadicScalar(p, N, deg ? BigInt(x) : BigInt(1)); }, Measure::alternating, -one, dom);
    const Rational expected = deg ? make_rational(-1, 2) : Rational(1);
    VerificationReport r = padic_report("moments", pt, I.value, PadicScalar::from_rational(p, N, expected), N - c);
    if (deg) {
      const BigInt M(dom.size());
      r.note = "level sum -(M-1)/2 = " + BigInt(-(M - 1) / 2).get_str();
    }
    return r;
  }
  const long n = integer(pt, "n");
  const long order = integer(pt, "xi_order", 1);
  const RamifiedScalar xi = padic_xi(p, N, order);
  const Cyclo xi_exact = order == 1 ? Cyclo(1) : Cyclo::zeta(p, 1);
  const PadicEmbedding emb(p, N);
  if (kind == "twisted" || kind == "twisted_generalized") {
    const DirichletCharacter chi = kind == "twisted" ? DirichletCharacter() : character(pt);
    if (!emb.embeds(chi.order())) throw DomainError("character values do not embed in Z_p[xi_p]");
    std::vector<RamifiedScalar> table;
    for (unsigned long a = 0; a < chi.modulus(); ++a) table.push_back(emb(chi(static_cast<long>(a))));
    const XDomain dom{chi.modulus(), p, N};
    const auto I = fermionic_integral<RamifiedScalar>(
        [&](long x) {
          return table[static_cast<std::size_t>(x) % table.size()] * pow(xi, x) *
                 PadicScalar(p, N, ipow(BigInt(x), static_cast<unsigned long>(n)));
        },
        Measure::alternating, RamifiedScalar(-one), dom);
    const Cyclo exact = kind == "twisted" ? twisted_euler_numbers(n, xi_exact)[static_cast<std::size_t>(n)]
                                      : generalized_twisted_euler_numbers(n, chi, xi_exact)[static_cast<std::size_t>(n)];
    VerificationReport r = padic_report("moments", pt, I.value, emb(exact), N - c);
    if (I.previous) r.note = "previous level distance p^-" + padic_distance(*I.previous, emb(exact)).get_str();
    return r;
  }
  if (kind == "q_moment") {
    const long x = integer(pt, "x", 0);
    const long h = integer(pt, "h", 1);
    const Rational q = parse_padic_q(text(pt, "q", "1+p"), p);
    validate_padic_q(PadicScalar::from_rational(p, N, q));
    const RamifiedScalar lhs = q_moment_riemann_sum(n, x, h, PadicScalar::from_rational(p, N, q), xi, XDomain{1, p, N});
    const QEulerParams<Cyclo> params(h, Cyclo(q), xi_exact, static_cast<unsigned long>(order));
    return padic_report("moments", pt, lhs, emb(euler_poly(n, Rational(x), params)), N - c);
  }
  throw DomainError("unknown moments kind '" + kind + "'");
}

VerificationReport distribution(const json& pt) {
  const QEulerParams<Cyclo> params = exact_params(pt);
  const long n = integer(pt, "n");
  const Rational x = parse_exact(text(pt, "x", "0"));
  const long d = integer(pt, "d");
  return exact_report("distribution", pt, euler_poly(n, x, params), distribution_rhs(n, x, d, params));
}

VerificationReport eq10_consistency(const json& pt) {
  const std::string kind = text(pt, "kind");
  const long n = integer(pt, "n");
  const DirichletCharacter chi = character(pt);
  if (kind == "modulus") {
    const QEulerParams<Cyclo> params = exact_params(pt);
    const long F = integer(pt, "multiple", 3) * static_cast<long>(chi.modulus());
    return exact_report("eq10_consistency", pt, generalized_euler(n, chi, params), generalized_euler(n, chi, params, F));
  }
  if (kind == "series") {
    const SeriesOptions o = options_of(pt);
    const ComplexParams cp = complex_of(pt, o.bits);
    const SeriesResult lhs = to_target([&](long K) { return generalized_euler_series(n, chi, cp, K); }, o);
    const Cyclo exact = generalized_euler(n, chi, exact_params(pt));
    return series_report("eq10_consistency", pt, lhs, embed(exact, o.bits), BigFloat(o.bits), o.bits);
  }
  throw DomainError("unknown eq10_consistency kind '" + kind + "'");
}

VerificationReport interpolation_complex(const json& pt) {
  const std::string kind = text(pt, "kind");
  const SeriesOptions o = options_of(pt);
  const long bits = o.bits;
  const ComplexParams cp = complex_of(pt, bits);
  if (kind == "zeta" || kind == "l") {
    const long n = integer(pt, "n");
    const DirichletCharacter chi = character(pt);
    const BigComplex s(BigFloat(Rational(-n), bits));
    const QEulerParams<Cyclo> params = exact_params(pt);
    const SeriesResult lhs = kind == "zeta" ? zeta_E(s, cp, o) : l_function(s, chi, cp, o);
    // The series start at k = 1; the finite sums include the k = 0 term [2]_q [0]_q^n.
    Cyclo exact = kind == "zeta" ? euler_number(n, params) : generalized_euler(n, chi, params);
    if (n == 0 && !(chi.modulus() > 1 && kind == "l")) exact -= two_bracket(params.q());
    return series_report("interpolation_complex", pt, lhs, embed(exact, bits), BigFloat(bits), bits);
  }
  if (kind == "hurwitz" || kind == "poly_series") {
    const long n = integer(pt, "n");
    const Rational x = parse_exact(text(pt, "x"));
    const SeriesResult lhs =
        kind == "hurwitz"
            ? hurwitz_zeta_E(BigComplex(BigFloat(Rational(-n), bits)), x, cp, o)
            : (pt.contains("terms") ? euler_poly_series(n, x, cp, integer(pt, "terms"))
                                    : to_target([&](long K) { return euler_poly_series(n, x, cp, K); }, o));
    BigComplex rhs(bits);
    if (x.get_den() == 1) {
      rhs = embed(euler_poly(n, x, exact_params(pt)), bits);
    } else {
      // q^x is irrational: evaluate the same finite sum in floating point at twice the precision.
      const ComplexParams wide = complex_of(pt, 2 * bits);
      rhs = euler_poly(n, x, wide);
    }
    VerificationReport r = series_report("interpolation_complex", pt, lhs, rhs, BigFloat(bits), bits);
    if (pt.contains("terms")) {
      r.pass = abs(lhs.value - rhs) <= lhs.tail_bound + rounding_slack(lhs) + value_slack(rhs, bits);
      r.status = r.pass ? "pass" : "fail";
      r.note.clear();
    }
    return r;
  }
  if (kind == "l_hurwitz") {
    const BigComplex s = parse_complex(text(pt, "s"), bits);
    const DirichletCharacter chi = character(pt);
    return two_series_report("interpolation_complex", pt, l_function(s, chi, cp, o),
                             l_function_hurwitz(s, chi, cp, o), bits);
  }
  if (kind == "shift") {
    // zeta_E(s, 1) = -xi^{-1} q^{-h} zeta_E(s).
    const BigComplex s = parse_complex(text(pt, "s"), bits);
    const SeriesResult h1 = hurwitz_zeta_E(s, Rational(1), cp, o);
    SeriesResult z = zeta_E(s, cp, o);
    const BigComplex factor = -(one_like(cp.xi) / (cp.xi * cp.q_power(Rational(cp.h))));
    const BigFloat scale = abs(factor);
    z.value = factor * z.value;
    z.tail_bound = scale * z.tail_bound;
    return two_series_report("interpolation_complex", pt, h1, z, bits);
  }
  throw DomainError("unknown interpolation_complex kind '" + kind + "'");
}

VerificationReport eq14(const json& pt) {
  const std::string kind = text(pt, "kind");
  const SeriesOptions o = options_of(pt);
  const long bits = o.bits;
  const ComplexParams cp = complex_of(pt, bits);
  const BigComplex s = parse_complex(text(pt, "s"), bits);
  const long F = integer(pt, "F");
  if (kind == "decomposition") {
    const DirichletCharacter chi = character(pt);
    if (F % 2 == 0 || F % static_cast<long>(chi.modulus()) != 0)
      throw DomainError("F must be an odd multiple of the character modulus");
    const BigComplex two = two_bracket(cp.q());
    const BigFloat two_abs = abs(two);
    SeriesResult lhs;
    lhs.value = BigComplex(bits);
    lhs.tail_bound = BigFloat(bits);
    lhs.converged = true;
    for (long a = 1; a <= F; ++a) {
      const Cyclo c = chi(a);
      if (c.is_zero()) continue;
      const SeriesResult h = partial_zeta_H(s, a, F, cp, o);
      lhs.value += two * embed(c, bits) * h.value;
      lhs.tail_bound += two_abs * (h.tail_bound + rounding_slack(h));
      lhs.terms_used += h.terms_used;
      lhs.converged = lhs.converged && h.converged;
    }
    return two_series_report("eq14", pt, lhs, l_function(s, chi, cp, o), bits);
  }
  if (kind == "direct") {
    const long a = integer(pt, "a");
    return two_series_report("eq14", pt, partial_zeta_H(s, a, F, cp, o), partial_zeta_H_direct(s, a, F, cp, o), bits);
  }
  throw DomainError("unknown eq14 kind '" + kind + "'");
}

VerificationReport eq15(const json& pt) {
  const SeriesOptions o = options_of(pt);
  const long bits = o.bits;
  const long n = integer(pt, "n");
  const long a = integer(pt, "a");
  const long F = integer(pt, "F");
  const SeriesResult lhs = partial_zeta_H(BigComplex(BigFloat(Rational(-n), bits)), a, F, complex_of(pt, bits), o);
  const Cyclo exact = partial_zeta_exact(n, a, F, exact_params(pt));
  return series_report("eq15", pt, lhs, embed(exact, bits), BigFloat(bits), bits);
}

VerificationReport eq16(const json& pt) {
  const PadicLContext ctx = padic_context(pt);
  const long n = integer(pt, "n");
  const long a = integer(pt, "a");
  const PadicValue lhs = partial_zeta_p(PadicExponent::of(-n), a, ctx);
  const PadicValue rhs = partial_zeta_p_exact(n, a, ctx);
  return certified_report("eq16", pt, lhs.value, lhs.certified, rhs.value, rhs.certified, integer(pt, "c", 0));
}

VerificationReport theorem1(const json& pt) {
  const PadicLContext ctx = padic_context(pt);
  const long n = integer(pt, "n");
  const bool primitive = text(pt, "psi", "primitive") == "primitive";
  const PadicValue lhs = l_p(PadicExponent::of(-n), ctx);
  const PadicValue rhs = theorem1_rhs(n, ctx, primitive);
  return certified_report("theorem1", pt, lhs.value, lhs.certified, rhs.value, rhs.certified, integer(pt, "c", 0));
}

VerificationReport remark1(const json& pt) {
  const std::string kind = text(pt, "kind");
  const PadicLContext ctx = padic_context(pt);
  const PadicExponent s = PadicExponent::of(parse_exact(text(pt, "s")));
  if (s.rational->get_den() % ctx.p == 0) throw DomainError("s must lie in Z_p");
  const long level = integer(pt, "level");
  const long c = integer(pt, "c", 0);
  if (kind == "level") {
    if (level < 2) throw DomainError("level-to-level comparison needs level >= 2");
    const LevelValue I = remark1_integral(s, ctx, level);
    json p = pt;
    p["certified"] = level - 1;
    return padic_report("remark1", p, I.value, *I.previous, level - 1 - c);
  }
  const PadicValue L = l_p(s, ctx);
  if (kind == "integral" || kind == "series") {
    const LevelValue V = kind == "integral" ? remark1_integral(s, ctx, level) : l_p_series(s, ctx, level);
    return certified_report("remark1", pt, V.value, V.certified, L.value, L.certified, c);
  }
  throw DomainError("unknown remark1 kind '" + kind + "'");
}

using Runner = VerificationReport (*)(const json&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"functional_eq", functional_eq}, {"moments", moments},
      {"distribution", distribution},   {"eq10_consistency", eq10_consistency},
      {"interpolation_complex", interpolation_complex},
      {"eq14", eq14},                   {"eq15", eq15},
      {"eq16", eq16},                   {"theorem1", theorem1},
      {"remark1", remark1},
  };
  return table;
}

// ---- grids ----

json range(long a, long b) {
  json out = json::array();
  for (long i = a; i <= b; ++i) out.push_back(i);
  return out;
}

json chars_mod(std::initializer_list<unsigned long> moduli) {
  json out = json::array();
  for (unsigned long m : moduli) {
    const std::size_t count = enumerate_characters(m).size();
    for (std::size_t k = 0; k < count; ++k) out.push_back("f=" + std::to_string(m) + ",index=" + std::to_string(k));
  }
  return out;
}

json axes(std::initializer_list<std::pair<const char*, json>> items) {
  json out = json::object();
  for (const auto& [k, v] : items) out[k] = v;
  return out;
}

void resolve(const json& base, Grid& out) {
  json pt = base;
  const unsigned long p = pt.contains("p") ? prime(pt) : 0;
  if (pt.contains("xi_order") && pt["xi_order"].is_string()) {
    if (pt["xi_order"].get<std::string>() != "p" || p == 0) throw DomainError("xi_order symbol needs a prime p");
    pt["xi_order"] = p;
  }
  if (pt.contains("F") && pt["F"].is_string()) {
    static const std::regex sym(R"((\d*)(p|f|lcm))");
    std::smatch m;
    const std::string s = pt["F"].get<std::string>();
    if (!std::regex_match(s, m, sym)) throw DomainError("F symbol '" + s + "' not recognized");
    const long k = m[1].length() ? std::stol(m[1]) : 1;
    const long f = static_cast<long>(character(pt).modulus());
    if (m[2] != "f" && p == 0) throw DomainError("F symbol '" + s + "' needs a prime p");
    const long base_value = m[2] == "p" ? static_cast<long>(p) : (m[2] == "f" ? f : std::lcm(static_cast<long>(p), f));
    pt["F"] = k * base_value;
  }
  if (pt.contains("a") && pt["a"].is_string()) {
    if (pt["a"].get<std::string>() != "all") throw DomainError("a symbol must be 'all'");
    const long F = integer(pt, "F");
    const long top = p ? F - 1 : F;
    for (long a = 1; a <= top; ++a) {
      if (p && a % static_cast<long>(p) == 0) continue;
      json q = pt;
      q["a"] = a;
      out.push_back(q);
    }
    return;
  }
  out.push_back(pt);
}

void product(const json& ax, json::const_iterator it, json& current, Grid& out) {
  if (it == ax.end()) {
    resolve(current, out);
    return;
  }
  const json& values = it.value();
  auto next = std::next(it);
  if (!values.is_array()) {
    current[it.key()] = values;
    product(ax, next, current, out);
    return;
  }
  for (const json& v : values) {
    current[it.key()] = v;
    product(ax, next, current, out);
  }
  current.erase(it.key());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"functional_eq", "moments", "distribution", "eq10_consistency",
                                                 "interpolation_complex", "eq14", "eq15", "eq16", "theorem1",
                                                 "remark1"};
  return names;
}

bool is_suite(const std::string& name) { return runners().count(name) != 0; }

std::vector<json> default_axes(const std::string& suite) {
  const json primes = {3, 5, 7};
  const json complex_q = {"0.3", "0.5", "0.7"};
  if (suite == "functional_eq")
    return {axes({{"p", primes}, {"N", {6}}, {"d", {1}}, {"n", range(1, 4)}, {"f", {"1", "x", "x^2", "x^3"}},
                  {"c", {0}}})};
  if (suite == "moments")
    return {axes({{"kind", {"constant", "linear"}}, {"p", primes}, {"N", range(1, 6)}, {"d", {1, 3}}, {"c", {0}}}),
            axes({{"kind", {"twisted"}}, {"p", {3, 5}}, {"N", {6}}, {"n", range(0, 4)}, {"xi_order", {1, "p"}},
                  {"c", {0}}}),
            axes({{"kind", {"twisted"}}, {"p", {7}}, {"N", {6}}, {"n", range(0, 4)}, {"xi_order", {1}}, {"c", {0}}}),
            axes({{"kind", {"twisted_generalized"}}, {"p", {3, 5}}, {"N", {5}}, {"n", range(0, 3)},
                  {"chi", {"quadratic:3", "quadratic:5"}}, {"xi_order", {1, "p"}}, {"c", {0}}}),
            axes({{"kind", {"q_moment"}}, {"p", primes}, {"N", {6}}, {"n", range(0, 4)}, {"x", {0, 2}}, {"h", {1, 2}},
                  {"q", {"1+p"}}, {"xi_order", {1}}, {"c", {0}}}),
            axes({{"kind", {"q_moment"}}, {"p", {3, 5}}, {"N", {6}}, {"n", range(0, 4)}, {"x", {0, 2}}, {"h", {1, 2}},
                  {"q", {"1+p"}}, {"xi_order", {"p"}}, {"c", {0}}})};
  if (suite == "distribution")
    return {axes({{"n", range(0, 8)}, {"d", {1, 3, 5}}, {"q", {"1/2", "2/3", "3/5"}},
                  {"xi", {"1", "-1", "zeta:3", "zeta:4"}}, {"h", {1, 2, 3}}, {"x", {0}}}),
            axes({{"n", range(0, 4)}, {"d", {7}}, {"q", {"random:1", "random:2"}}, {"xi", {"zeta:6", "zeta:12"}},
                  {"h", {-1, 2}}, {"x", {0, 1}}})};
  if (suite == "eq10_consistency")
    return {axes({{"kind", {"modulus"}}, {"n", range(0, 5)}, {"chi", chars_mod({1, 3, 5})}, {"q", {"1/2", "2/3"}},
                  {"xi", {"1", "zeta:4"}}, {"h", {1, 2}}, {"multiple", {3}}}),
            axes({{"kind", {"series"}}, {"n", range(0, 5)}, {"chi", chars_mod({1, 3, 5})}, {"q", complex_q},
                  {"xi", {"1"}}, {"h", {1}}})};
  if (suite == "interpolation_complex")
    return {axes({{"kind", {"zeta"}}, {"n", range(0, 5)}, {"q", complex_q}, {"xi", {"1", "-1", "zeta:4"}},
                  {"h", {1, 2, 3}}}),
            axes({{"kind", {"hurwitz"}}, {"n", range(0, 5)}, {"x", {"1/3", "1/2", "1"}}, {"q", complex_q},
                  {"xi", {"1", "-1"}}, {"h", {1, 2}}}),
            axes({{"kind", {"l"}}, {"n", range(0, 5)}, {"chi", chars_mod({1, 3, 5})}, {"q", complex_q},
                  {"xi", {"1"}}, {"h", {1}}}),
            axes({{"kind", {"l_hurwitz"}}, {"s", {"-2", "-1", "0.5"}}, {"chi", {"quadratic:3"}}, {"q", {"0.5"}},
                  {"xi", {"1"}}, {"h", {1}}}),
            axes({{"kind", {"shift"}}, {"s", {"-1", "2", "0.5+1i"}}, {"q", {"0.5"}}, {"xi", {"1", "zeta:4"}},
                  {"h", {1}}}),
            axes({{"kind", {"poly_series"}}, {"n", range(0, 6)}, {"x", {"0", "1"}}, {"q", complex_q},
                  {"xi", {"1", "-1", "zeta:4"}}, {"h", {1, 2, 3}}})};
  if (suite == "eq14")
    return {axes({{"kind", {"decomposition"}}, {"s", {"0", "-1", "-2", "-3", "-4", "-5", "0.5", "2", "0.5+1i"}},
                  {"chi", chars_mod({1, 3, 5})}, {"F", {"f", "3f"}}, {"q", complex_q}, {"xi", {"1"}}, {"h", {1}}}),
            axes({{"kind", {"direct"}}, {"s", {"-1", "0.5", "2"}}, {"F", {3, 5}}, {"a", {"all"}}, {"q", complex_q},
                  {"xi", {"1", "zeta:4"}}, {"h", {1}}})};
  if (suite == "eq15")
    return {axes({{"n", range(0, 5)}, {"F", {1, 3, 5}}, {"a", {"all"}}, {"q", complex_q}, {"xi", {"1", "-1"}},
                  {"h", {1, 2}}})};
  if (suite == "eq16")
    return {axes({{"p", primes}, {"N", {6}}, {"F", {"p", "3p"}}, {"n", range(0, 4)}, {"a", {"all"}}, {"h", {1}},
                  {"q", {"1+p"}}, {"xi_order", {1}}, {"c", {0}}}),
            axes({{"p", {3, 5}}, {"N", {6}}, {"F", {"p"}}, {"n", range(0, 4)}, {"a", {"all"}}, {"h", {1, 2}},
                  {"q", {"1+p"}}, {"xi_order", {"p"}}, {"c", {0}}})};
  if (suite == "theorem1")
    return {axes({{"p", {3, 5}}, {"N", {6}}, {"chi", {"trivial", "quadratic:3", "quadratic:5"}}, {"F", {"lcm"}},
                  {"n", range(0, 4)}, {"h", {1}}, {"q", {"1+p"}}, {"xi_order", {1, "p"}}, {"c", {0}}}),
            axes({{"p", {7}}, {"N", {6}}, {"chi", {"trivial", "quadratic:3", "quadratic:5"}}, {"F", {"lcm"}},
                  {"n", range(0, 4)}, {"h", {1}}, {"q", {"1+p"}}, {"xi_order", {1}}, {"c", {0}}})};
  if (suite == "remark1")
    return {axes({{"kind", {"integral", "series", "level"}}, {"p", primes}, {"N", {6}},
                  {"chi", {"trivial", "quadratic:3"}}, {"F", {"lcm"}}, {"s", {"0", "-1", "-2", "1", "1/2"}},
                  {"level", {3, 4}}, {"h", {1}}, {"q", {"1+p"}}, {"xi_order", {1}}, {"c", {0}}}),
            axes({{"kind", {"integral", "series", "level"}}, {"p", {3, 5}}, {"N", {6}}, {"chi", {"trivial"}},
                  {"F", {"lcm"}}, {"s", {"0", "-1", "-2"}}, {"level", {3, 4}}, {"h", {1}}, {"q", {"1+p"}},
                  {"xi_order", {"p"}}, {"c", {0}}})};
  throw DomainError("unknown suite '" + suite + "'");
}

std::vector<json> override_axes(std::vector<json> ax, const json& overrides) {
  for (json& set : ax) {
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
      set[it.key()] = it.value().is_array() ? it.value() : json::array({it.value()});
    }
  }
  return ax;
}

Grid expand(const std::vector<json>& ax) {
  Grid out;
  for (const json& set : ax) {
    json current = json::object();
    product(set, set.begin(), current, out);
  }
  return out;
}

VerificationReport run_point(const std::string& suite, const GridPoint& point) {
  const auto it = runners().find(suite);
  if (it == runners().end()) throw DomainError("unknown suite '" + suite + "'");
  try {
    return it->second(point);
  } catch (const DomainError& e) {
    return skipped_report(suite, point, e.what());
  }
}

std::vector<VerificationReport> run_suite(const std::string& suite, const Grid& grid) {
  if (!is_suite(suite)) throw DomainError("unknown suite '" + suite + "'");
  std::vector<VerificationReport> out;
  out.reserve(grid.size());
  for (const GridPoint& pt : grid) out.push_back(run_point(suite, pt));
  return out;
}

std::vector<VerificationReport> run_default_suite(const std::string& suite) {
  return run_suite(suite, expand(default_axes(suite)));
}

const std::vector<CoverageEntry>& coverage_manifest() {
  static const std::vector<CoverageEntry> manifest = {
      {"euler-core", "euler_poly", {"distribution", "interpolation_complex", "moments"}, {}},
      {"euler-core", "euler_poly_series", {"interpolation_complex"}, {"poly_series"}},
      {"euler-core", "distribution_rhs", {"distribution"}, {}},
      {"euler-core", "generalized_euler", {"eq10_consistency", "interpolation_complex", "theorem1"}, {}},
      {"complex-zeta", "zeta_E", {"interpolation_complex"}, {"zeta", "shift"}},
      {"complex-zeta", "hurwitz_zeta_E", {"interpolation_complex"}, {"hurwitz", "shift"}},
      {"complex-zeta", "l_function", {"interpolation_complex", "eq14"}, {"l", "l_hurwitz", "decomposition"}},
      {"complex-zeta", "partial_zeta_H", {"eq14", "eq15"}, {}},
      {"padic-core", "teichmuller", {"eq16", "theorem1"}, {}},
      {"padic-core", "angle_bracket", {"eq16", "remark1"}, {}},
      {"padic-core", "one_unit_power", {"remark1"}, {}},
      {"padic-core", "fermionic_integral", {"moments"}, {"constant", "linear", "twisted", "twisted_generalized", "q_moment"}},
      {"padic-core", "check_functional_equation", {"functional_eq"}, {}},
      {"padic-l", "partial_zeta_p", {"eq16", "theorem1"}, {}},
      {"padic-l", "l_p", {"theorem1", "remark1"}, {}},
      {"padic-l", "theorem1_rhs", {"theorem1"}, {}},
      {"padic-l", "l_p_series", {"remark1"}, {"series"}},
      {"padic-l", "remark1_integral", {"remark1"}, {"integral", "level"}},
  };
  return manifest;
}

}  // namespace qeuler
