// ncaffine: command-line front end for the affine-relation algebra library.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncaffine/ncaffine.hpp"

using namespace ncaffine;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraOptions {
  std::optional<std::string> q, alpha, beta, gamma;
  std::optional<std::string> name;
  std::optional<std::uint64_t> prime;
  std::string engine = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "value of q as p/r (symbolic when omitted)");
    cmd->add_option("--alpha", alpha, "value of alpha as p/r");
    cmd->add_option("--beta", beta, "value of beta as p/r");
    cmd->add_option("--gamma", gamma, "value of gamma as p/r");
    cmd->add_option("--algebra", name,
                    "named algebra: commutative, weyl, shift, qplane, qweyl, generic, "
                    "q-difference, c-shift");
    cmd->add_option("--prime", prime, "work over GF(p)");
    cmd->add_option("--engine", engine, "auto, rewrite, formula, recurrence, pullback");
  }

  [[nodiscard]] FieldMode mode() const {
    if (!prime) return FieldMode::rational();
    try {
      return FieldMode::prime(*prime);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  [[nodiscard]] Engine engine_value() const {
    auto e = engine_from_name(engine);
    if (!e) throw UsageError("unknown engine '" + engine + "'");
    return *e;
  }

  static FieldElem value(const FieldMode& mode, const std::string& text) {
    try {
      return FieldElem::from_rational(mode, parse_rat(text));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad parameter value '" + text + "': " + e.what());
    }
  }

  [[nodiscard]] Algebra build() const {
    if (name) return named();
    const bool all = q && alpha && beta && gamma;
    if (all) {
      const FieldMode m = mode();
      return make_algebra(value(m, *q), value(m, *alpha), value(m, *beta), value(m, *gamma));
    }
    if (prime) throw UsageError("--prime needs all four parameters or a named algebra");
    const FieldMode m = FieldMode::param();
    auto pick = [&m](const std::optional<std::string>& v, Symbol s) {
      return v ? value(m, *v) : FieldElem::symbol(s);
    };
    return make_algebra(pick(q, Symbol::q), pick(alpha, Symbol::alpha), pick(beta, Symbol::beta),
                        pick(gamma, Symbol::gamma));
  }

  [[nodiscard]] Algebra named() const {
    const std::string& n = *name;
    if (n == "generic") return generic_algebra();
    const FieldMode m = mode();
    auto q_value = [&]() {
      if (q) return value(m, *q);
      if (prime) throw UsageError("quantum algebras over GF(p) need --q");
      return FieldElem::symbol(Symbol::q);
    };
    if (n == "commutative") return model_algebra(ModelClass::Commutative, m);
    if (n == "weyl") return model_algebra(ModelClass::Weyl, m);
    if (n == "shift") return model_algebra(ModelClass::Shift, m);
    if (n == "qplane") return model_algebra(ModelClass::QuantumPlane, q_value());
    if (n == "qweyl") return model_algebra(ModelClass::QWeyl, q_value());
    if (n == "q-difference") return q_difference(q_value());
    if (n == "c-shift") return c_shift(FieldElem::one(m));
    throw UsageError("unknown algebra '" + n + "'");
  }
};

NcPoly parse_input(const std::string& text, const Algebra& alg, Engine engine) {
  try {
    return eval(text, alg, engine);
  } catch (const SyntaxError& e) {
    throw UsageError(e.what());
  } catch (const UnknownSymbol& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json poly_json(const NcPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"a", m.a}, {"b", m.b}, {"coeff", c.to_string()}});
  return {{"text", f.to_string()}, {"terms", terms}};
}

void print_poly(const NcPoly& f, bool json) {
  if (json)
    std::cout << poly_json(f).dump(2) << '\n';
  else
    std::cout << f.to_string() << '\n';
}

std::vector<Workload> select_workloads(const std::string& which, const Algebra& alg, std::uint64_t seed) {
  if (which == "default") return default_suite(alg, seed);
  if (which == "powers") return {powers_workload(alg)};
  if (which == "random") return {random_products_workload(alg, seed)};
  if (which == "binomial") return binomial_workloads(alg->mode);
  throw UsageError("unknown workload '" + which + "'");
}

std::vector<Strategy> select_strategies(const std::string& which) {
  if (which == "all") return {kStrategies.begin(), kStrategies.end()};
  auto s = strategy_from_name(which);
  if (!s) throw UsageError("unknown strategy '" + which + "'");
  return {*s};
}

int selftest(unsigned max_mn) {
  int failures = 0;
  for (const AlgebraType& t : all_algebra_types()) {
    const Algebra alg = symbolic_algebra(t);
    bool ok = true;
    for (unsigned m = 0; m <= max_mn && ok; ++m)
      for (unsigned n = 0; n <= max_mn && ok; ++n) {
        const NcPoly oracle = commute_rewrite(alg, m, n);
        ok = commute(alg, m, n) == oracle && commute_pullback(alg, m, n) == oracle;
        if (ok && has_recurrence(t)) ok = commute_recurrence(alg, m, n) == oracle;
      }
    std::cout << (ok ? "PASS " : "FAIL ") << t.to_string() << '\n';
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, classification and centers for yx = q xy + alpha x + beta y + gamma"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured output");

  AlgebraOptions opts;

  auto* classify_cmd = app.add_subcommand("classify", "model class and witness isomorphism");
  opts.attach(classify_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism from the model algebra, with verification");
  opts.attach(iso_cmd);

  std::vector<std::string> factors;
  auto* mul_cmd = app.add_subcommand("mul", "product of expressions, left to right");
  opts.attach(mul_cmd);
  mul_cmd->add_option("factors", factors, "expressions")->required();

  std::string expr_text;
  auto* nf_cmd = app.add_subcommand("normal-form", "normal form of an expression");
  opts.attach(nf_cmd);
  nf_cmd->add_option("expr", expr_text, "expression")->required();

  std::string lemma = "weyl";
  unsigned n = 0;
  auto* binom_cmd = app.add_subcommand("binomial", "(x+y)^n against the binomial lemmas");
  binom_cmd->add_option("--kind", lemma, "weyl, shift or qplane")->check(CLI::IsMember({"weyl", "shift", "qplane"}));
  binom_cmd->add_option("n", n, "exponent")->required();

  unsigned degree = 6;
  auto* center_cmd = app.add_subcommand("center", "basis of central elements up to a total degree");
  opts.attach(center_cmd);
  center_cmd->add_option("-D,--degree", degree, "degree window");

  std::string workload = "default", strategy = "all";
  std::uint64_t seed = 42;
  bool csv = false, table = false;
  std::optional<unsigned> clear_above;
  auto* bench_cmd = app.add_subcommand("bench", "run a workload under the cache strategies");
  opts.attach(bench_cmd);
  bench_cmd->add_option("--workload", workload, "default, powers, random or binomial");
  bench_cmd->add_option("--strategy", strategy, "all, cache, formulas or cache+formulas");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_flag("--csv", csv, "request counts as CSV");
  bench_cmd->add_flag("--table", table, "request counts as an m by n table");
  bench_cmd->add_option("--clear-above", clear_above, "drop cached entries above this total degree after each op");

  unsigned self_max = 6;
  auto* self_cmd = app.add_subcommand("selftest", "engine agreement on all sixteen parameter rows");
  self_cmd->add_option("--max", self_max, "largest m and n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify_cmd || *iso_cmd) {
      const Algebra alg = opts.build();
      const ModelClass cls = classify(alg);
      const AffineMap map = iso_from_model(alg);
      const bool verified = verify_isomorphism(map);
      if (json) {
        nlohmann::json j{{"algebra", alg->to_string()},
                         {"class", std::string(to_string(cls))},
                         {"map", {{"X", map.image_x.to_string()}, {"Y", map.image_y.to_string()}}},
                         {"verified", verified}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << to_string(cls) << '\n' << map.to_string() << '\n';
        if (*iso_cmd) std::cout << "verified: " << (verified ? "true" : "false") << '\n';
      }
      return verified ? 0 : kExitComputation;
    }
    if (*mul_cmd) {
      const Algebra alg = opts.build();
      const Engine engine = opts.engine_value();
      NcPoly acc = parse_input(factors.front(), alg, engine);
      for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, parse_input(factors[i], alg, engine), engine);
      print_poly(acc, json);
      return 0;
    }
    if (*nf_cmd) {
      const Algebra alg = opts.build();
      print_poly(parse_input(expr_text, alg, opts.engine_value()), json);
      return 0;
    }
    if (*binom_cmd) {
      NcPoly lhs = NcPoly(generic_algebra()), rhs = lhs;
      if (lemma == "weyl") {
        const Algebra w = model_algebra(ModelClass::Weyl, FieldMode::rational());
        const NcPoly x = NcPoly::x(w), d = NcPoly::y(w);
        lhs = pow(x + d, n);
        rhs = bracket_pow(x, d, n) + weyl_binomial_defect(n);
      } else if (lemma == "shift") {
        const Algebra s = model_algebra(ModelClass::Shift, FieldMode::rational());
        lhs = pow(NcPoly::x(s) + NcPoly::y(s), n);
        rhs = shift_binomial(n);
      } else {
        const Algebra qp = model_algebra(ModelClass::QuantumPlane, FieldElem::symbol(Symbol::q));
        lhs = pow(NcPoly::x(qp) + NcPoly::y(qp), n);
        rhs = bracket_pow(NcPoly::x(qp), NcPoly::y(qp), n, true);
      }
      const bool match = lhs == rhs;
      if (json) {
        nlohmann::json j = poly_json(lhs);
        j["lemma"] = lemma;
        j["n"] = n;
        j["match"] = match;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << lhs.to_string() << '\n' << "lemma: " << (match ? "match" : "MISMATCH") << '\n';
      }
      return match ? 0 : kExitComputation;
    }
    if (*center_cmd) {
      const Algebra alg = opts.build();
      const std::vector<NcPoly> basis = center_basis(alg, degree);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const NcPoly& f : basis) arr.push_back(poly_json(f));
        std::cout << nlohmann::json{{"algebra", alg->to_string()}, {"degree", degree}, {"basis", arr}}.dump(2)
                  << '\n';
      } else {
        for (const NcPoly& f : basis) std::cout << f.to_string() << '\n';
      }
      return 0;
    }
    if (*bench_cmd) {
      const Algebra alg = opts.name || opts.q || opts.alpha || opts.beta || opts.gamma || opts.prime
                              ? opts.build()
                              : default_bench_algebra();
      const std::vector<Workload> loads = select_workloads(workload, alg, seed);
      const std::vector<Strategy> strategies = select_strategies(strategy);
      nlohmann::json all = nlohmann::json::array();
      for (const Workload& w : loads)
        for (Strategy s : strategies) {
          const BenchReport r = run_bench(w, s, clear_above);
          if (json) {
            all.push_back(nlohmann::json::parse(r.to_json()));
          } else if (csv) {
            std::cout << "# " << r.workload << ' ' << to_string(s) << '\n' << r.to_csv();
          } else {
            std::cout << r.workload << '\t' << to_string(s) << '\t' << r.wall_ms << " ms\tpeak " << r.peak_entries
                      << '\n';
            if (table) std::cout << r.to_table();
          }
        }
      if (json) std::cout << all.dump(2) << '\n';
      return 0;
    }
    if (*self_cmd) return selftest(self_max);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}
