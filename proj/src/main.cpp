#include <CLI11.hpp>

#include "dpa/expr.hpp"
#include "dpa/frobenius.hpp"
#include "dpa/law.hpp"
#include "dpa/levp.hpp"

#include <iostream>

using namespace dpa;

namespace {

Opid operad_of(const std::string &name) {
  if (name == "com") return Opid::Com;
  if (name == "lie") return Opid::Lie;
  fail("unknown operad: " + name);
}

LawKind law_of_name(const std::string &name) {
  if (name == "shift") return LawKind::Shift;
  if (name == "der") return LawKind::Der;
  if (name == "pois") return LawKind::Pois;
  fail("unknown law: " + name);
}

int emit(const Report &rep, bool json, const nlohmann::json &extra = {}) {
  if (json) {
    nlohmann::json out = rep.to_json();
    for (auto &[k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.text();
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact divided power calculus over operads with distributive laws"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print reports as JSON");

  int chr = 0, max_arity = 0;
  std::string operad = "com", law = "der";

  auto *frob = app.add_subcommand("poisson-frobenius",
                                  "p-th power of a product of two letters, decomposed");
  frob->add_option("--char", chr, "prime characteristic")->required()->check(CLI::IsMember({2, 3}));

  auto *cbeta = app.add_subcommand("check-beta", "divided power relation suite");
  cbeta->add_option("--char", chr, "characteristic (0 for rationals)")->required();
  cbeta->add_option("--operad", operad, "com or lie")->check(CLI::IsMember({"com", "lie"}));
  cbeta->add_option("--max-arity", max_arity, "total arity bound (default 4)");

  auto *clev = app.add_subcommand("check-levp", "level algebra divided power suite");
  clev->add_option("--char", chr, "prime characteristic")->required()->check(CLI::IsMember({2, 3, 5}));
  clev->add_option("--max-arity", max_arity, "ground set bound (default char^2)");

  auto *cder = app.add_subcommand("check-derivation", "derivation compatibility suite");
  cder->add_option("--char", chr, "characteristic (0 for rationals)")->required();
  cder->add_option("--operad", operad, "com or lie")->check(CLI::IsMember({"com", "lie"}));
  cder->add_option("--max-arity", max_arity, "total arity bound (default 5)");

  auto *csh = app.add_subcommand("check-shift", "endomorphism compatibility suite");
  csh->add_option("--char", chr, "characteristic (0 for rationals)")->required();
  csh->add_option("--operad", operad, "com or lie")->check(CLI::IsMember({"com", "lie"}));
  csh->add_option("--max-arity", max_arity, "total arity bound (default 5)");

  auto *codl = app.add_subcommand("check-odl", "distributive law diagram suite");
  codl->add_option("--law", law, "shift, der, or pois")->check(CLI::IsMember({"shift", "der", "pois"}));
  codl->add_option("--operad", operad, "com or lie (top operad for the d-laws)")
      ->check(CLI::IsMember({"com", "lie"}));
  codl->add_option("--char", chr, "characteristic (0 for rationals)");
  codl->add_option("--max-arity", max_arity, "total arity bound (default 4)");

  long long vmax_sum = 8, vmax_m = 4;
  auto *vand = app.add_subcommand("vandermonde", "multinomial convolution identity");
  vand->add_option("--max-sum", vmax_sum, "bound on j+k (default 8)");
  vand->add_option("--max-m", vmax_m, "bound on the number of parts (default 4)");

  auto *parts = app.add_subcommand("partitions", "partition calculus evaluator");
  std::string pop_name;
  std::vector<std::string> pop_args;
  parts->add_option("operation", pop_name, "diamond or gamma")->required();
  parts->add_option("arguments", pop_args, "operation arguments");

  std::string expr_text;
  auto *pexpr = app.add_subcommand("parse", "parse an expression and print it back");
  pexpr->add_option("expression", expr_text, "expression text")->required();

  for (auto *sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (frob->parsed()) {
      FrobeniusDecomposition d = frobenius_of_product(chr);
      Report rep = pois_compat(chr);
      nlohmann::json extra;
      extra["product"] = d.product_string();
      if (!json) std::cout << "F(a*b) = " << d.product_string() << "\n";
      for (auto &c : d.components) {
        if (!json)
          std::cout << "Gamma_{" << c.bare_a << "," << c.bare_b << "} = " << c.cofactor.str()
                    << "\n";
        extra["cofactors"]["(" + std::to_string(c.bare_a) + "," + std::to_string(c.bare_b) + ")"] =
            c.cofactor.str();
      }
      return emit(rep, json, extra);
    }
    if (cbeta->parsed())
      return emit(verify_beta_relations(operad_of(operad), chr, max_arity ? max_arity : 4), json);
    if (clev->parsed()) return emit(levp_verify(chr, max_arity ? max_arity : chr * chr), json);
    if (cder->parsed())
      return emit(check_derivation(operad_of(operad), chr, max_arity ? max_arity : 5), json);
    if (csh->parsed())
      return emit(check_shift(operad_of(operad), chr, max_arity ? max_arity : 5), json);
    if (codl->parsed())
      return emit(check_odl(law_of_name(law), operad_of(operad), chr, max_arity ? max_arity : 4),
                  json);
    if (vand->parsed()) {
      Report rep{"vandermonde", 0, 0, {}};
      Stopwatch sw;
      Check ck{"vandermonde", "multinomial convolution", vmax_sum, 0, {}};
      for (long long j = 0; j <= vmax_sum; ++j)
        for (long long k = 0; j + k <= vmax_sum; ++k)
          for (int m = 1; m <= vmax_m; ++m) {
            ++ck.instances;
            if (!vandermonde_check(j, k, m))
              ck.failures.push_back({"j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                         " m=" + std::to_string(m),
                                     "convolution", "multinomial"});
          }
      rep.checks = {ck};
      rep.wall_ms = sw.ms();
      return emit(rep, json);
    }
    if (parts->parsed()) {
      std::string result;
      if (pop_name == "diamond") {
        require(pop_args.size() >= 2, "diamond needs a composition and partitions");
        Composition r = parse_composition(pop_args[0]);
        std::vector<SetPartition> qs;
        for (size_t i = 1; i < pop_args.size(); ++i) qs.push_back(parse_partition(pop_args[i]));
        result = diamond(r, qs).str();
      } else if (pop_name == "gamma") {
        require(pop_args.size() == 2, "gamma needs an iteration count and a partition");
        long long k = std::stoll(pop_args[0]);
        result = gamma_k(parse_partition(pop_args[1]), k).str();
      } else {
        std::cerr << "unknown partition operation: " << pop_name << "\n";
        return 2;
      }
      if (json) {
        std::cout << nlohmann::json{{"scenario", "partitions"}, {"result", result}}.dump(2)
                  << "\n";
      } else {
        std::cout << result << "\n";
      }
      return 0;
    }
    if (pexpr->parsed()) {
      ExprPtr e = parse_expr(expr_text);
      std::string printed = expr_str(*e);
      require(*parse_expr(printed) == *e, "printer does not round trip");
      std::cout << printed << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
