#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "borel/chain.hpp"
#include "borel/decompose.hpp"
#include "borel/errors.hpp"
#include "borel/fuzz.hpp"
#include "borel/invariants.hpp"
#include "borel/json_io.hpp"
#include "borel/parser.hpp"
#include "borel/properties.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

// Ideal argument: literal source, '@file', or '-' for stdin.
borel::MonomialIdeal load_ideal(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return borel::parse_ideal(buf.str());
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) borel::fail("io", "cannot open file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return borel::parse_ideal(buf.str());
  }
  return borel::parse_ideal(arg);
}

void emit(const borel::Json& j) { std::cout << j.dump(2) << '\n'; }

unsigned parse_ops(const std::string& csv) {
  unsigned ops = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "intersect") ops |= borel::kOpIntersect;
    else if (tok == "sum") ops |= borel::kOpSum;
    else if (tok == "product") ops |= borel::kOpProduct;
    else borel::fail("config", "unknown op '" + tok + "'");
  }
  return ops;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial regularities and a*-invariants of Borel-type monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_arg;
  std::string route_arg = "decomposition";
  bool table = false;
  bool corrupt_fixture = false;
  borel::FuzzConfig fuzz_cfg;
  std::string ops_arg = "intersect,sum";
  bool negative_control = false;

  auto* check = app.add_subcommand("check", "Borel-type check with failing index");
  check->add_option("ideal", ideal_arg)->required();

  auto* decomp = app.add_subcommand("decompose", "irredundant irreducible decomposition");
  decomp->add_option("ideal", ideal_arg)->required();

  auto* chain = app.add_subcommand("chain", "sequential chain with restricted ideals");
  chain->add_option("ideal", ideal_arg)->required();

  auto* invariants = app.add_subcommand("invariants", "local cohomology degree report");
  invariants->add_option("ideal", ideal_arg)->required();
  invariants->add_option("--route", route_arg,
                         "decomposition|chain|oracle|all (default decomposition)");
  invariants->add_flag("--table", table, "render an aligned text table");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of S/I");
  betti->add_option("ideal", ideal_arg)->required();

  auto* verify = app.add_subcommand("verify", "cross-check all routes; exit 2 on disagreement");
  verify->add_option("ideal", ideal_arg)->required();
  verify->add_flag("--corrupt-fixture", corrupt_fixture,
                   "negative control: corrupt the decomposition route");

  auto* fuzz = app.add_subcommand("fuzz", "deterministic Borel-type sample stream");
  auto* props = app.add_subcommand("properties", "run the property suite over fuzzed samples");
  for (CLI::App* cmd : {fuzz, props}) {
    cmd->add_option("--seed", fuzz_cfg.seed);
    cmd->add_option("--count", fuzz_cfg.count);
    cmd->add_option("--n-max", fuzz_cfg.n_max);
    cmd->add_option("--exp-max", fuzz_cfg.exp_max);
    cmd->add_option("--ops", ops_arg, "csv subset of intersect,sum,product");
    cmd->add_option("--depth", fuzz_cfg.depth);
  }
  props->add_flag("--negative-control", negative_control,
                  "corrupt one route comparison; the run must then fail");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      emit(borel::check_to_json(borel::borel_type_check(load_ideal(ideal_arg))));
      return kExitOk;
    }
    if (decomp->parsed()) {
      emit(borel::decomposition_to_json(borel::decompose(load_ideal(ideal_arg))));
      return kExitOk;
    }
    if (chain->parsed()) {
      emit(borel::chain_to_json(borel::sequential_chain(load_ideal(ideal_arg))));
      return kExitOk;
    }
    if (invariants->parsed()) {
      borel::MonomialIdeal I = load_ideal(ideal_arg);
      if (route_arg == "all") {
        borel::RouteComparison c = borel::compare_routes(I);
        borel::Json j;
        j["ideal"] = borel::ideal_to_json(I);
        j["agree"] = c.agree;
        j["a_module"] = borel::degrees_to_json(*c.decomposition.a_module);
        j["routes"] = borel::Json::object();
        j["routes"]["decomposition"] = borel::report_to_json(c.decomposition);
        j["routes"]["chain"] = borel::report_to_json(c.chain);
        j["routes"]["oracle"] = borel::report_to_json(c.oracle);
        if (table) {
          for (const auto& r : {c.decomposition, c.chain, c.oracle})
            std::cout << borel::render_report_table(r);
        } else {
          emit(j);
        }
        if (!c.agree) {
          std::cerr << borel::comparison_to_json(c, I).dump(2) << '\n';
          return kExitVerificationFailure;
        }
        return kExitOk;
      }
      auto route = borel::route_from_name(route_arg);
      if (!route) borel::fail("config", "unknown route '" + route_arg + "'");
      borel::InvariantReport r = borel::report(I, *route);
      if (table)
        std::cout << borel::render_report_table(r);
      else
        emit(borel::report_to_json(r));
      return kExitOk;
    }
    if (betti->parsed()) {
      emit(borel::betti_to_json(borel::betti_table(load_ideal(ideal_arg))));
      return kExitOk;
    }
    if (verify->parsed()) {
      borel::MonomialIdeal I = load_ideal(ideal_arg);
      borel::RouteComparison c = borel::compare_routes(I, corrupt_fixture);
      emit(borel::comparison_to_json(c, I));
      return c.agree ? kExitOk : kExitVerificationFailure;
    }
    if (fuzz->parsed()) {
      fuzz_cfg.ops = parse_ops(ops_arg);
      borel::FuzzResult result = borel::fuzz_borel(fuzz_cfg);
      borel::Json j;
      j["seed"] = fuzz_cfg.seed;
      j["discarded"] = result.discarded;
      borel::Json samples = borel::Json::array();
      for (const auto& I : result.samples) samples.push_back(borel::ideal_to_json(I));
      j["samples"] = std::move(samples);
      emit(j);
      return kExitOk;
    }
    if (props->parsed()) {
      fuzz_cfg.ops = parse_ops(ops_arg);
      borel::PropertiesReport report = borel::run_properties(fuzz_cfg, negative_control);
      emit(borel::properties_to_json(report));
      return report.all_pass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const borel::Error& e) {
    std::cout << borel::error_to_json(e).dump(2) << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}
