#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pxg/campaign.hpp"
#include "pxg/errors.hpp"
#include "pxg/formulas.hpp"
#include "pxg/px_graph.hpp"
#include "pxg/px_group.hpp"
#include "pxg/report.hpp"
#include "pxg/symmetry.hpp"
#include "pxg/twins.hpp"
#include "pxg/witnesses.hpp"

namespace {

using namespace pxg;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Instance {
  int n = 0;
  int k = 0;
  PxParams params() const {
    PxParams p{n, k};
    p.validate();
    return p;
  }
};

void add_instance(CLI::App* cmd, Instance& inst) {
  cmd->add_option("--n", inst.n, "number of fibres")->required();
  cmd->add_option("--k", inst.k, "word length")->required();
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

std::string clause_name(InterchangeClause c) {
  switch (c) {
    case InterchangeClause::same_fibre:
      return "same-fibre";
    case InterchangeClause::reflection:
      return "reflection";
    case InterchangeClause::antipodal_rotation:
      return "rotation";
  }
  return "?";
}

InterchangeClause parse_clause(const std::string& name) {
  for (auto c : {InterchangeClause::same_fibre, InterchangeClause::reflection, InterchangeClause::antipodal_rotation}) {
    if (clause_name(c) == name) return c;
  }
  throw UsageError("unknown clause '" + name + "' (same-fibre, reflection, rotation)");
}

std::vector<Check> parse_checks(const std::string& list) {
  if (list.empty() || list == "all") return all_checks();
  std::vector<Check> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_check(item));
  return out;
}

int cmd_build(const Instance& inst, const std::string& format, const std::string& out) {
  const PxGraph g(inst.params());
  const ExportFormat f = parse_export_format(format);
  if (out.empty() || out == "-") {
    export_graph(std::cout, g, f);
    return kPass;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  export_graph(file, g, f);
  return file ? kPass : kFail;
}

int cmd_witness(const Instance& inst, const std::string& kind, bool check, const std::string& u_text,
                const std::string& v_text, const std::string& clause, const Config& config) {
  const PxParams p = inst.params();
  const PxGraph g(p);
  if (kind == "det") {
    const auto w = det_witness(p, config.budget);
    std::optional<bool> ok;
    if (check) ok = verify_determining(p, g.ids(w), config.budget);
    print(witness_json("det", p, w, ok));
    return ok.value_or(true) ? kPass : kFail;
  }
  if (kind == "cost") {
    if (p.k == 1) {
      Json j = witness_json("cost", p, {}, std::nullopt);
      j["status"] = "not-applicable";
      j["reason"] = "PX(n,1) has no distinguishing 2-coloring";
      print(j);
      return kUsage;
    }
    const auto w = cost_witness(p, config.budget);
    std::optional<bool> ok;
    if (check) ok = verify_distinguishing(p, Coloring::from_red_set(g.order(), g.ids(w)), config.budget);
    print(witness_json("cost", p, w, ok));
    return ok.value_or(true) ? kPass : kFail;
  }
  if (kind == "dist") {
    const Coloring w = dist_witness(p, config.budget);
    std::optional<bool> ok;
    if (check) ok = verify_distinguishing(p, w, config.budget);
    print(coloring_json(g, w, ok));
    return ok.value_or(true) ? kPass : kFail;
  }
  if (kind == "interchange") {
    if (u_text.empty() || v_text.empty()) throw UsageError("--kind interchange needs --u and --v");
    const Vertex u = parse_vertex(u_text);
    const Vertex v = parse_vertex(v_text);
    std::optional<InterchangeClause> c;
    if (!clause.empty()) c = parse_clause(clause);
    const Automorphism a = interchange_witness(p, u, v, c);
    std::optional<bool> ok;
    if (check) ok = swaps(p, a, u, v) && is_automorphism(g.graph(), to_perm(g, a));
    Json j = witness_json("interchange", p, {u, v}, ok);
    j["element"] = to_string(p, a);
    print(j);
    return ok.value_or(true) ? kPass : kFail;
  }
  throw UsageError("unknown witness kind '" + kind + "' (det, dist, cost, interchange)");
}

int cmd_aut(const Instance& inst, const std::string& mode, const Config& config) {
  const PxParams p = inst.params();
  check_group_params(p);
  const PxGraph g(p);
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["mode"] = mode;
  if (mode == "count") {
    std::size_t order = 0;
    if (p.n == 4) {
      order = full_aut(g, config.budget).size();
    } else {
      auto perms = algebraic_perms(g);
      perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
      order = perms.size();
    }
    j["order"] = order;
    print(j);
    return kPass;
  }
  if (mode == "list") {
    Json elements = Json::array();
    for (const Automorphism& a : enumerate_A(p)) elements.push_back(to_string(p, a));
    if (has_xi(p)) {
      for (Automorphism a : enumerate_A(p)) {
        a.xi = true;
        elements.push_back(to_string(p, a));
      }
    }
    j["order"] = elements.size();
    j["elements"] = std::move(elements);
    print(j);
    return kPass;
  }
  if (mode == "oracle") {
    const auto search = generic_automorphisms(g.graph(), config.budget);
    j["order"] = search.group.size();
    j["complete"] = search.complete;
    print(j);
    return search.complete ? kPass : kFail;
  }
  throw UsageError("unknown mode '" + mode + "' (count, list, oracle)");
}

int cmd_twins(const Instance& inst, const std::string& format) {
  const PxGraph g(inst.params());
  const TwinPartition t = twin_classes(g.graph());
  const QuotientGraph q = twin_quotient(g.graph(), t);
  if (format == "edges") {
    write_quotient_edges(std::cout, g, t, q);
  } else if (format == "json") {
    write_quotient_json(std::cout, g, t, q);
  } else {
    throw UsageError("twins supports --format edges or json");
  }
  return kPass;
}

int cmd_interchange(const Instance& inst, const std::string& u_text, const std::string& v_text, bool brute) {
  const PxParams p = inst.params();
  const Vertex u = parse_vertex(u_text);
  const Vertex v = parse_vertex(v_text);
  const auto clauses = satisfied_clauses(p, u, v);
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["u"] = to_string(u);
  j["v"] = to_string(v);
  j["interchangeable"] = !clauses.empty();
  Json names = Json::array();
  for (auto c : clauses) names.push_back(clause_name(c));
  j["clauses"] = std::move(names);
  j["witness"] = clauses.empty() ? Json(nullptr) : Json(to_string(p, interchange_witness(p, u, v)));
  int code = kPass;
  if (brute) {
    bool found = false;
    for (const Automorphism& a : enumerate_A(p)) {
      if (swaps(p, a, u, v)) {
        found = true;
        break;
      }
    }
    j["bruteforce"] = found;
    if (found == clauses.empty()) code = kFail;
  }
  print(j);
  return code;
}

int cmd_verify(const Config& config, const std::string& checks, const Instance& inst, const std::string& out) {
  std::optional<PxParams> only;
  if (inst.n != 0 || inst.k != 0) only = inst.params();
  const auto reports = run_campaign(config, parse_checks(checks), only);
  write_ndjson(std::cout, reports);
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    write_ndjson(file, reports);
  }
  return all_pass(reports) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Praeger-Xu graph symmetry toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  Instance inst;
  std::string format = "edges";
  std::string out;
  auto* build = app.add_subcommand("build", "export PX(n,k)");
  add_instance(build, inst);
  build->add_option("--format", format, "dot, edges or json");
  build->add_option("--out", out, "output file (default stdout)");

  auto* params = app.add_subcommand("params", "closed-form det, dist and cost");
  add_instance(params, inst);

  std::string kind;
  bool check = false;
  std::string u_text;
  std::string v_text;
  std::string clause;
  auto* witness = app.add_subcommand("witness", "explicit witness sets and colorings");
  add_instance(witness, inst);
  witness->add_option("--kind", kind, "det, dist, cost or interchange")->required();
  witness->add_flag("--check", check, "verify against the automorphism group");
  witness->add_option("--u", u_text, "first vertex, i:bits");
  witness->add_option("--v", v_text, "second vertex, i:bits");
  witness->add_option("--clause", clause, "same-fibre, reflection or rotation");

  std::string checks;
  Instance verify_inst;
  unsigned workers = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run the verification campaign");
  verify->add_option("--checks", checks, "comma-separated: table,aut,phi,twins,interchange,scale,properties");
  verify->add_option("--n", verify_inst.n, "restrict to one instance");
  verify->add_option("--k", verify_inst.k, "restrict to one instance");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_flag("--timing", timing, "record elapsed_ms");
  verify->add_option("--out", out, "also write the report to this file");

  std::string mode = "count";
  auto* aut = app.add_subcommand("aut", "automorphism group order or elements");
  add_instance(aut, inst);
  aut->add_option("--mode", mode, "count, list or oracle");

  std::string twin_format = "json";
  auto* twins = app.add_subcommand("twins", "twin classes and the twin quotient");
  add_instance(twins, inst);
  twins->add_option("--format", twin_format, "edges or json");

  bool brute = false;
  auto* interchange = app.add_subcommand("interchange", "interchangeability of a vertex pair");
  add_instance(interchange, inst);
  interchange->add_option("--u", u_text, "first vertex, i:bits")->required();
  interchange->add_option("--v", v_text, "second vertex, i:bits")->required();
  interchange->add_flag("--brute", brute, "confirm by searching A");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Config config;
    if (!config_path.empty()) load_config_file(config, config_path);
    apply_environment(config);
    if (workers > 0) config.workers = workers;
    if (timing) config.timing = true;

    if (*build) return cmd_build(inst, format, out);
    if (*params) {
      print(params_json(inst.params()));
      return kPass;
    }
    if (*witness) return cmd_witness(inst, kind, check, u_text, v_text, clause, config);
    if (*verify) return cmd_verify(config, checks, verify_inst, out);
    if (*aut) return cmd_aut(inst, mode, config);
    if (*twins) return cmd_twins(inst, twin_format);
    if (*interchange) return cmd_interchange(inst, u_text, v_text, brute);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kUsage;
  } catch (const NoWitnessError& e) {
    std::cerr << "no witness: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
