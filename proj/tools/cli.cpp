#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "icecrystal/crystal_graph.hpp"
#include "icecrystal/io.hpp"
#include "icecrystal/stembridge.hpp"
#include "icecrystal/tableau.hpp"

namespace icecrystal::cli {

namespace {

// Raised inside a command to leave with a given exit code.
struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string lambda;
  std::string format = "json";
  std::string out_path;
  std::string graph_path;
  std::string model_path;
  std::string op;
  int color = 0;
  std::optional<std::size_t> node_cap;
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  bool verbose = false;
};

Partition parse_lambda(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Exit{kInvalidInput, std::string("invalid partition: ") + e.what()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kInvalidInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw Exit{kInvalidInput, "cannot write " + cfg.out_path};
  f << text;
}

std::size_t node_cap(const Config& cfg, const std::string& env) {
  if (cfg.node_cap) return *cfg.node_cap;
  if (env.empty()) return kDefaultNodeCap;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != env.size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Exit{kInvalidInput, "ICE_CRYSTAL_NODE_CAP must be a positive integer, got " + env};
  }
}

using Json = nlohmann::ordered_json;

Json violation(const std::string& check, const std::string& axiom, const std::string& where,
               const std::string& message) {
  return Json{{"check", check}, {"axiom", axiom}, {"where", where}, {"message", message}};
}

void add_axiom_violations(Json& list, const CrystalGraph& g, const std::vector<AxiomViolation>& v) {
  for (const auto& x : v)
    list.push_back(violation("axioms", x.axiom, g.node(x.node).key + " i=" + std::to_string(x.color),
                             x.message));
}

void add_regularity_violations(Json& list, const CrystalGraph& g,
                               const std::vector<RegularityViolation>& v) {
  for (const auto& x : v) {
    std::string where = g.node_count() ? g.node(x.node).key : "";
    where += " i=" + std::to_string(x.i);
    if (x.j) where += " j=" + std::to_string(x.j);
    list.push_back(violation("regularity", x.axiom, where, x.message));
  }
}

int report(const Json& head, const Json& violations, std::ostream& out) {
  Json r = head;
  r["ok"] = violations.empty();
  r["violations"] = violations;
  out << r.dump() << '\n';
  return violations.empty() ? kOk : kVerificationFailed;
}

int cmd_hw(const Config& cfg, std::ostream& out) {
  write_output(cfg, model_to_json(highest_weight_model(parse_lambda(cfg.lambda))) + "\n", out);
  return kOk;
}

int cmd_gen(const Config& cfg, std::size_t cap, std::ostream& out) {
  const auto c = generate(parse_lambda(cfg.lambda), cap);
  write_output(cfg, cfg.format == "dot" ? graph_to_dot(c.graph) : graph_to_json(c.graph) + "\n", out);
  return kOk;
}

int check_lambda(const Config& cfg, std::size_t cap, std::ostream& out) {
  const auto lambda = parse_lambda(cfg.lambda);
  const auto c = generate(lambda, cap);
  Json violations = Json::array();

  for (NodeId b = 0; b < c.models.size(); ++b)
    for (const auto& v : validate(c.models[b]))
      violations.push_back(violation("validate", std::string(to_string(v.clause)),
                                     c.graph.node(b).key, v.message));
  add_axiom_violations(violations, c.graph, check_axioms_C1_C6(c));
  add_regularity_violations(violations, c.graph, verify_regular(c.graph));

  const auto sources = find_highest_weights(c.graph);
  if (sources.size() != 1) {
    violations.push_back(violation("highest_weight", "unique", "",
                                   std::to_string(sources.size()) + " source nodes"));
  } else {
    const auto& src = c.graph.node(sources.front());
    if (!src.weight.equivalent(Weight(lambda.parts())))
      violations.push_back(violation("highest_weight", "weight", src.key, "weight is not lambda"));
    for (const auto& m : verify_staircase(c.models[sources.front()]).messages)
      violations.push_back(violation("staircase", "stairs", src.key, m));
  }

  Json head{{"lambda", lambda.parts()}, {"nodes", c.graph.node_count()}, {"edges", c.graph.edge_count()}};
  if (brute_force_candidates(lambda) <= cfg.brute_force_cap) {
    const auto brute = brute_force_enumerate(lambda, cfg.brute_force_cap);
    head["brute_force"] = brute.size();
    std::set<BoxSet> found;
    for (const auto& m : c.models) found.insert(boxes(m));
    for (const auto& m : brute)
      if (!found.contains(boxes(m)))
        violations.push_back(violation("enumeration", "unreached", node_key(lambda, boxes(m)),
                                       "model in M(lambda) not reached from the highest weight"));
  } else {
    head["brute_force"] = nullptr;
  }
  return report(head, violations, out);
}

int check_graph(const Config& cfg, std::ostream& out) {
  CrystalGraph g;
  try {
    g = graph_from_json(read_file(cfg.graph_path));
  } catch (const FormatError& e) {
    throw Exit{kInvalidInput, e.what()};
  }
  Json violations = Json::array();
  add_regularity_violations(violations, g, verify_regular(g));
  add_axiom_violations(violations, g, check_axioms_C1_C6(g));
  const auto sources = find_highest_weights(g);
  if (sources.size() != 1)
    violations.push_back(violation("highest_weight", "unique", "",
                                   std::to_string(sources.size()) + " source nodes"));
  return report(Json{{"lambda", g.lambda()}, {"nodes", g.node_count()}, {"edges", g.edge_count()}},
                violations, out);
}

int cmd_iso(const Config& cfg, std::size_t cap, std::ostream& out) {
  const auto lambda = parse_lambda(cfg.lambda);
  const auto ice = generate(lambda, cap);
  const auto tab = tableau_crystal(lambda, lambda.n(), cap);
  const auto r = crystal_isomorphic(ice.graph, tab.graph);
  if (r) {
    out << "yes\n";
    if (cfg.verbose)
      for (NodeId b = 0; b < r.mapping.size(); ++b)
        out << ice.graph.node(b).key << " -> " << tab.graph.node(r.mapping[b]).key << '\n';
    return kOk;
  }
  out << "no: " << r.witness << '\n';
  return kVerificationFailed;
}

int cmd_apply(const Config& cfg, std::ostream& out) {
  std::optional<IceModel> m;
  try {
    m.emplace(model_from_json(read_file(cfg.model_path)));
  } catch (const FormatError& e) {
    throw Exit{kInvalidInput, e.what()};
  }
  if (const auto v = validate(*m); !v.empty())
    throw Exit{kInvalidInput, "model is not in M(lambda): " + v.front().message};
  if (cfg.color < 1 || cfg.color >= m->rows())
    throw Exit{kInvalidInput, "color must lie in 1.." + std::to_string(m->rows() - 1)};
  const auto image = cfg.op == "f" ? f_op(*m, cfg.color) : e_op(*m, cfg.color);
  write_output(cfg, image ? model_to_json(*image) + "\n" : "none\n", out);
  return kOk;
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  std::optional<IceModel> m;
  try {
    m.emplace(model_from_json(read_file(cfg.model_path)));
  } catch (const FormatError& e) {
    throw Exit{kInvalidInput, e.what()};
  }
  Json violations = Json::array();
  for (const auto& v : validate(*m))
    violations.push_back(violation("validate", std::string(to_string(v.clause)), to_string(v.where), v.message));
  Json head{{"lambda", m->lambda().parts()}};
  if (violations.empty()) {
    auto bx = Json::array();
    for (const auto& c : boxes(*m)) bx.push_back({c.row, c.col});
    head["boxes"] = std::move(bx);
  }
  return report(head, violations, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_node_cap) {
  Config cfg;
  CLI::App app{"Crystal of five-vertex ice models", "icecrystal"};
  app.require_subcommand(1);

  auto caps = [&cfg](CLI::App* sub) {
    sub->add_option("--node-cap", cfg.node_cap, "Maximum number of crystal nodes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--brute-force-cap", cfg.brute_force_cap,
                    "Skip brute-force enumeration above this many candidate box sets");
  };

  auto* hw = app.add_subcommand("hw", "Print the highest weight model as JSON");
  hw->add_option("--lambda", cfg.lambda, "Partition, e.g. 2,1,0")->required();
  hw->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate the crystal graph");
  gen->add_option("--lambda", cfg.lambda, "Partition, e.g. 2,1,0")->required();
  gen->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", cfg.out_path, "Output file (default stdout)");
  caps(gen);

  auto* check = app.add_subcommand("check", "Verify a generated crystal or a graph file");
  auto* check_lambda_opt = check->add_option("--lambda", cfg.lambda, "Partition, e.g. 2,1,0");
  auto* check_graph_opt = check->add_option("--graph", cfg.graph_path, "Graph JSON file");
  check_lambda_opt->excludes(check_graph_opt);
  check->require_option(1);
  caps(check);

  auto* iso = app.add_subcommand("iso", "Compare with the tableau crystal");
  iso->add_option("--lambda", cfg.lambda, "Partition, e.g. 2,1,0")->required();
  iso->add_flag("-v,--verbose", cfg.verbose, "Print the isomorphism");
  caps(iso);

  auto* apply = app.add_subcommand("apply", "Apply e_i or f_i to a model file");
  apply->add_option("--op", cfg.op, "e or f")->required()->check(CLI::IsMember({"e", "f"}));
  apply->add_option("--color", cfg.color, "Colour i")->required();
  apply->add_option("--model", cfg.model_path, "Model JSON file")->required();
  apply->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* val = app.add_subcommand("validate", "Check a model file against M(lambda)");
  val->add_option("--model", cfg.model_path, "Model JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (hw->parsed()) return cmd_hw(cfg, out);
    if (apply->parsed()) return cmd_apply(cfg, out);
    if (val->parsed()) return cmd_validate(cfg, out);
    const std::size_t cap = node_cap(cfg, env_node_cap);
    if (gen->parsed()) return cmd_gen(cfg, cap, out);
    if (check->parsed()) return cfg.graph_path.empty() ? check_lambda(cfg, cap, out) : check_graph(cfg, out);
    if (iso->parsed()) return cmd_iso(cfg, cap, out);
  } catch (const Exit& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const CapExceeded& e) {
    err << e.what() << '\n';
    return kCapExceeded;
  }
  return kInvalidInput;
}

}  // namespace icecrystal::cli
