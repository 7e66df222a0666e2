#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "wsys/catalog.hpp"
#include "wsys/coloring.hpp"
#include "wsys/graph.hpp"
#include "wsys/lie.hpp"
#include "wsys/ribbon.hpp"

namespace wsys::cli {
namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TrivalentGraph load_graph(const CliConfig& config) {
  if (!config.graph_path) throw InputError(config.command + ": a graph file is required");
  std::ifstream in(*config.graph_path);
  if (!in) throw InputError("cannot open " + *config.graph_path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_graph(text.str());
  } catch (const GraphParseError& e) {
    throw InputError(*config.graph_path + ":" + std::to_string(e.line()) + ": " +
                     std::string(to_string(e.kind())) + ": " + e.what());
  }
}

std::string one_line(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      if (!out.empty()) out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json polynomial_json(const IntPolynomial& p) {
  json out = json::object();
  for (const auto& [exp, coeff] : p.terms()) out[std::to_string(exp)] = coeff.get_str();
  return out;
}

json report_json(const VerificationReport& r) {
  json identities = json::object();
  for (const auto& [name, ok] : r.identities.named()) identities[name] = ok;
  return json{
      {"graph", r.graph},
      {"v", r.v},
      {"e", r.e},
      {"two_connected", r.two_connected},
      {"planar", r.planar},
      {"wgl_poly", polynomial_json(r.wgl_poly)},
      {"w_top", r.w_top.get_str()},
      {"spherical_embeddings", r.spherical_embeddings},
      {"edge_3_colorings", r.edge_3_colorings},
      {"penrose", r.penrose.get_str()},
      {"w_sl2", r.w_sl2.get_str()},
      {"four_colorings", r.four_colorings ? json(*r.four_colorings) : json(nullptr)},
      {"identities", identities},
  };
}

json summary_json(const SurveySummary& s) {
  json per_v = json::object();
  for (const auto& [v, count] : s.graphs_per_v) per_v[std::to_string(v)] = count;
  json passes = json::object();
  for (const auto& [name, count] : s.identity_passes) passes[name] = count;
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back(json{{"graph", f.graph}, {"identity", f.identity}});
  return json{
      {"max_v", s.max_v},
      {"allow_loops", s.allow_loops},
      {"mode", std::string(to_string(s.mode))},
      {"graphs_per_v", per_v},
      {"identity_passes", passes},
      {"failures", failures},
      {"total", s.total},
  };
}

void emit(std::ostream& out, json body) {
  body["schema_version"] = kSchemaVersion;
  out << body.dump(2) << '\n';
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << "graph: " << one_line(r.graph) << '\n'
      << "v: " << r.v << "  e: " << r.e << '\n'
      << "two_connected: " << yes_no(r.two_connected) << '\n'
      << "planar: " << yes_no(r.planar) << '\n'
      << "wgl: " << r.wgl_poly.to_string() << '\n'
      << "w_top: " << r.w_top << '\n'
      << "spherical_embeddings: " << r.spherical_embeddings << '\n'
      << "edge_3_colorings: " << r.edge_3_colorings << '\n'
      << "penrose: " << r.penrose << '\n'
      << "w_sl2: " << r.w_sl2 << '\n'
      << "four_colorings: " << (r.four_colorings ? std::to_string(*r.four_colorings) : "n/a") << '\n';
  for (const auto& [name, ok] : r.identities.named()) out << name << ": " << (ok ? "ok" : "FAILED") << '\n';
}

}  // namespace

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream&) {
  if (!config.algebra) throw InputError("eval: --algebra is required");
  const auto g = load_graph(config);
  const auto alg = algebra_by_name(*config.algebra);
  const Rational value = evaluate_weight(g, alg);
  if (config.format == Format::Json) {
    emit(out, json{{"algebra", alg.name}, {"graph", serialize_graph(g)}, {"value", to_string(value)}});
  } else {
    out << to_string(value) << '\n';
  }
  return kOk;
}

int cmd_poly(const CliConfig& config, std::ostream& out, std::ostream&) {
  const auto g = load_graph(config);
  const auto s = summarize_markings(g, config.jobs);
  const bool two_connected = is_two_connected(g);
  if (config.format == Format::Json) {
    json body{
        {"graph", serialize_graph(g)},
        {"wgl_poly", polynomial_json(s.wgl)},
        {"w_top", s.w_top.get_str()},
        {"spherical_embeddings", s.spherical},
        {"planar", s.spherical > 0},
        {"two_connected", two_connected},
    };
    if (config.n) body["value_at_n"] = json{{"n", *config.n}, {"value", s.wgl.evaluate(*config.n).get_str()}};
    emit(out, std::move(body));
  } else {
    out << "wgl: " << s.wgl.to_string() << '\n'
        << "w_top: " << s.w_top << '\n'
        << "spherical_embeddings: " << s.spherical << '\n'
        << "planar: " << yes_no(s.spherical > 0) << '\n'
        << "two_connected: " << yes_no(two_connected) << '\n';
    if (config.n) out << "wgl(" << *config.n << "): " << s.wgl.evaluate(*config.n) << '\n';
  }
  return kOk;
}

int cmd_colorings(const CliConfig& config, std::ostream& out, std::ostream&) {
  const auto g = load_graph(config);
  const long long count = count_edge_3_colorings(g);
  const Integer penrose = penrose_sum(g);
  const Integer sl2 = w_sl2(g);
  if (config.format == Format::Json) {
    emit(out, json{{"graph", serialize_graph(g)},
                   {"edge_3_colorings", count},
                   {"penrose", penrose.get_str()},
                   {"w_sl2", sl2.get_str()}});
  } else {
    out << "edge_3_colorings: " << count << '\n'
        << "penrose: " << penrose << '\n'
        << "w_sl2: " << sl2 << '\n';
  }
  return kOk;
}

int cmd_map(const CliConfig& config, std::ostream& out, std::ostream&) {
  const auto g = load_graph(config);
  const auto s = summarize_markings(g, config.jobs);
  if (!s.first_spherical) throw InputError("map: graph has no spherical embedding");
  const PlanarMap map = extract_map(g, *s.first_spherical);
  const bool self_bordering = map.has_self_bordering_face();
  const long long four = count_four_colorings(map);
  std::optional<TaitCounterexample> tait;
  if (!self_bordering) tait = verify_tait_bijection(map);
  if (config.format == Format::Json) {
    json faces = json::array();
    for (const auto& f : map.faces) faces.push_back(f);
    json body{
        {"graph", serialize_graph(g)},
        {"marking", s.first_spherical->signs()},
        {"faces", faces},
        {"outer_face", map.outer_face},
        {"self_bordering", self_bordering},
        {"four_colorings", four},
        {"edge_3_colorings", count_edge_3_colorings(g)},
        {"tait_bijection", self_bordering ? json(nullptr) : json(tait ? tait->reason : std::string("ok"))},
    };
    emit(out, std::move(body));
  } else {
    out << "marking:";
    for (int sign : s.first_spherical->signs()) out << ' ' << (sign > 0 ? '+' : '-');
    out << '\n' << "faces: " << map.face_count() << '\n';
    for (int i = 0; i < map.face_count(); ++i) {
      out << "face " << i << ":";
      for (Dart d : map.faces[static_cast<std::size_t>(i)]) out << ' ' << d;
      out << '\n';
    }
    out << "outer_face: " << map.outer_face << '\n'
        << "self_bordering: " << yes_no(self_bordering) << '\n'
        << "four_colorings: " << four << '\n'
        << "edge_3_colorings: " << count_edge_3_colorings(g) << '\n'
        << "tait_bijection: " << (self_bordering ? "n/a" : (tait ? tait->reason : "ok")) << '\n';
  }
  return kOk;
}

int cmd_survey(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.max_v) throw InputError("survey: --max-v is required");
  SurveyOptions options;
  options.max_v = *config.max_v;
  options.allow_loops = config.allow_loops;
  options.mode = config.labeled ? Enumeration::Labeled : Enumeration::IsomorphismClasses;
  options.jobs = config.jobs;
  const SurveyResult result = run_survey(options);
  const auto& s = result.summary;
  if (config.format == Format::Json) {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(report_json(r));
    emit(out, json{{"reports", reports}, {"summary", summary_json(s)}});
  } else {
    out << "max_v: " << s.max_v << '\n'
        << "mode: " << to_string(s.mode) << '\n'
        << "allow_loops: " << yes_no(s.allow_loops) << '\n';
    for (const auto& [v, count] : s.graphs_per_v) out << "graphs v=" << v << ": " << count << '\n';
    out << "total: " << s.total << '\n';
    for (const auto& [name, passes] : s.identity_passes) out << name << ": " << passes << '/' << s.total << '\n';
    out << "failures: " << s.failures.size() << '\n';
    for (const auto& f : s.failures) out << "FAILED " << f.identity << ": " << one_line(f.graph) << '\n';
  }
  if (!s.failures.empty()) {
    err << "survey: " << s.failures.size() << " identity failure(s)\n";
    return kIdentityFailure;
  }
  return kOk;
}

int cmd_validate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.algebra && !config.graph_path) throw InputError("validate: give a graph file, --algebra, or both");
  json body = json::object();
  int status = kOk;
  if (config.algebra) {
    const auto alg = algebra_by_name(*config.algebra);
    const auto violation = validate_algebra(alg);
    if (config.format == Format::Json) {
      body["algebra"] = violation ? json{{"name", alg.name},
                                         {"valid", false},
                                         {"violation", std::string(to_string(violation->kind))},
                                         {"indices", violation->indices}}
                                  : json{{"name", alg.name}, {"valid", true}};
    } else if (violation) {
      out << alg.name << ": " << to_string(violation->kind) << " " << violation->message << '\n';
    } else {
      out << alg.name << ": ok\n";
    }
    if (violation) {
      err << "validate: algebra " << alg.name << " fails " << to_string(violation->kind) << '\n';
      status = kConfigError;
    }
  }
  if (config.graph_path) {
    const auto g = load_graph(config);
    const auto report = check_graph(g);
    if (config.format == Format::Json) {
      body["report"] = report_json(report);
    } else {
      print_report(out, report);
    }
    if (!report.identities.all() && status == kOk) status = kIdentityFailure;
  }
  if (config.format == Format::Json) emit(out, std::move(body));
  return status;
}

int execute(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.jobs == 0) throw InputError("--jobs must be positive");
    if (config.command == "eval") return cmd_eval(config, out, err);
    if (config.command == "poly") return cmd_poly(config, out, err);
    if (config.command == "colorings") return cmd_colorings(config, out, err);
    if (config.command == "map") return cmd_map(config, out, err);
    if (config.command == "survey") return cmd_survey(config, out, err);
    if (config.command == "validate") return cmd_validate(config, out, err);
    throw InputError("unknown command '" + config.command + "'");
  } catch (const AlgebraNameError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-algebra weight systems on oriented trivalent graphs", "wsys"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "text";
  std::string graph;
  std::string algebra;
  int n = 0;
  int max_v = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("graph", graph, "Graph file");
    if (required) opt->required();
  };

  auto* eval = app.add_subcommand("eval", "Evaluate W_L(G) by tensor contraction");
  add_graph(eval, true);
  eval->add_option("--algebra", algebra, "gl:<n>, so3, sl2, sl2-trace or abelian:<n>")->required();
  add_format(eval);

  auto* poly = app.add_subcommand("poly", "gl(N) marking polynomial, top coefficient and embeddings");
  add_graph(poly, true);
  auto* n_opt = poly->add_option("--n", n, "Also evaluate the polynomial at N");
  add_jobs(poly);
  add_format(poly);

  auto* colorings = app.add_subcommand("colorings", "Edge-3-colorings and the Penrose sum");
  add_graph(colorings, true);
  add_format(colorings);

  auto* map = app.add_subcommand("map", "Face map of a planar embedding and its 4-colorings");
  add_graph(map, true);
  add_jobs(map);
  add_format(map);

  auto* survey = app.add_subcommand("survey", "Check every identity over all graphs up to --max-v");
  auto* max_v_opt = survey->add_option("--max-v", max_v, "Largest vertex count (even)")->required();
  survey->add_flag("--allow-loops,!--no-loops", config.allow_loops, "Include graphs with loops (default)");
  survey->add_flag("--labeled", config.labeled, "Enumerate labeled involutions instead of classes");
  add_jobs(survey);
  add_format(survey);

  auto* validate = app.add_subcommand("validate", "Check an algebra's axioms and/or a graph's identities");
  add_graph(validate, false);
  validate->add_option("--algebra", algebra, "Algebra to validate");
  add_format(validate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (!graph.empty()) config.graph_path = graph;
  if (!algebra.empty()) config.algebra = algebra;
  if (n_opt->count() > 0) config.n = n;
  if (max_v_opt->count() > 0) config.max_v = max_v;
  config.format = format == "json" ? Format::Json : Format::Text;
  return execute(config, out, err);
}

}  // namespace wsys::cli
