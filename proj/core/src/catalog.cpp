#include "wsys/catalog.hpp"

#include <stdexcept>

#include "wsys/coloring.hpp"
#include "wsys/lie.hpp"
#include "wsys/parallel.hpp"
#include "wsys/ribbon.hpp"

namespace wsys {

std::string_view to_string(Enumeration mode) {
  switch (mode) {
    case Enumeration::IsomorphismClasses: return "isomorphism-classes";
    case Enumeration::Labeled: return "labeled";
  }
  return "unknown";
}

namespace {

constexpr int kLabeledLimit = 6;

void check_vertex_count(const GenerateOptions& options) {
  const int v = options.vertices;
  if (v <= 0 || v % 2 != 0) throw std::invalid_argument("vertex count must be even and positive");
  if (v > options.max_vertices)
    throw std::invalid_argument("vertex count " + std::to_string(v) + " exceeds the maximum " +
                                std::to_string(options.max_vertices));
  if (options.mode == Enumeration::Labeled && v > kLabeledLimit)
    throw std::invalid_argument("labeled enumeration is limited to v <= " +
                                std::to_string(kLabeledLimit));
}

// Labels darts from `root` as traversal_code does and compares the resulting
// code against `reference` lazily: negative if smaller, zero if equal.
int compare_traversal(const TrivalentGraph& g, Dart root, const std::vector<Dart>& reference,
                      std::vector<Dart>& label, std::vector<Dart>& order) {
  const int n = g.dart_count();
  std::fill(label.begin(), label.end(), -1);
  int next = 0;
  auto open_vertex = [&](Dart entry) {
    for (int k = 0; k < 3; ++k) {
      const Dart d = 3 * TrivalentGraph::vertex_of(entry) + (entry % 3 + k) % 3;
      label[static_cast<std::size_t>(d)] = next;
      order[static_cast<std::size_t>(next)] = d;
      ++next;
    }
  };
  open_vertex(root);
  for (int k = 0; k < n; ++k) {
    const Dart o = g.opposite(order[static_cast<std::size_t>(k)]);
    if (label[static_cast<std::size_t>(o)] < 0) open_vertex(o);
    const Dart code = label[static_cast<std::size_t>(o)];
    const Dart ref = reference[static_cast<std::size_t>(k)];
    if (code != ref) return code < ref ? -1 : 1;
  }
  return 0;
}

class MapGenerator {
 public:
  MapGenerator(int vertices, bool allow_loops, const std::function<void(const TrivalentGraph&)>& emit)
      : vertices_(vertices),
        allow_loops_(allow_loops),
        emit_(emit),
        alpha_(static_cast<std::size_t>(3 * vertices), -1),
        label_(alpha_.size()),
        order_(alpha_.size()) {}

  void run() {
    opened_ = 1;
    extend(0);
  }

 private:
  void extend(int k) {
    const int discovered = 3 * opened_;
    while (k < discovered && alpha_[static_cast<std::size_t>(k)] != -1) ++k;
    if (k == discovered) {
      if (opened_ == vertices_) accept();
      return;
    }
    for (int j = k + 1; j < discovered; ++j) {
      if (alpha_[static_cast<std::size_t>(j)] != -1) continue;
      if (!allow_loops_ && j / 3 == k / 3) continue;
      pair(k, j);
      extend(k + 1);
      unpair(k, j);
    }
    if (opened_ < vertices_) {
      const int entry = discovered;
      ++opened_;
      pair(k, entry);
      extend(k + 1);
      unpair(k, entry);
      --opened_;
    }
  }

  void pair(int a, int b) {
    alpha_[static_cast<std::size_t>(a)] = b;
    alpha_[static_cast<std::size_t>(b)] = a;
  }
  void unpair(int a, int b) {
    alpha_[static_cast<std::size_t>(a)] = -1;
    alpha_[static_cast<std::size_t>(b)] = -1;
  }

  // Keeps the rooted map only if rooting at dart 0 gives the minimal code.
  void accept() {
    const TrivalentGraph g(alpha_);
    for (Dart root = 1; root < g.dart_count(); ++root)
      if (compare_traversal(g, root, alpha_, label_, order_) < 0) return;
    emit_(g);
  }

  int vertices_;
  bool allow_loops_;
  const std::function<void(const TrivalentGraph&)>& emit_;
  std::vector<Dart> alpha_;
  std::vector<Dart> label_;
  std::vector<Dart> order_;
  int opened_ = 0;
};

void generate_labeled(int vertices, bool allow_loops,
                      const std::function<void(const TrivalentGraph&)>& emit) {
  const int n = 3 * vertices;
  std::vector<Dart> alpha(static_cast<std::size_t>(n), -1);
  std::function<void(int)> step = [&](int k) {
    while (k < n && alpha[static_cast<std::size_t>(k)] != -1) ++k;
    if (k == n) {
      TrivalentGraph g(alpha);
      if (is_connected(g)) emit(g);
      return;
    }
    for (int j = k + 1; j < n; ++j) {
      if (alpha[static_cast<std::size_t>(j)] != -1) continue;
      if (!allow_loops && j / 3 == k / 3) continue;
      alpha[static_cast<std::size_t>(k)] = j;
      alpha[static_cast<std::size_t>(j)] = k;
      step(k + 1);
      alpha[static_cast<std::size_t>(k)] = -1;
      alpha[static_cast<std::size_t>(j)] = -1;
    }
  };
  step(0);
}

}  // namespace

void generate_graphs(const GenerateOptions& options,
                     const std::function<void(const TrivalentGraph&)>& emit) {
  check_vertex_count(options);
  if (options.mode == Enumeration::Labeled) {
    generate_labeled(options.vertices, options.allow_loops, emit);
  } else {
    MapGenerator(options.vertices, options.allow_loops, emit).run();
  }
}

std::vector<TrivalentGraph> generate_graphs(const GenerateOptions& options) {
  std::vector<TrivalentGraph> out;
  generate_graphs(options, [&](const TrivalentGraph& g) { out.push_back(g); });
  return out;
}

std::vector<Dart> traversal_code(const TrivalentGraph& g, Dart root) {
  if (!is_connected(g)) throw std::invalid_argument("traversal_code needs a connected graph");
  const auto n = static_cast<std::size_t>(g.dart_count());
  std::vector<Dart> label(n, -1);
  std::vector<Dart> order(n);
  std::vector<Dart> code(n);
  int next = 0;
  auto open_vertex = [&](Dart entry) {
    for (int k = 0; k < 3; ++k) {
      const Dart d = 3 * TrivalentGraph::vertex_of(entry) + (entry % 3 + k) % 3;
      label[static_cast<std::size_t>(d)] = next;
      order[static_cast<std::size_t>(next)] = d;
      ++next;
    }
  };
  open_vertex(root);
  for (std::size_t k = 0; k < n; ++k) {
    const Dart o = g.opposite(order[k]);
    if (label[static_cast<std::size_t>(o)] < 0) open_vertex(o);
    code[k] = label[static_cast<std::size_t>(o)];
  }
  return code;
}

CanonicalForm canonical_form(const TrivalentGraph& g) {
  std::vector<Dart> best = traversal_code(g, 0);
  int count = 1;
  for (Dart root = 1; root < g.dart_count(); ++root) {
    auto code = traversal_code(g, root);
    if (code < best) {
      best = std::move(code);
      count = 1;
    } else if (code == best) {
      ++count;
    }
  }
  return CanonicalForm{TrivalentGraph(std::move(best)), count};
}

std::vector<std::pair<std::string, bool>> IdentityChecks::named() const {
  return {{"statement1", statement1},       {"prop2", prop2},   {"prop3", prop3},
          {"route_agreement", route_agreement}, {"degree", degree}, {"tait", tait}};
}

bool IdentityChecks::all() const {
  return statement1 && prop2 && prop3 && route_agreement && degree && tait;
}

namespace {

Integer pow2(int exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

VerificationReport check_graph(const TrivalentGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("check_graph needs a connected graph");
  VerificationReport r;
  r.graph = serialize_graph(g);
  r.v = g.vertex_count();
  r.e = g.edge_count();
  const int half = r.v / 2;

  const MarkingSummary markings = summarize_markings(g);
  r.two_connected = is_two_connected(g);
  r.planar = markings.spherical > 0;
  r.wgl_poly = markings.wgl;
  r.w_top = markings.w_top;
  r.spherical_embeddings = markings.spherical;
  r.edge_3_colorings = count_edge_3_colorings(g);
  r.penrose = penrose_sum(g);
  r.w_sl2 = pow2(half) * r.penrose;

  std::optional<PlanarMap> map;
  if (r.planar && r.two_connected) {
    map = extract_map(g, *markings.first_spherical);
    r.four_colorings = count_four_colorings(*map);
  }

  IdentityChecks& id = r.identities;
  id.statement1 = sgn(r.w_sl2) != 0 || sgn(r.w_top) == 0;
  if (r.two_connected) {
    id.prop2 = abs(r.w_top) == Integer(static_cast<long>(r.spherical_embeddings)) &&
               markings.spherical_signs_agree;
  } else {
    id.prop2 = sgn(r.w_top) == 0;
  }
  if (map) {
    // |w_sl2| = 2^(v/2-2) * four_colorings, cleared of negative powers.
    const Integer lhs = abs(r.w_sl2) * pow2(std::max(0, 2 - half));
    const Integer rhs = Integer(static_cast<long>(*r.four_colorings)) * pow2(std::max(0, half - 2));
    id.prop3 = lhs == rhs;
    id.tait = *r.four_colorings == 4 * r.edge_3_colorings && !verify_tait_bijection(*map);
  }

  // The sl(2) trace form is -1/2 times the orthonormal so(3) form, so the
  // gl(2) value picks up (-1)^(v/2) relative to make_sl2().
  const Rational so3 = evaluate_weight(g, make_so3_tilde());
  const Rational sl2 = evaluate_weight(g, make_sl2());
  const Rational sl2_trace = evaluate_weight(g, make_sl2_trace());
  const Rational gl2_tensor = evaluate_weight(g, make_gl(2));
  const Integer gl2 = r.wgl_poly.evaluate(2);
  const Integer parity = half % 2 == 0 ? 1 : -1;
  id.route_agreement = so3 == Rational(r.penrose) && sl2 == Rational(r.w_sl2) &&
                       Rational(gl2) == gl2_tensor && Rational(gl2) == sl2_trace &&
                       gl2 == parity * r.w_sl2;

  id.degree = r.wgl_poly.degree() <= half + 2;
  return r;
}

SurveyResult run_survey(const SurveyOptions& options) {
  if (options.max_v < 2 || options.max_v % 2 != 0)
    throw std::invalid_argument("max_v must be even and at least 2");
  if (options.max_v > options.max_vertices)
    throw std::invalid_argument("max_v exceeds the configured maximum " +
                                std::to_string(options.max_vertices));

  SurveyResult result;
  SurveySummary& s = result.summary;
  s.max_v = options.max_v;
  s.allow_loops = options.allow_loops;
  s.mode = options.mode;
  for (const auto& [name, ok] : IdentityChecks{}.named()) s.identity_passes[name] = 0;

  for (int v = 2; v <= options.max_v; v += 2) {
    GenerateOptions gen{v, options.allow_loops, options.mode, options.max_vertices};
    const auto graphs = generate_graphs(gen);
    std::vector<VerificationReport> reports(graphs.size());
    parallel_for(graphs.size(), options.jobs,
                 [&](std::size_t i) { reports[i] = check_graph(graphs[i]); });

    s.graphs_per_v[v] = static_cast<long long>(reports.size());
    for (auto& r : reports) {
      for (const auto& [name, ok] : r.identities.named()) {
        if (ok) {
          ++s.identity_passes[name];
        } else {
          s.failures.push_back({r.graph, name});
        }
      }
      ++s.total;
      result.reports.push_back(std::move(r));
    }
  }
  return result;
}

}  // namespace wsys
