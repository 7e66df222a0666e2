#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsys/graph.hpp"
#include "wsys/polynomial.hpp"

namespace wsys {

enum class Enumeration {
  // One representative per orientation-preserving isomorphism class.
  IsomorphismClasses,
  // Every fixed-point-free involution on the 3v darts; only feasible for
  // v <= 6.
  Labeled,
};

std::string_view to_string(Enumeration mode);

struct GenerateOptions {
  int vertices = 2;
  bool allow_loops = true;
  Enumeration mode = Enumeration::IsomorphismClasses;
  int max_vertices = 10;
};

// Streams connected graphs on 3v darts. Labeled mode emits in lexicographic
// involution order. Class mode emits each class once, as the graph whose
// involution equals its canonical code, in lexicographic code order. Throws
// std::invalid_argument for odd, non-positive or over-limit v.
void generate_graphs(const GenerateOptions& options,
                     const std::function<void(const TrivalentGraph&)>& emit);
std::vector<TrivalentGraph> generate_graphs(const GenerateOptions& options);

// Relabels darts by a traversal from `root`: the root's vertex becomes vertex
// 0 entered at dart 0, darts are visited in label order, and each newly
// reached vertex takes the next three labels starting at its entry dart.
// Orientation is preserved. Requires a connected graph.
std::vector<Dart> traversal_code(const TrivalentGraph& g, Dart root);

struct CanonicalForm {
  TrivalentGraph graph;  // minimal traversal code over all roots
  int automorphisms = 0; // roots attaining the minimum
};

CanonicalForm canonical_form(const TrivalentGraph& g);

struct IdentityChecks {
  bool statement1 = true;       // w_sl2 == 0 implies w_top == 0
  bool prop2 = true;            // |w_top| vs spherical embeddings
  bool prop3 = true;            // |w_sl2| vs 4-colorings of the map
  bool route_agreement = true;  // gl(2), sl(2) and so(3) routes agree
  bool degree = true;           // deg wgl <= v/2 + 2
  bool tait = true;             // four_colorings == 4 * edge_3_colorings

  // Name/value pairs in a fixed order.
  std::vector<std::pair<std::string, bool>> named() const;
  bool all() const;
};

struct VerificationReport {
  std::string graph;
  int v = 0;
  int e = 0;
  bool two_connected = false;
  bool planar = false;
  IntPolynomial wgl_poly;
  Integer w_top;
  long long spherical_embeddings = 0;
  long long edge_3_colorings = 0;
  Integer penrose;
  Integer w_sl2;
  std::optional<long long> four_colorings;
  IdentityChecks identities;
};

// Requires a connected graph (throws std::invalid_argument otherwise).
VerificationReport check_graph(const TrivalentGraph& g);

struct SurveyFailure {
  std::string graph;
  std::string identity;
};

struct SurveySummary {
  int max_v = 0;
  bool allow_loops = true;
  Enumeration mode = Enumeration::IsomorphismClasses;
  std::map<int, long long> graphs_per_v;
  std::map<std::string, long long> identity_passes;
  std::vector<SurveyFailure> failures;
  long long total = 0;
};

struct SurveyResult {
  std::vector<VerificationReport> reports;  // v ascending, generation order
  SurveySummary summary;
};

struct SurveyOptions {
  int max_v = 2;
  bool allow_loops = true;
  Enumeration mode = Enumeration::IsomorphismClasses;
  unsigned jobs = 1;
  int max_vertices = 10;
};

// check_graph over every generated graph for v = 2, 4, ..., max_v. Output is
// identical for any job count.
SurveyResult run_survey(const SurveyOptions& options);

}  // namespace wsys
