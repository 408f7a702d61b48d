// Forbidden-pattern parsing, induced-subgraph containment, and the
// complexity classifier for the three problem variants.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

struct Pattern {
  Graph graph;
  // Component path orders in ascending order; present iff every component
  // of the pattern is a path (e.g. 2P1+P5 -> [1,1,5]).
  std::optional<std::vector<int>> linear_forest;
  std::string spec;  // original text, kept for reporting

  int order() const { return graph.n(); }
  bool is_linear_forest() const { return linear_forest.has_value(); }
};

// Grammar: term ('+' term)*, term = [count]P<r> | C<r> | K<r> | K<a>,<b> | claw.
Pattern parse_pattern(const std::string& spec);
// Derives the linear-forest decomposition from an arbitrary graph.
Pattern pattern_from_graph(const Graph& g, const std::string& name = "");

// A witness S with G[S] isomorphic to the pattern, or nullopt. Backtracking
// with forward checking; pattern components are matched largest-first and
// host candidates are tried in ascending id order, so the result is
// deterministic.
std::optional<VertexSet> contains_induced(const Graph& g, const Pattern& h);
bool is_h_free(const Graph& g, const Pattern& h);

enum class Complexity { PolynomialTime, Quasipolynomial, NPComplete, Open };
std::string to_string(Complexity c);

struct DichotomyVerdict {
  Complexity status;
  std::string citation;  // names the dichotomy case that matched
};

struct Mode {
  enum class Kind { EllFixed, KFixed, General };
  Kind kind = Kind::General;
  int value = 0;  // ell or k; ignored for General

  static Mode ell_fixed(int ell) { return {Kind::EllFixed, ell}; }
  static Mode k_fixed(int k) { return {Kind::KFixed, k}; }
  static Mode general() { return {Kind::General, 0}; }
};

DichotomyVerdict classify(const Pattern& h, const Mode& mode);

// True iff h embeds induced into s*P1 + tail (resp. s*P3 + tail) for some s;
// decided with s = |V(h)|, which is always enough.
bool within_p1_family(const Pattern& h, const std::string& tail);
bool within_p3_family(const Pattern& h, const std::string& tail);
// Smallest s so that h embeds into the instantiated family, or nullopt.
std::optional<int> min_family_s(const Pattern& h, const std::string& unit, const std::string& tail);

}  // namespace indsub
