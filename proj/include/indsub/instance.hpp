// Problem instances (graph + terminal set collection), solution verification
// for the strict and flexible variants, and the normalization procedure.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/patterns.hpp"

namespace indsub {

class Instance {
 public:
  // Validates: k >= 1, sets nonempty, pairwise disjoint, members exist.
  Instance(Graph g, std::vector<VertexSet> terminal_sets);

  const Graph& graph() const { return graph_; }
  const std::vector<VertexSet>& terminal_sets() const { return sets_; }
  const VertexSet& terminal_set(std::size_t i) const { return sets_.at(i); }
  int k() const { return static_cast<int>(sets_.size()); }
  int ell() const;  // max |Z_i|
  VertexSet all_terminals() const;

 private:
  Graph graph_;
  std::vector<VertexSet> sets_;
};

struct Solution {
  std::vector<VertexSet> subgraphs;  // index-aligned with the terminal sets
};

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // names the first violated clause and a witness
  explicit operator bool() const { return ok; }
};

// Clauses, checked in order: (a) each D^i contains Z_i, (b) each G[D^i] is
// connected, (c) the D^i are pairwise disjoint, (d) no edge joins D^i and
// D^j for i != j.
VerifyResult verify_solution(const Instance& inst, const Solution& sol);

// Paths variant (every |Z_i| = 2). Clause (d) ignores edges whose both
// endpoints are terminals, and each G[D^i] must be a path from s_i to t_i
// once a terminal-terminal chord inside it is disregarded.
VerifyResult verify_flexible_solution(const Instance& inst, const Solution& sol);

struct NormalizeResult {
  enum class Kind { Solved, Reduced, No };
  Kind kind = Kind::No;
  // Solved: a full solution for the original instance.
  std::optional<Solution> solution;
  // Reduced: the equivalent smaller instance plus lifting data.
  std::optional<Instance> reduced;
  std::map<int, VertexSet> provenance;  // reduced vertex -> original vertices
  std::vector<std::optional<std::size_t>> reduced_index;  // original set -> reduced set
  std::vector<VertexSet> resolved_parts;  // parts fixed for dropped sets
  std::string reason;  // No

  bool solved() const { return kind == Kind::Solved; }
  bool no() const { return kind == Kind::No; }
};

// Contracts intra-set edges, removes singleton sets together with their
// closed neighborhoods, and reports No on an edge between two different
// sets. A Reduced instance has k >= 2, every set of size >= 2, and an
// independent terminal union. Equivalent to the input instance.
NormalizeResult normalize(const Instance& inst);

// Places a solution of `res.reduced` back onto the original instance.
Solution lift_solution(const NormalizeResult& res, const Solution& reduced_sol);

// (2|V(H)| - 1) * |Z_i| for a linear forest H; `i` is 0-based.
long long solution_size_bound(const Pattern& h, const Instance& inst, std::size_t i);

// Terminal-collection file: {"sets": [[ids...], ...]}.
std::vector<VertexSet> read_terminal_sets(std::istream& in);
void write_terminal_sets(const std::vector<VertexSet>& sets, std::ostream& out);
std::vector<VertexSet> read_terminal_sets_file(const std::string& path);
void write_terminal_sets_file(const std::vector<VertexSet>& sets, const std::string& path);

// Solution file: {"status":"yes","subgraphs":[...]} | {"status":"no"} |
// {"status":"gaveup","reason":...}; optional "provenance": {id: [ids...]}.
struct SolutionFile {
  std::string status;  // "yes" | "no" | "gaveup"
  std::optional<Solution> solution;
  std::map<int, VertexSet> provenance;
  std::string reason;
};
SolutionFile read_solution(std::istream& in);
void write_solution(const SolutionFile& sf, std::ostream& out);
SolutionFile read_solution_file(const std::string& path);
void write_solution_file(const SolutionFile& sf, const std::string& path);

}  // namespace indsub
