#include "indsub/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indsub {

using json = nlohmann::json;

Instance::Instance(Graph g, std::vector<VertexSet> terminal_sets)
    : graph_(std::move(g)) {
  if (terminal_sets.empty()) throw std::invalid_argument("instance needs at least one terminal set");
  std::vector<char> seen(static_cast<std::size_t>(graph_.max_vertex_id() + 1), 0);
  for (auto& z : terminal_sets) {
    z = make_vertex_set(std::move(z));
    if (z.empty()) throw std::invalid_argument("terminal sets must be nonempty");
    for (int v : z) {
      if (!graph_.has_vertex(v))
        throw std::invalid_argument("terminal " + std::to_string(v) + " is not a vertex");
      if (seen[v]) throw std::invalid_argument("terminal sets must be pairwise disjoint");
      seen[v] = 1;
    }
  }
  sets_ = std::move(terminal_sets);
}

int Instance::ell() const {
  std::size_t best = 0;
  for (const auto& z : sets_) best = std::max(best, z.size());
  return static_cast<int>(best);
}

VertexSet Instance::all_terminals() const {
  VertexSet all;
  for (const auto& z : sets_) all.insert(all.end(), z.begin(), z.end());
  return make_vertex_set(std::move(all));
}

namespace {

std::string set_to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

void check_alignment(const Instance& inst, const Solution& sol) {
  if (sol.subgraphs.size() != inst.terminal_sets().size())
    throw std::invalid_argument("solution has " + std::to_string(sol.subgraphs.size()) +
                                " subgraphs for " + std::to_string(inst.k()) + " terminal sets");
  for (const auto& d : sol.subgraphs)
    for (int v : d)
      if (!inst.graph().has_vertex(v))
        throw std::invalid_argument("solution vertex " + std::to_string(v) + " is not in the graph");
}

}  // namespace

VerifyResult verify_solution(const Instance& inst, const Solution& sol) {
  check_alignment(inst, sol);
  const Graph& g = inst.graph();
  std::vector<VertexSet> parts;
  parts.reserve(sol.subgraphs.size());
  for (const auto& d : sol.subgraphs) parts.push_back(make_vertex_set(d));

  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int z : inst.terminal_set(i))
      if (!contains(parts[i], z))
        return {false, "clause (a): subgraph " + std::to_string(i) + " misses terminal " +
                           std::to_string(z)};
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!is_connected_set(g, parts[i]))
      return {false, "clause (b): subgraph " + std::to_string(i) + " = " + set_to_string(parts[i]) +
                         " is not connected"};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int v : parts[i])
        if (contains(parts[j], v))
          return {false, "clause (c): subgraphs " + std::to_string(i) + " and " + std::to_string(j) +
                             " share vertex " + std::to_string(v)};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int v : parts[i])
        for (int u : g.neighbors(v))
          if (contains(parts[j], u))
            return {false, "clause (d): edge " + std::to_string(v) + "-" + std::to_string(u) +
                               " joins subgraphs " + std::to_string(i) + " and " + std::to_string(j)};
  return {true, "valid"};
}

VerifyResult verify_flexible_solution(const Instance& inst, const Solution& sol) {
  for (const auto& z : inst.terminal_sets())
    if (z.size() != 2)
      throw std::invalid_argument("flexible verification requires terminal pairs (|Z_i| = 2)");
  check_alignment(inst, sol);
  const Graph& g = inst.graph();
  VertexSet terminals = inst.all_terminals();
  std::vector<VertexSet> parts;
  for (const auto& d : sol.subgraphs) parts.push_back(make_vertex_set(d));

  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int z : inst.terminal_set(i))
      if (!contains(parts[i], z))
        return {false, "clause (a): subgraph " + std::to_string(i) + " misses terminal " +
                           std::to_string(z)};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int v : parts[i])
        if (contains(parts[j], v))
          return {false, "clause (c): subgraphs " + std::to_string(i) + " and " + std::to_string(j) +
                             " share vertex " + std::to_string(v)};

  // Each part must induce an s_i-t_i path, up to the terminal-terminal chord.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int s = inst.terminal_set(i)[0], t = inst.terminal_set(i)[1];
    Graph sub = induced_subgraph(g, parts[i]);
    if (parts[i].size() == 2) {
      if (!sub.has_edge(s, t))
        return {false, "path clause: pair " + std::to_string(i) + " is not connected"};
      continue;
    }
    if (sub.has_edge(s, t)) sub.remove_edge(s, t);
    if (sub.m() != sub.n() - 1 || !is_connected_set(sub, parts[i]))
      return {false, "path clause: subgraph " + std::to_string(i) + " = " +
                         set_to_string(parts[i]) + " does not induce an s-t path"};
    for (int v : parts[i]) {
      int want = (v == s || v == t) ? 1 : 2;
      if (sub.degree(v) != want)
        return {false, "path clause: subgraph " + std::to_string(i) + " = " +
                           set_to_string(parts[i]) + " does not induce an s-t path"};
    }
  }

  // Cross edges are allowed only between terminals.
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int v : parts[i])
        for (int u : g.neighbors(v))
          if (contains(parts[j], u) && !(contains(terminals, v) && contains(terminals, u)))
            return {false, "clause (d): non-terminal edge " + std::to_string(v) + "-" +
                               std::to_string(u) + " joins subgraphs " + std::to_string(i) +
                               " and " + std::to_string(j)};
  return {true, "valid"};
}

NormalizeResult normalize(const Instance& inst) {
  Graph g = inst.graph();
  std::vector<VertexSet> sets = inst.terminal_sets();
  std::size_t orig_k = sets.size();
  std::vector<std::size_t> orig_of(orig_k);
  for (std::size_t i = 0; i < orig_k; ++i) orig_of[i] = i;

  NormalizeResult res;
  res.reduced_index.assign(orig_k, std::nullopt);
  res.resolved_parts.assign(orig_k, {});
  std::map<int, VertexSet> prov;
  for (int v : g.vertices()) prov[v] = {v};

  bool changed = true;
  while (changed) {
    changed = false;
    // Contract every edge inside a terminal set.
    for (std::size_t i = 0; i < sets.size() && !changed; ++i) {
      for (int u : sets[i]) {
        for (int v : g.neighbors(u)) {
          if (v <= u || !contains(sets[i], v)) continue;
          auto [next, w] = contract_edge(g, u, v);
          g = std::move(next);
          VertexSet merged = prov[u];
          merged.insert(merged.end(), prov[v].begin(), prov[v].end());
          prov.erase(u);
          prov.erase(v);
          prov[w] = make_vertex_set(std::move(merged));
          VertexSet z;
          for (int x : sets[i])
            if (x != u && x != v) z.push_back(x);
          z.push_back(w);
          sets[i] = make_vertex_set(std::move(z));
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
    if (changed) continue;
    // Remove singleton sets together with their closed neighborhood.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].size() != 1) continue;
      int z = sets[i][0];
      for (int u : g.neighbors(z))
        for (std::size_t j = 0; j < sets.size(); ++j)
          if (j != i && contains(sets[j], u))
            return {NormalizeResult::Kind::No, std::nullopt, std::nullopt, {}, {}, {},
                    "terminals " + std::to_string(z) + " and " + std::to_string(u) +
                        " of different sets are adjacent"};
      res.resolved_parts[orig_of[i]] = prov[z];
      VertexSet gone = closed_neighborhood(g, {z});
      for (int x : gone) prov.erase(x);
      g.remove_vertices(gone);
      sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i));
      orig_of.erase(orig_of.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }

  // An edge between two different sets makes the instance infeasible.
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int u : sets[i])
      for (int v : g.neighbors(u))
        for (std::size_t j = 0; j < sets.size(); ++j)
          if (j != i && contains(sets[j], v))
            return {NormalizeResult::Kind::No, std::nullopt, std::nullopt, {}, {}, {},
                    "terminals " + std::to_string(u) + " and " + std::to_string(v) +
                        " of different sets are adjacent"};

  if (sets.size() <= 1) {
    Solution sol;
    sol.subgraphs.assign(orig_k, {});
    for (std::size_t i = 0; i < orig_k; ++i) sol.subgraphs[i] = res.resolved_parts[i];
    if (sets.size() == 1) {
      for (const auto& comp : connected_components(g)) {
        if (std::includes(comp.begin(), comp.end(), sets[0].begin(), sets[0].end())) {
          VertexSet lifted;
          for (int v : comp) lifted.insert(lifted.end(), prov[v].begin(), prov[v].end());
          sol.subgraphs[orig_of[0]] = make_vertex_set(std::move(lifted));
          res.kind = NormalizeResult::Kind::Solved;
          res.solution = std::move(sol);
          return res;
        }
      }
      return {NormalizeResult::Kind::No, std::nullopt, std::nullopt, {}, {}, {},
              "a terminal set is split across components"};
    }
    res.kind = NormalizeResult::Kind::Solved;
    res.solution = std::move(sol);
    return res;
  }

  res.kind = NormalizeResult::Kind::Reduced;
  for (std::size_t i = 0; i < sets.size(); ++i) res.reduced_index[orig_of[i]] = i;
  res.provenance = std::move(prov);
  res.reduced = Instance(std::move(g), std::move(sets));
  return res;
}

Solution lift_solution(const NormalizeResult& res, const Solution& reduced_sol) {
  if (res.kind != NormalizeResult::Kind::Reduced)
    throw std::invalid_argument("lift_solution needs a Reduced outcome");
  if (reduced_sol.subgraphs.size() != res.reduced->terminal_sets().size())
    throw std::invalid_argument("reduced solution is misaligned");
  Solution out;
  out.subgraphs.assign(res.reduced_index.size(), {});
  for (std::size_t i = 0; i < res.reduced_index.size(); ++i) {
    if (res.reduced_index[i]) {
      VertexSet lifted;
      for (int v : reduced_sol.subgraphs[*res.reduced_index[i]]) {
        auto it = res.provenance.find(v);
        if (it == res.provenance.end())
          throw std::invalid_argument("vertex " + std::to_string(v) + " has no provenance");
        lifted.insert(lifted.end(), it->second.begin(), it->second.end());
      }
      out.subgraphs[i] = make_vertex_set(std::move(lifted));
    } else {
      out.subgraphs[i] = res.resolved_parts[i];
    }
  }
  return out;
}

long long solution_size_bound(const Pattern& h, const Instance& inst, std::size_t i) {
  if (!h.is_linear_forest())
    throw std::invalid_argument("solution_size_bound needs a linear-forest pattern");
  if (i >= inst.terminal_sets().size()) throw std::invalid_argument("set index out of range");
#ifndef NDEBUG
  if (!is_h_free(inst.graph(), h))
    throw std::logic_error("solution_size_bound: graph is not H-free");
#endif
  return (2LL * h.order() - 1) * static_cast<long long>(inst.terminal_set(i).size());
}

std::vector<VertexSet> read_terminal_sets(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("terminal sets: ") + e.what(), static_cast<long long>(e.byte));
  }
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
    throw std::invalid_argument("terminal sets file needs a top-level \"sets\" array");
  std::vector<VertexSet> sets;
  for (const auto& arr : j["sets"]) {
    if (!arr.is_array()) throw std::invalid_argument("each terminal set must be an array");
    VertexSet z;
    for (const auto& v : arr) z.push_back(v.get<int>());
    sets.push_back(make_vertex_set(std::move(z)));
  }
  return sets;
}

void write_terminal_sets(const std::vector<VertexSet>& sets, std::ostream& out) {
  json j;
  j["sets"] = sets;
  out << j.dump(2) << '\n';
}

std::vector<VertexSet> read_terminal_sets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_terminal_sets(in);
}

void write_terminal_sets_file(const std::vector<VertexSet>& sets, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_terminal_sets(sets, out);
}

SolutionFile read_solution(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution: ") + e.what(), static_cast<long long>(e.byte));
  }
  SolutionFile sf;
  sf.status = j.at("status").get<std::string>();
  if (sf.status == "yes") {
    Solution sol;
    for (const auto& arr : j.at("subgraphs")) {
      VertexSet d;
      for (const auto& v : arr) d.push_back(v.get<int>());
      sol.subgraphs.push_back(make_vertex_set(std::move(d)));
    }
    sf.solution = std::move(sol);
  }
  if (j.contains("provenance"))
    for (const auto& [key, arr] : j["provenance"].items()) {
      VertexSet olds;
      for (const auto& v : arr) olds.push_back(v.get<int>());
      sf.provenance[std::stoi(key)] = make_vertex_set(std::move(olds));
    }
  if (j.contains("reason")) sf.reason = j["reason"].get<std::string>();
  return sf;
}

void write_solution(const SolutionFile& sf, std::ostream& out) {
  nlohmann::ordered_json j;
  j["status"] = sf.status;
  if (sf.status == "yes" && sf.solution) j["subgraphs"] = sf.solution->subgraphs;
  if (!sf.provenance.empty()) {
    nlohmann::ordered_json p;
    for (const auto& [v, olds] : sf.provenance) p[std::to_string(v)] = olds;
    j["provenance"] = std::move(p);
  }
  if (!sf.reason.empty()) j["reason"] = sf.reason;
  out << j.dump(2) << '\n';
}

SolutionFile read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_solution(in);
}

void write_solution_file(const SolutionFile& sf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_solution(sf, out);
}

}  // namespace indsub
