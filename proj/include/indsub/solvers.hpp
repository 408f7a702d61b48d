// Exact oracles for the three problem variants and the specialized
// polynomial-case algorithms, plus a dispatcher keyed on the classifier.
#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "indsub/instance.hpp"
#include "indsub/patterns.hpp"

namespace indsub {

struct Budget {
  // Per-part size cap for the oracles; -1 means |V|. Safe to lower only
  // with an H-freeness certificate (solution size bound).
  long long max_subset_size = -1;
  long long max_branches = 5'000'000;
  std::chrono::milliseconds time_limit{120'000};
};

struct BudgetUsage {
  long long branches = 0;
  double wall_ms = 0;
};

struct SolveAnswer {
  enum class Kind { Yes, No, GaveUp };
  Kind kind = Kind::No;
  Solution solution;   // populated for Yes; always passes verification
  std::string reason;  // populated for GaveUp
  BudgetUsage usage;

  bool yes() const { return kind == Kind::Yes; }
  bool no() const { return kind == Kind::No; }
  bool gave_up() const { return kind == Kind::GaveUp; }
};

// Ground-truth oracles (exact up to the budget; GaveUp on exhaustion).
SolveAnswer oracle_idcs(const Instance& inst, const Budget& budget = {});
// Non-induced variant: parts must be disjoint but may touch.
SolveAnswer oracle_disjoint_cs(const Instance& inst, const Budget& budget = {});
// Paths variant with terminal-terminal edges permitted.
SolveAnswer oracle_flexible_idp(const Instance& inst, const Budget& budget = {});

// Blob-and-independent-set pipeline for (sP3+P6)-free graphs, ell fixed.
SolveAnswer solve_sp3p6(const Instance& inst, int s, int ell, const Budget& budget = {});
// Same pipeline for P_r-free graphs with cap (2r-1)*ell.
SolveAnswer solve_pr_generic(const Instance& inst, int r, int ell, const Budget& budget = {});
// Contraction rewriting plus one-connector blob for (sP1+P5)-free graphs.
SolveAnswer solve_p5(const Instance& inst, int s, const Budget& budget = {});
// Fixed-k algorithm for (sP1+P6)-free graphs.
SolveAnswer solve_kp6(const Instance& inst, int s, const Budget& budget = {});
// Fixed-k algorithm for (sP1+2P4)-free graphs; k must match the instance.
SolveAnswer solve_2p4_kfixed(const Instance& inst, int s, int k, const Budget& budget = {});
// Case analysis for (sP1+P3+P4)-free graphs.
SolveAnswer solve_p3p4(const Instance& inst, int s, const Budget& budget = {});

using SolverHandle = std::function<SolveAnswer(const Instance&, const Budget&)>;
// Lifts a P_r-free solver (r <= 6) to (sP1+P_r)-free graphs.
SolveAnswer solve_nearly(const Instance& inst, int s, const SolverHandle& base, int r,
                         const Budget& budget = {});

// Routes to the specialized solver selected by classify(); NP-complete and
// open verdicts fall back to the oracle and may give up. The instance graph
// must be h-free (checked).
SolveAnswer dispatch(const Instance& inst, const Pattern& h, const Mode& mode,
                     const Budget& budget = {});

}  // namespace indsub
