#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pancyclic/config.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/report.hpp"

namespace pancyclic {

struct IndependentSet {
    int size = 0;
    std::vector<Vertex> vertices;
};

// Exact alpha(g) by branch and bound (greedy clique-cover bound) with a
// maximum independent set as witness. CapExceeded above cfg.oracle_cap.
IndependentSet independence_number(const Graph& g, const OracleConfig& cfg = {});

// Exact maximum clique, same search run on g directly.
std::vector<Vertex> maximum_clique(const Graph& g, const OracleConfig& cfg = {});

// Hamilton cycle or nullopt if none exists. CapExceeded above the oracle cap;
// BudgetExceeded when neither the pruned search nor the subset DP can decide.
std::optional<CycleWitness> hamilton_cycle(const Graph& g, const OracleConfig& cfg = {});

enum class CycleSearch {
    Auto,              // bounded DFS, then subset enumeration, then subset DP
    PathDfs,           // depth-first path search from each minimum vertex
    SubsetEnumeration, // every ell-subset, induced Hamiltonicity by bitmask DP
    SubsetDp,          // one DP over all vertex subsets (small n only)
};

// A cycle of length exactly ell, or nullopt when the search space was
// exhausted (a proof of absence). BudgetExceeded when undecided.
std::optional<CycleWitness> cycle_of_length(const Graph& g, int ell, const OracleConfig& cfg = {},
                                            CycleSearch method = CycleSearch::Auto);

// Every length in [3, n] marked witnessed or absent. CapExceeded above cfg.spectrum_cap.
SpectrumReport cycle_spectrum(const Graph& g, const OracleConfig& cfg = {});

// Sorted set of all lengths of x-y paths in g. BudgetExceeded above cfg.subset_dp_cap.
std::vector<int> path_length_set(const Graph& g, Vertex x, Vertex y, const OracleConfig& cfg = {});

namespace kernels {

struct SearchOutcome {
    std::optional<CycleWitness> witness;
    // True when the search completed; with no witness that proves absence.
    bool exhausted = false;
    std::uint64_t work = 0;
};

// Serial reference implementations. The parallel kernels must return the
// same witnesses whenever the budget is not hit.
namespace serial {
SearchOutcome dfs_cycle(const Graph& g, int ell, std::uint64_t node_budget);
SearchOutcome subset_cycle(const Graph& g, int ell, std::uint64_t subset_budget);
// Index ell holds the first cycle of length ell in mask order; size n + 1.
std::vector<std::optional<CycleWitness>> subset_dp_cycles(const Graph& g);
} // namespace serial

namespace parallel {
SearchOutcome dfs_cycle(const Graph& g, int ell, std::uint64_t node_budget);
SearchOutcome subset_cycle(const Graph& g, int ell, std::uint64_t subset_budget);
std::vector<std::optional<CycleWitness>> subset_dp_cycles(const Graph& g);
} // namespace parallel

} // namespace kernels

} // namespace pancyclic
