#pragma once

#include <cstdint>
#include <string_view>

namespace pancyclic {

// Limits for the exact oracles. Values, not constants: tests and the CLI pin them.
struct OracleConfig {
    // Max order for independence number, Hamiltonicity and per-length cycle search.
    int oracle_cap = 64;
    // Max order for which cycle_spectrum promises a fully exhausted report.
    int spectrum_cap = 16;
    // Max order for the all-subsets bitmask dynamic program (memory is 4 * 2^n bytes).
    int subset_dp_cap = 22;
    // Node budget of a single depth-first path search.
    std::uint64_t dfs_node_budget = 20'000'000;
    // Max number of l-subsets examined by subset enumeration.
    std::uint64_t subset_budget = 20'000'000;
    // Dispatch to the OpenMP kernels instead of the serial reference.
    bool parallel = true;

    // Applies PANCYCLIC_ORACLE_CAP: either a bare integer (oracle_cap) or a
    // comma list such as "oracle=48,spectrum=18,dp=20,dfs=1000000,subsets=5000000".
    static OracleConfig from_env();
    void apply_override(std::string_view spec);
};

} // namespace pancyclic
