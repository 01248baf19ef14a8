#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pancyclic/config.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/oracles.hpp"

namespace pancyclic {

// k cliques of size 2k - 2 on labels [i(2k-2), (i+1)(2k-2)); a_i is the first
// label of clique i, b_i the second, and a_i b_{i+1} (mod k) are the only
// edges between cliques. n = 2k^2 - 2k, alpha = k, no cycle of length 2k - 1.
struct ExtremalSpec {
    int k = 0;
    int n = 0;
    int clique_size = 0;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

// InvalidK for k < 2. At k = 2 the cliques are single edges and the graph is C_4.
ExtremalSpec extremal_spec(int k);
Graph gen_extremal(int k);

// Explicit cycles for every length in {3..2k-2} and {2k..n}: an initial run of
// one clique, or all connectors threaded with a b_i -> a_i path of length
// 1..2k-3 inside each clique.
std::map<int, CycleWitness> extremal_witnesses(int k);

struct GeneratorConfig {
    int n = 10;
    int k = 2;
    std::uint64_t seed = 1;
    // Initial chord probability on top of the planted cycle; afterwards edges
    // go inside a maximum independent set until alpha <= k.
    double density = 0.3;
    int max_attempts = 10'000;
};

struct RandomInstance {
    Graph graph;
    CycleWitness hamilton;
    IndependentSet alpha; // maximum independent set of the final graph
};

// Planted Hamilton cycle plus chords, repaired until the oracle certifies
// alpha <= k. Same config, same graph. Infeasible once max_attempts oracle
// rounds pass; InvalidArgument for n < 3 or k < 1.
RandomInstance gen_random_bounded_alpha(const GeneratorConfig& cfg, const OracleConfig& oracle = {});

} // namespace pancyclic
