#pragma once

// Naive reference oracles for tests. Deliberately share no code with the
// library search kernels: plain vectors, permutations and subset loops.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pancyclic/graph.hpp"

namespace ref {

using pancyclic::Graph;
using pancyclic::Vertex;

// Every cycle length present, by trying all subsets and all orderings. n <= 10.
std::set<int> cycle_lengths(const Graph& g);
bool has_cycle_of_length(const Graph& g, int ell);

// Max independent set size over all subsets. n <= 20.
int alpha(const Graph& g);

// Bron-Kerbosch with pivoting on adjacency sets.
int clique_number(const Graph& g);

// All lengths of simple x-y paths by plain DFS.
std::set<int> path_lengths(const Graph& g, Vertex x, Vertex y);

bool is_independent(const Graph& g, const std::vector<Vertex>& s);
bool is_clique(const Graph& g, const std::vector<Vertex>& s);

// Exact (1+gamma)^t >= n test with gamma = num/den, in integers.
int log_ceil(int n, std::int64_t num, std::int64_t den);

Graph random_graph(int n, double p, std::mt19937_64& rng);

// Planted Hamilton cycle on a random permutation plus chords of density p.
Graph random_hamiltonian(int n, double p, std::mt19937_64& rng, std::vector<Vertex>* cycle = nullptr);

} // namespace ref
