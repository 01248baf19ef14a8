#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pancyclic/graph.hpp"

namespace pancyclic {

using Rational = boost::rational<std::int64_t>;

struct PathCover {
    std::vector<OrderedPath> paths;
    int size() const noexcept { return static_cast<int>(paths.size()); }
};

// Disjoint directed paths covering every vertex, at most alpha(underlying) of them.
PathCover gallai_milgram_cover(const Digraph& d);

// Longest path of the cover above; ties go to the path with the lower first vertex.
OrderedPath longest_cover_path(const Digraph& d);

bool validate_cover(const Digraph& d, const PathCover& cover);

struct Cluster {
    Vertex center = 0;
    std::vector<Vertex> vertices; // ascending
    int radius = 0;               // i_j: index of the last kept BFS level
};

struct ClusterPartition {
    Rational gamma;
    std::vector<Cluster> clusters;
    std::vector<Vertex> leftover; // ascending
    // Per vertex: cluster index or -1, BFS distance to its center inside the
    // remainder graph it was grown in, and BFS tree parent (-1 for centers and leftover).
    std::vector<int> cluster_of;
    std::vector<int> distance;
    std::vector<Vertex> parent;
};

// Best rational approximation with denominator <= max_den (continued fractions),
// so 0.1 becomes exactly 1/10.
Rational to_rational(double x, std::int64_t max_den = 1'000'000);

// Greedy BFS clustering. Root is the lowest remaining label; the first level
// i with |V_{i+1}| <= gamma |V_0..V_i| ends the cluster and V_{i+1} goes to leftover.
// InvalidGamma unless 0 < gamma < 1/2.
ClusterPartition bfs_cluster_partition(const Graph& g, Rational gamma);
ClusterPartition bfs_cluster_partition(const Graph& g, double gamma);

// (1 + gamma)^d <= n, in exact integer arithmetic.
bool within_log_bound(int d, int n, Rational gamma);
// Minimal t with (1 + gamma)^t >= n.
int log_ceil(int n, Rational gamma);

// Center-to-u path along BFS tree parents.
OrderedPath tree_path(const ClusterPartition& part, Vertex u);

// Empty when the partition is well formed and meets coverage, radius and
// separation; otherwise one message per violation.
std::vector<std::string> partition_violations(const Graph& g, const ClusterPartition& part);

} // namespace pancyclic
