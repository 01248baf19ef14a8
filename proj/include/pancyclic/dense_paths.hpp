#pragma once

#include <map>
#include <string>
#include <vector>

#include "pancyclic/config.hpp"
#include "pancyclic/covers.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/params.hpp"

namespace pancyclic {

// Paths with common endpoints u, v, one per achieved length (in edges).
// Consecutive achieved lengths differ by at most `gap`; gap 1 means every
// length in [lo, hi] is present.
struct DensePairCertificate {
    Vertex u = 0;
    Vertex v = 0;
    int lo = 0;
    int hi = -1;
    int gap = 1;
    std::map<int, OrderedPath> paths;

    // How the pair was found. For dense pairs: spine x_1..x_m, the BFS
    // distances d_i of the spine vertices, and the cluster the spine lies in.
    std::string method;
    std::vector<Vertex> spine;
    std::vector<int> spine_distances;
    int cluster = -1;
    // Interval the asymptotic argument promises, [log_{1+gamma} n, (1-gamma) n/k - 1];
    // empty (lo > hi) at most desk-scale sizes.
    int promised_lo = 0;
    int promised_hi = -1;

    int width() const noexcept { return hi - lo; }
};

// Every path validates with endpoints u, v and its keyed length; lo/hi are the
// extreme keys; consecutive keys differ by at most gap.
bool validate_certificate(const Graph& g, const DensePairCertificate& cert);

// BFS partition, orientation by distance to the cluster center (ties from the
// lower label), longest Gallai-Milgram path inside the clusters, then one
// path per spine vertex: tree path to x_i followed by x_{i+1}, ..., x_m.
// Throws InvalidArgument on an empty graph.
DensePairCertificate find_dense_pair(const Graph& g, const AnalysisParams& params);

// True iff every real subinterval of [a, b] of width >= p contains a member
// of `lengths` (sorted ascending).
bool is_dense_set(const std::vector<int>& lengths, double p, int a, int b);

// Same test on the exact set of x-y path lengths. BudgetExceeded over the DP cap.
bool is_p_dense(const Graph& g, Vertex x, Vertex y, double p, int a, int b, const OracleConfig& cfg = {});

} // namespace pancyclic
