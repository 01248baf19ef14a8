#include "pancyclic/dense_paths.hpp"

#include <algorithm>
#include <cmath>

#include "pancyclic/error.hpp"
#include "pancyclic/oracles.hpp"

namespace pancyclic {

bool validate_certificate(const Graph& g, const DensePairCertificate& cert)
{
    if (cert.paths.empty() || cert.gap < 1)
        return false;
    if (cert.paths.begin()->first != cert.lo || cert.paths.rbegin()->first != cert.hi)
        return false;
    int previous = cert.lo;
    for (const auto& [len, p] : cert.paths) {
        if (p.vertices.empty() || p.length() != len || !validate_path(g, p))
            return false;
        if (p.front() != cert.u || p.back() != cert.v)
            return false;
        if (len - previous > cert.gap)
            return false;
        previous = len;
    }
    return true;
}

DensePairCertificate find_dense_pair(const Graph& g, const AnalysisParams& params)
{
    params.validate();
    const int n = g.order();
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "find_dense_pair: empty graph");
    auto part = bfs_cluster_partition(g, params.gamma);

    // H = union of clusters, relabelled 0..|H|-1 in ascending order.
    std::vector<Vertex> members;
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v)
        if (part.cluster_of[static_cast<std::size_t>(v)] >= 0) {
            local[static_cast<std::size_t>(v)] = static_cast<int>(members.size());
            members.push_back(v);
        }
    std::vector<Edge> arcs;
    for (auto [a, b] : g.edges()) {
        int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
        if (la < 0 || lb < 0)
            continue;
        int da = part.distance[static_cast<std::size_t>(a)], db = part.distance[static_cast<std::size_t>(b)];
        // a < b, so equal distances orient from the lower label.
        arcs.push_back(db < da ? Edge{lb, la} : Edge{la, lb});
    }
    Digraph h(static_cast<int>(members.size()), arcs);
    auto spine_local = longest_cover_path(h);

    DensePairCertificate cert;
    cert.method = "dense_pair";
    for (Vertex x : spine_local.vertices) {
        Vertex v = members[static_cast<std::size_t>(x)];
        cert.spine.push_back(v);
        cert.spine_distances.push_back(part.distance[static_cast<std::size_t>(v)]);
    }
    const int m = static_cast<int>(cert.spine.size());
    cert.cluster = part.cluster_of[static_cast<std::size_t>(cert.spine.front())];
    cert.u = part.clusters[static_cast<std::size_t>(cert.cluster)].center;
    cert.v = cert.spine.back();
    cert.promised_lo = log_ceil(n, part.gamma);
    {
        // floor((1 - gamma) n / k) - 1 in exact arithmetic
        Rational top = (Rational(1) - part.gamma) * Rational(n) / Rational(params.k);
        cert.promised_hi = static_cast<int>(top.numerator() / top.denominator()) - 1;
    }

    int previous_len = -1;
    for (int i = 0; i < m; ++i) {
        const auto& d = cert.spine_distances;
        if (i + 1 < m && (d[static_cast<std::size_t>(i + 1)] < d[static_cast<std::size_t>(i)]
                          || d[static_cast<std::size_t>(i + 1)] > d[static_cast<std::size_t>(i)] + 1))
            throw Error(ErrorKind::InternalContradiction, "spine distances not monotone at index " + std::to_string(i));
        OrderedPath p = tree_path(part, cert.spine[static_cast<std::size_t>(i)]);
        p.vertices.insert(p.vertices.end(), cert.spine.begin() + i + 1, cert.spine.end());
        if (previous_len >= 0 && (p.length() > previous_len || p.length() < previous_len - 1))
            throw Error(ErrorKind::InternalContradiction, "consecutive spine paths differ by more than one at index "
                                                              + std::to_string(i));
        previous_len = p.length();
        cert.paths.try_emplace(p.length(), std::move(p));
    }
    cert.lo = cert.paths.begin()->first;
    cert.hi = cert.paths.rbegin()->first;
    return cert;
}

bool is_dense_set(const std::vector<int>& lengths, double p, int a, int b)
{
    std::vector<int> inside;
    for (int len : lengths)
        if (len >= a && len <= b)
            inside.push_back(len);
    if (inside.empty())
        return static_cast<double>(b - a) < p;
    if (inside.front() - a > p || b - inside.back() > p)
        return false;
    for (std::size_t i = 1; i < inside.size(); ++i)
        if (inside[i] - inside[i - 1] > p)
            return false;
    return true;
}

bool is_p_dense(const Graph& g, Vertex x, Vertex y, double p, int a, int b, const OracleConfig& cfg)
{
    if (!std::isfinite(p) || p <= 0 || a > b)
        throw Error(ErrorKind::InvalidArgument, "is_p_dense: need p > 0 and a <= b");
    return is_dense_set(path_length_set(g, x, y, cfg), p, a, b);
}

} // namespace pancyclic
