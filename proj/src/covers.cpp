#include "pancyclic/covers.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "pancyclic/error.hpp"

namespace pancyclic {

namespace {

// Path cover kept as successor/predecessor links over the active vertices.
struct CoverState {
    const Digraph& d;
    std::vector<char> active;
    std::vector<Vertex> next;
    std::vector<Vertex> prev;

    explicit CoverState(const Digraph& digraph)
        : d(digraph), active(static_cast<std::size_t>(digraph.order()), 1),
          next(static_cast<std::size_t>(digraph.order()), -1), prev(static_cast<std::size_t>(digraph.order()), -1)
    {
    }

    bool is_end(Vertex v) const
    {
        return active[static_cast<std::size_t>(v)] && next[static_cast<std::size_t>(v)] < 0;
    }

    // One fewer path with the set of path ends shrinking. Returns false when
    // the current ends are independent, in which case nothing changed.
    bool reduce()
    {
        Vertex tail = -1, head = -1;
        for (Vertex u = 0; u < d.order() && tail < 0; ++u) {
            if (!is_end(u))
                continue;
            for (Vertex w : d.out_neighbors(u))
                if (is_end(w)) {
                    tail = u;
                    head = w;
                    break;
                }
        }
        if (tail < 0)
            return false;
        auto h = static_cast<std::size_t>(head);
        Vertex before = prev[h];
        if (before < 0) {
            link(tail, head);
            return true;
        }
        next[static_cast<std::size_t>(before)] = -1;
        prev[h] = -1;
        active[h] = 0;
        bool ok = reduce();
        active[h] = 1;
        if (!ok) {
            link(before, head);
            return false;
        }
        link(is_end(before) ? before : tail, head);
        return true;
    }

    void link(Vertex a, Vertex b)
    {
        next[static_cast<std::size_t>(a)] = b;
        prev[static_cast<std::size_t>(b)] = a;
    }
};

} // namespace

PathCover gallai_milgram_cover(const Digraph& d)
{
    CoverState state(d);
    while (state.reduce()) {
    }
    PathCover cover;
    for (Vertex v = 0; v < d.order(); ++v) {
        if (state.prev[static_cast<std::size_t>(v)] >= 0)
            continue;
        OrderedPath p;
        for (Vertex u = v; u >= 0; u = state.next[static_cast<std::size_t>(u)])
            p.vertices.push_back(u);
        cover.paths.push_back(std::move(p));
    }
    return cover;
}

OrderedPath longest_cover_path(const Digraph& d)
{
    auto cover = gallai_milgram_cover(d);
    if (cover.paths.empty())
        return {};
    auto best = std::max_element(cover.paths.begin(), cover.paths.end(), [](const OrderedPath& a, const OrderedPath& b) {
        if (a.vertex_count() != b.vertex_count())
            return a.vertex_count() < b.vertex_count();
        return a.front() > b.front();
    });
    return *best;
}

bool validate_cover(const Digraph& d, const PathCover& cover)
{
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    int count = 0;
    for (const auto& p : cover.paths) {
        if (p.vertices.empty() || !validate_directed_path(d, p))
            return false;
        for (Vertex v : p.vertices) {
            if (seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = 1;
            ++count;
        }
    }
    return count == d.order();
}

Rational to_rational(double x, std::int64_t max_den)
{
    if (!std::isfinite(x) || x < 0)
        throw Error(ErrorKind::InvalidArgument, "to_rational: need a finite non-negative value");
    // Convergents h/k of the continued fraction of x.
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = x;
    for (int iter = 0; iter < 64; ++iter) {
        double a_real = std::floor(rest);
        if (a_real > 1e15)
            break;
        auto a = static_cast<std::int64_t>(a_real);
        std::int64_t k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        std::int64_t h2 = a * h1 + h0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = rest - a_real;
        if (frac < 1e-12 || std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-15)
            break;
        rest = 1.0 / frac;
    }
    return Rational(h1, k1);
}

bool within_log_bound(int d, int n, Rational gamma)
{
    using boost::multiprecision::cpp_int;
    cpp_int lhs = 1, rhs = n;
    for (int i = 0; i < d; ++i) {
        lhs *= gamma.denominator() + gamma.numerator();
        rhs *= gamma.denominator();
    }
    return lhs <= rhs;
}

int log_ceil(int n, Rational gamma)
{
    using boost::multiprecision::cpp_int;
    if (gamma <= 0)
        throw Error(ErrorKind::InvalidGamma, "log_ceil: gamma must be positive");
    cpp_int lhs = 1, rhs = n;
    int t = 0;
    while (lhs < rhs) {
        lhs *= gamma.denominator() + gamma.numerator();
        rhs *= gamma.denominator();
        ++t;
    }
    return t;
}

ClusterPartition bfs_cluster_partition(const Graph& g, double gamma)
{
    if (!std::isfinite(gamma) || gamma <= 0 || gamma >= 0.5)
        throw Error(ErrorKind::InvalidGamma, "need 0 < gamma < 1/2, got " + std::to_string(gamma));
    return bfs_cluster_partition(g, to_rational(gamma));
}

ClusterPartition bfs_cluster_partition(const Graph& g, Rational gamma)
{
    if (gamma <= 0 || gamma >= Rational(1, 2))
        throw Error(ErrorKind::InvalidGamma, "need 0 < gamma < 1/2");
    const int n = g.order();
    ClusterPartition part;
    part.gamma = gamma;
    part.cluster_of.assign(static_cast<std::size_t>(n), -1);
    part.distance.assign(static_cast<std::size_t>(n), -1);
    part.parent.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);

    for (Vertex root = 0; root < n; ++root) {
        if (removed[static_cast<std::size_t>(root)])
            continue;
        std::vector<std::vector<Vertex>> levels{{root}};
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::int64_t kept = 1;
        while (true) {
            std::vector<Vertex> nxt;
            for (Vertex u : levels.back())
                for (Vertex w : g.neighbors(u)) {
                    auto wi = static_cast<std::size_t>(w);
                    if (removed[wi] || dist[wi] >= 0)
                        continue;
                    dist[wi] = static_cast<int>(levels.size());
                    parent[wi] = u;
                    nxt.push_back(w);
                }
            // |V_{i+1}| <= gamma * |V_0 .. V_i|
            if (static_cast<std::int64_t>(nxt.size()) * gamma.denominator() <= gamma.numerator() * kept) {
                Cluster c;
                c.center = root;
                c.radius = static_cast<int>(levels.size()) - 1;
                int index = static_cast<int>(part.clusters.size());
                for (const auto& level : levels)
                    for (Vertex u : level) {
                        auto ui = static_cast<std::size_t>(u);
                        c.vertices.push_back(u);
                        removed[ui] = 1;
                        part.cluster_of[ui] = index;
                        part.distance[ui] = dist[ui];
                        part.parent[ui] = parent[ui];
                    }
                for (Vertex u : nxt) {
                    removed[static_cast<std::size_t>(u)] = 1;
                    part.leftover.push_back(u);
                }
                std::sort(c.vertices.begin(), c.vertices.end());
                part.clusters.push_back(std::move(c));
                break;
            }
            kept += static_cast<std::int64_t>(nxt.size());
            levels.push_back(std::move(nxt));
        }
    }
    std::sort(part.leftover.begin(), part.leftover.end());
    return part;
}

OrderedPath tree_path(const ClusterPartition& part, Vertex u)
{
    if (part.cluster_of.at(static_cast<std::size_t>(u)) < 0)
        throw Error(ErrorKind::InvalidArgument, "tree_path: vertex " + std::to_string(u) + " is in no cluster");
    OrderedPath p;
    for (Vertex v = u; v >= 0; v = part.parent[static_cast<std::size_t>(v)])
        p.vertices.push_back(v);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::vector<std::string> partition_violations(const Graph& g, const ClusterPartition& part)
{
    std::vector<std::string> out;
    const int n = g.order();
    if (static_cast<int>(part.cluster_of.size()) != n)
        return {"per-vertex arrays have the wrong size"};
    std::vector<int> owner(static_cast<std::size_t>(n), -2);
    int covered = 0;
    for (std::size_t j = 0; j < part.clusters.size(); ++j) {
        const auto& c = part.clusters[j];
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), c.center))
            out.push_back("cluster " + std::to_string(j) + " misses its center");
        for (Vertex u : c.vertices) {
            auto ui = static_cast<std::size_t>(u);
            if (owner[ui] != -2)
                out.push_back("vertex " + std::to_string(u) + " assigned twice");
            owner[ui] = static_cast<int>(j);
            ++covered;
            if (part.cluster_of[ui] != static_cast<int>(j))
                out.push_back("cluster_of disagrees at " + std::to_string(u));
            // The stored distance must be realised by a tree path inside the cluster.
            auto p = tree_path(part, u);
            if (p.front() != c.center || p.length() != part.distance[ui] || !validate_path(g, p))
                out.push_back("tree path to " + std::to_string(u) + " is not a shortest-path witness");
            for (Vertex v : p.vertices)
                if (part.cluster_of[static_cast<std::size_t>(v)] != static_cast<int>(j))
                    out.push_back("tree path to " + std::to_string(u) + " leaves its cluster");
            if (!within_log_bound(part.distance[ui], n, part.gamma))
                out.push_back("dist(" + std::to_string(c.center) + "," + std::to_string(u) + ")="
                              + std::to_string(part.distance[ui]) + " exceeds log_{1+gamma} n");
        }
    }
    for (Vertex u : part.leftover) {
        auto ui = static_cast<std::size_t>(u);
        if (owner[ui] != -2)
            out.push_back("leftover vertex " + std::to_string(u) + " also clustered");
        owner[ui] = -1;
    }
    for (int v = 0; v < n; ++v)
        if (owner[static_cast<std::size_t>(v)] == -2)
            out.push_back("vertex " + std::to_string(v) + " neither clustered nor leftover");
    // |clusters| >= (1 - gamma) n
    if (Rational(covered) < (Rational(1) - part.gamma) * Rational(n))
        out.push_back("coverage " + std::to_string(covered) + "/" + std::to_string(n) + " below 1 - gamma");
    for (auto [u, v] : g.edges()) {
        int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0 && a != b)
            out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " joins two clusters");
    }
    return out;
}

} // namespace pancyclic
