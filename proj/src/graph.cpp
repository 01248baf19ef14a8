#include "pancyclic/graph.hpp"

#include <algorithm>
#include <string>

#include "pancyclic/error.hpp"

namespace pancyclic {

namespace {

void check_endpoint(int n, Vertex v)
{
    if (v < 0 || v >= n)
        throw Error(ErrorKind::InvalidGraph, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

} // namespace

Graph::Graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidGraph, "negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        check_endpoint(n, u);
        check_endpoint(n, v);
        if (u == v)
            throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw Error(ErrorKind::InvalidGraph, "repeated edge");
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

Graph Graph::complete(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::cycle(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u)
        e.emplace_back(u, u + 1);
    if (n >= 3)
        e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph Graph::path(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u)
        e.emplace_back(u, u + 1);
    return Graph(n, e);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (!contains(u) || !contains(v))
        return false;
    const auto& a = adjacency_[static_cast<std::size_t>(u)];
    const auto& b = adjacency_[static_cast<std::size_t>(v)];
    return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v) : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = u + 1; v < order(); ++v)
            if (!has_edge(u, v))
                e.emplace_back(u, v);
    return Graph(order(), e);
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    auto e = edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(order(), e);
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> index(adjacency_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_endpoint(order(), vertices[i]);
        if (index[static_cast<std::size_t>(vertices[i])] != -1)
            throw Error(ErrorKind::InvalidArgument, "induced: repeated vertex");
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                e.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(vertices.size()), e);
}

Digraph::Digraph(int n, std::span<const Edge> arcs, bool allow_antiparallel)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidGraph, "negative vertex count");
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : arcs) {
        check_endpoint(n, u);
        check_endpoint(n, v);
        if (u == v)
            throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (Vertex u = 0; u < n; ++u) {
        auto& o = out_[static_cast<std::size_t>(u)];
        std::sort(o.begin(), o.end());
        if (std::adjacent_find(o.begin(), o.end()) != o.end())
            throw Error(ErrorKind::InvalidGraph, "repeated arc");
        std::sort(in_[static_cast<std::size_t>(u)].begin(), in_[static_cast<std::size_t>(u)].end());
        arc_count_ += o.size();
    }
    if (!allow_antiparallel)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : out_[static_cast<std::size_t>(u)])
                if (has_arc(v, u))
                    throw Error(ErrorKind::InvalidGraph, "anti-parallel arcs between " + std::to_string(u) + " and " + std::to_string(v));
}

Digraph Digraph::orient_by_label(const Graph& g)
{
    auto e = g.edges();
    return Digraph(g.order(), e);
}

bool Digraph::has_arc(Vertex from, Vertex to) const
{
    if (from < 0 || from >= order() || to < 0 || to >= order())
        return false;
    const auto& o = out_[static_cast<std::size_t>(from)];
    return std::binary_search(o.begin(), o.end(), to);
}

std::vector<Edge> Digraph::arcs() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : out_neighbors(u))
            out.emplace_back(u, v);
    return out;
}

Graph Digraph::underlying() const
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : out_neighbors(u))
            if (u < v || !has_arc(v, u))
                e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(order(), e);
}

OrderedPath OrderedPath::reversed() const
{
    return OrderedPath{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

namespace {

bool distinct_in_range(int n, std::span<const Vertex> vs)
{
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : vs) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

} // namespace

bool validate_path(const Graph& g, const OrderedPath& p)
{
    if (p.vertices.empty() || !distinct_in_range(g.order(), p.vertices))
        return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!g.has_edge(p.vertices[i], p.vertices[i + 1]))
            return false;
    return true;
}

bool validate_cycle(const Graph& g, const CycleWitness& c)
{
    if (c.vertices.size() < 3 || !distinct_in_range(g.order(), c.vertices))
        return false;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]))
            return false;
    return true;
}

bool validate_directed_path(const Digraph& d, const OrderedPath& p)
{
    if (p.vertices.empty() || !distinct_in_range(d.order(), p.vertices))
        return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!d.has_arc(p.vertices[i], p.vertices[i + 1]))
            return false;
    return true;
}

OrderedPath open_cycle(const CycleWitness& c) { return OrderedPath{c.vertices}; }

CycleWitness rotate_to(const CycleWitness& c, Vertex start)
{
    auto it = std::find(c.vertices.begin(), c.vertices.end(), start);
    if (it == c.vertices.end())
        throw Error(ErrorKind::InvalidArgument, "rotate_to: vertex not on cycle");
    CycleWitness out{c.vertices};
    std::rotate(out.vertices.begin(), out.vertices.begin() + (it - c.vertices.begin()), out.vertices.end());
    return out;
}

} // namespace pancyclic
