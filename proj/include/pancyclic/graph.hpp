#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pancyclic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on labels 0..n-1 with sorted adjacency sets.
// Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Throws Error(InvalidGraph) on loops, out-of-range endpoints or repeated edges.
    Graph(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph empty(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;
    Graph with_edge(Vertex u, Vertex v) const;

    // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Loopless digraph; by default at most one arc per unordered pair.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::span<const Edge> arcs, bool allow_antiparallel = false);

    // Orients every edge of g from the lower to the higher label.
    static Digraph orient_by_label(const Graph& g);

    int order() const noexcept { return static_cast<int>(out_.size()); }
    std::size_t arc_count() const noexcept { return arc_count_; }
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    bool has_arc(Vertex from, Vertex to) const;
    std::vector<Edge> arcs() const;
    Graph underlying() const;

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

// Sequence of distinct vertices; length counts edges.
struct OrderedPath {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    OrderedPath reversed() const;

    friend bool operator==(const OrderedPath&, const OrderedPath&) = default;
};

// Cyclic vertex sequence; length equals the number of vertices.
struct CycleWitness {
    std::vector<Vertex> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

bool validate_path(const Graph& g, const OrderedPath& p);
bool validate_cycle(const Graph& g, const CycleWitness& c);
bool validate_directed_path(const Digraph& d, const OrderedPath& p);

// Breaks the cycle open at the edge (last, first): the result runs from
// c.vertices[0] to c.vertices.back().
OrderedPath open_cycle(const CycleWitness& c);

// Rotates so that `start` is first. Precondition: start lies on the cycle.
CycleWitness rotate_to(const CycleWitness& c, Vertex start);

} // namespace pancyclic
