#include "bitgraph.hpp"

#include <algorithm>

namespace pancyclic::detail {

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u))
            adj[static_cast<std::size_t>(u)] |= bit(v);
    return adj;
}

std::vector<int> distances_within(const std::vector<Mask>& adj, int source, Mask allowed)
{
    std::vector<int> dist(adj.size(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    Mask frontier = bit(source);
    Mask seen = frontier;
    for (int d = 1; frontier; ++d) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= adj[static_cast<std::size_t>(lowest(f))];
        next &= allowed & ~seen;
        for (Mask r = next; r; r &= r - 1)
            dist[static_cast<std::size_t>(lowest(r))] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

bool min_degree_two(const std::vector<Mask>& adj, const int* members, int count)
{
    Mask set = 0;
    for (int i = 0; i < count; ++i)
        set |= bit(members[i]);
    for (int i = 0; i < count; ++i)
        if (popcount(adj[static_cast<std::size_t>(members[i])] & set) < 2)
            return false;
    return true;
}

std::optional<CycleWitness> induced_hamilton_cycle(const std::vector<Mask>& adj, const int* members, int count)
{
    if (count < 3)
        return std::nullopt;
    std::vector<std::uint32_t> local(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (adj[static_cast<std::size_t>(members[i])] & bit(members[j]))
                local[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    thread_local std::vector<std::uint32_t> ends;
    const std::uint32_t full = (std::uint32_t{1} << count) - 1;
    ends.assign(std::size_t{full} + 1, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 3; mask <= full; mask += 2) {
        std::uint32_t e = 0;
        for (std::uint32_t rest = mask & ~std::uint32_t{1}; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (ends[mask ^ (std::uint32_t{1} << v)] & local[static_cast<std::size_t>(v)])
                e |= std::uint32_t{1} << v;
        }
        ends[mask] = e;
    }
    std::uint32_t closing = ends[full] & local[0];
    if (!closing)
        return std::nullopt;

    std::vector<Vertex> seq;
    int v = std::countr_zero(closing);
    std::uint32_t mask = full;
    while (mask != 1) {
        seq.push_back(members[v]);
        std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
        v = std::countr_zero(ends[prev] & local[static_cast<std::size_t>(v)]);
        mask = prev;
    }
    seq.push_back(members[0]);
    std::reverse(seq.begin(), seq.end());
    return CycleWitness{std::move(seq)};
}

void dp_step(const std::vector<Mask>& adj, std::vector<std::uint32_t>& ends, std::uint32_t mask)
{
    int s = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(std::uint32_t{1} << s);
    if (!rest) {
        ends[mask] = mask;
        return;
    }
    std::uint32_t e = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) {
        int v = std::countr_zero(r);
        if (ends[mask ^ (std::uint32_t{1} << v)] & static_cast<std::uint32_t>(adj[static_cast<std::size_t>(v)]))
            e |= std::uint32_t{1} << v;
    }
    ends[mask] = e;
}

bool closes_cycle(const std::vector<Mask>& adj, const std::vector<std::uint32_t>& ends, std::uint32_t mask)
{
    if (std::popcount(mask) < 3)
        return false;
    int s = std::countr_zero(mask);
    return (ends[mask] & static_cast<std::uint32_t>(adj[static_cast<std::size_t>(s)])) != 0;
}

CycleWitness reconstruct_cycle(const std::vector<Mask>& adj, const std::vector<std::uint32_t>& ends, std::uint32_t mask)
{
    int s = std::countr_zero(mask);
    int v = std::countr_zero(ends[mask] & static_cast<std::uint32_t>(adj[static_cast<std::size_t>(s)]));
    std::vector<Vertex> seq;
    while (std::popcount(mask) > 1) {
        seq.push_back(v);
        std::uint32_t prev = mask ^ (std::uint32_t{1} << v);
        v = std::countr_zero(ends[prev] & static_cast<std::uint32_t>(adj[static_cast<std::size_t>(v)]));
        mask = prev;
    }
    seq.push_back(s);
    std::reverse(seq.begin(), seq.end());
    return CycleWitness{std::move(seq)};
}

} // namespace pancyclic::detail
