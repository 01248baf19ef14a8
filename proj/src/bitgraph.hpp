#pragma once

// Bitmask helpers shared by the serial and OpenMP oracle kernels. Internal.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Requires g.order() <= 64.
std::vector<Mask> adjacency_masks(const Graph& g);

// BFS distances from `source` inside the vertex set `allowed`; -1 if unreachable.
std::vector<int> distances_within(const std::vector<Mask>& adj, int source, Mask allowed);

enum class FlushResult { Continue, BudgetExhausted, Cancelled };

struct DfsStartResult {
    std::optional<CycleWitness> witness;
    FlushResult stop = FlushResult::Continue;
};

// Depth-first search for a cycle of length ell whose minimum vertex is
// `start`. Work is reported to `flush` in batches; the search stops as soon
// as flush returns something other than Continue.
template <typename Flush>
DfsStartResult dfs_from_start(const std::vector<Mask>& adj, int n, int ell, int start, Flush&& flush)
{
    constexpr std::uint64_t batch = 4096;
    DfsStartResult result;
    Mask allowed = low_mask(n) & ~low_mask(start);
    auto dist = distances_within(adj, start, allowed);

    std::vector<int> path(static_cast<std::size_t>(ell));
    std::vector<Mask> pending(static_cast<std::size_t>(ell), 0);
    path[0] = start;
    Mask visited = bit(start);
    std::uint64_t local = 0;

    auto candidates = [&](int depth) {
        // Next vertex at index `depth`; afterwards ell - depth edges remain.
        int v = path[static_cast<std::size_t>(depth - 1)];
        Mask c = adj[static_cast<std::size_t>(v)] & allowed & ~visited;
        Mask out = 0;
        for (Mask rest = c; rest; rest &= rest - 1) {
            int w = lowest(rest);
            int d = dist[static_cast<std::size_t>(w)];
            if (d < 0 || d > ell - depth)
                continue;
            if (depth == ell - 1 && (!(adj[static_cast<std::size_t>(w)] & bit(start)) || w < path[1]))
                continue;
            out |= bit(w);
        }
        return out;
    };

    int depth = 1;
    pending[1] = ell > 1 ? candidates(1) : 0;
    while (depth >= 1) {
        if (++local == batch) {
            result.stop = flush(local);
            local = 0;
            if (result.stop != FlushResult::Continue)
                return result;
        }
        Mask& options = pending[static_cast<std::size_t>(depth)];
        if (!options) {
            --depth;
            if (depth >= 1)
                visited &= ~bit(path[static_cast<std::size_t>(depth)]);
            continue;
        }
        int w = lowest(options);
        options &= options - 1;
        path[static_cast<std::size_t>(depth)] = w;
        if (depth == ell - 1) {
            result.witness = CycleWitness{path};
            break;
        }
        visited |= bit(w);
        ++depth;
        pending[static_cast<std::size_t>(depth)] = candidates(depth);
    }
    result.stop = flush(local);
    if (result.witness && result.stop == FlushResult::BudgetExhausted)
        result.stop = FlushResult::Continue;
    return result;
}

// Hamilton cycle of the subgraph induced by members[0..count) (ascending),
// starting at members[0], or nullopt.
std::optional<CycleWitness> induced_hamilton_cycle(const std::vector<Mask>& adj, const int* members, int count);

// True if every member has at least two neighbours among the members.
bool min_degree_two(const std::vector<Mask>& adj, const int* members, int count);

// Visits, in lexicographic order, every `count`-subset of {from, ..., n-1},
// written to buffer[offset..offset+count). Stops early when visit returns true.
template <typename Visit>
bool for_each_combination(int n, int from, int count, int* buffer, int offset, Visit&& visit)
{
    if (count == 0)
        return visit();
    if (n - from < count)
        return false;
    std::vector<int> idx(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        idx[static_cast<std::size_t>(i)] = from + i;
    while (true) {
        for (int i = 0; i < count; ++i)
            buffer[offset + i] = idx[static_cast<std::size_t>(i)];
        if (visit())
            return true;
        int i = count - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - count + i)
            --i;
        if (i < 0)
            return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < count; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// All-subsets DP. ends[mask] holds the vertices v such that a path starting
// at the minimum vertex of mask visits exactly mask and ends at v.
void dp_step(const std::vector<Mask>& adj, std::vector<std::uint32_t>& ends, std::uint32_t mask);
bool closes_cycle(const std::vector<Mask>& adj, const std::vector<std::uint32_t>& ends, std::uint32_t mask);
CycleWitness reconstruct_cycle(const std::vector<Mask>& adj, const std::vector<std::uint32_t>& ends, std::uint32_t mask);

} // namespace pancyclic::detail
