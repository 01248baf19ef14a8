#include <vector>

#include "bitgraph.hpp"
#include "pancyclic/oracles.hpp"

namespace pancyclic::kernels::serial {

using detail::FlushResult;

SearchOutcome dfs_cycle(const Graph& g, int ell, std::uint64_t node_budget)
{
    SearchOutcome out;
    const int n = g.order();
    auto adj = detail::adjacency_masks(g);
    for (int start = 0; start + ell <= n; ++start) {
        auto flush = [&](std::uint64_t w) {
            out.work += w;
            return out.work > node_budget ? FlushResult::BudgetExhausted : FlushResult::Continue;
        };
        auto r = detail::dfs_from_start(adj, n, ell, start, flush);
        if (r.witness) {
            out.witness = std::move(r.witness);
            out.exhausted = true;
            return out;
        }
        if (r.stop == FlushResult::BudgetExhausted)
            return out;
    }
    out.exhausted = true;
    return out;
}

SearchOutcome subset_cycle(const Graph& g, int ell, std::uint64_t subset_budget)
{
    SearchOutcome out;
    const int n = g.order();
    auto adj = detail::adjacency_masks(g);
    std::vector<int> buffer(static_cast<std::size_t>(ell));
    bool aborted = false;
    detail::for_each_combination(n, 0, ell, buffer.data(), 0, [&] {
        if (++out.work > subset_budget) {
            aborted = true;
            return true;
        }
        if (!detail::min_degree_two(adj, buffer.data(), ell))
            return false;
        out.witness = detail::induced_hamilton_cycle(adj, buffer.data(), ell);
        return out.witness.has_value();
    });
    out.exhausted = !aborted;
    return out;
}

std::vector<std::optional<CycleWitness>> subset_dp_cycles(const Graph& g)
{
    const int n = g.order();
    std::vector<std::optional<CycleWitness>> result(static_cast<std::size_t>(n) + 1);
    if (n == 0)
        return result;
    auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
        detail::dp_step(adj, ends, mask);
        auto ell = static_cast<std::size_t>(std::popcount(mask));
        if (!result[ell] && detail::closes_cycle(adj, ends, mask))
            result[ell] = detail::reconstruct_cycle(adj, ends, mask);
    }
    return result;
}

} // namespace pancyclic::kernels::serial
