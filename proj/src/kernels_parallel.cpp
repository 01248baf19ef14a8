#include <algorithm>
#include <atomic>
#include <limits>
#include <vector>

#include <omp.h>

#include "bitgraph.hpp"
#include "pancyclic/oracles.hpp"

// OpenMP versions of the serial reference kernels. Whenever the work budget
// is not reached they return exactly the serial witness: each kernel splits
// the search into tasks ordered like the serial sweep and keeps the lowest
// task that succeeded. Near the budget a lower task may be cut off before
// finishing, so the parallel kernel can then return a later (equally valid)
// witness or report the search undecided where the serial one would not.

namespace pancyclic::kernels::parallel {

using detail::FlushResult;

namespace {

void atomic_min(std::atomic<int>& target, int value)
{
    int cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

} // namespace

SearchOutcome dfs_cycle(const Graph& g, int ell, std::uint64_t node_budget)
{
    const int n = g.order();
    const int starts = std::max(0, n - ell + 1);
    auto adj = detail::adjacency_masks(g);
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::vector<std::optional<CycleWitness>> found(static_cast<std::size_t>(starts));

#pragma omp parallel for schedule(dynamic, 1)
    for (int start = 0; start < starts; ++start) {
        if (start > best.load() || budget_hit.load())
            continue;
        auto flush = [&](std::uint64_t w) {
            if (total.fetch_add(w) + w > node_budget) {
                budget_hit.store(true);
                return FlushResult::BudgetExhausted;
            }
            return best.load() < start ? FlushResult::Cancelled : FlushResult::Continue;
        };
        auto r = detail::dfs_from_start(adj, n, ell, start, flush);
        if (r.witness) {
            found[static_cast<std::size_t>(start)] = std::move(r.witness);
            atomic_min(best, start);
        }
    }

    SearchOutcome out;
    out.work = total.load();
    if (best.load() < starts) {
        out.witness = std::move(found[static_cast<std::size_t>(best.load())]);
        out.exhausted = true;
    } else {
        out.exhausted = !budget_hit.load();
    }
    return out;
}

SearchOutcome subset_cycle(const Graph& g, int ell, std::uint64_t subset_budget)
{
    const int n = g.order();
    auto adj = detail::adjacency_masks(g);
    std::vector<std::pair<int, int>> tasks;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (n - b - 1 >= ell - 2)
                tasks.emplace_back(a, b);
    const int task_count = static_cast<int>(tasks.size());

    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> budget_hit{false};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::vector<std::optional<CycleWitness>> found(tasks.size());

#pragma omp parallel
    {
        std::vector<int> buffer(static_cast<std::size_t>(ell));
#pragma omp for schedule(dynamic, 1)
        for (int t = 0; t < task_count; ++t) {
            if (t > best.load() || budget_hit.load())
                continue;
            buffer[0] = tasks[static_cast<std::size_t>(t)].first;
            buffer[1] = tasks[static_cast<std::size_t>(t)].second;
            std::uint64_t local = 0;
            detail::for_each_combination(n, buffer[1] + 1, ell - 2, buffer.data(), 2, [&] {
                if ((++local & 1023) == 0) {
                    if (total.fetch_add(1024) + 1024 > subset_budget) {
                        budget_hit.store(true);
                        return true;
                    }
                    if (best.load() < t)
                        return true;
                }
                if (!detail::min_degree_two(adj, buffer.data(), ell))
                    return false;
                auto c = detail::induced_hamilton_cycle(adj, buffer.data(), ell);
                if (!c)
                    return false;
                found[static_cast<std::size_t>(t)] = std::move(c);
                atomic_min(best, t);
                return true;
            });
            total.fetch_add(local & 1023);
        }
    }

    SearchOutcome out;
    out.work = total.load();
    if (best.load() < task_count) {
        out.witness = std::move(found[static_cast<std::size_t>(best.load())]);
        out.exhausted = true;
    } else {
        out.exhausted = !budget_hit.load();
    }
    return out;
}

std::vector<std::optional<CycleWitness>> subset_dp_cycles(const Graph& g)
{
    const int n = g.order();
    std::vector<std::optional<CycleWitness>> result(static_cast<std::size_t>(n) + 1);
    if (n == 0)
        return result;
    auto adj = detail::adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    // Bucket masks by popcount; level L depends only on level L - 1.
    std::vector<std::uint32_t> offset(static_cast<std::size_t>(n) + 2, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        ++offset[static_cast<std::size_t>(std::popcount(mask)) + 1];
    for (std::size_t L = 1; L < offset.size(); ++L)
        offset[L] += offset[L - 1];
    std::vector<std::uint32_t> by_level(full);
    {
        auto cursor = offset;
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            by_level[cursor[static_cast<std::size_t>(std::popcount(mask))]++] = mask;
    }

    std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
    for (int L = 1; L <= n; ++L) {
        const auto lo = static_cast<std::int64_t>(offset[static_cast<std::size_t>(L)]);
        const auto hi = static_cast<std::int64_t>(offset[static_cast<std::size_t>(L) + 1]);
        std::uint32_t first = std::numeric_limits<std::uint32_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
        for (std::int64_t i = lo; i < hi; ++i) {
            std::uint32_t mask = by_level[static_cast<std::size_t>(i)];
            detail::dp_step(adj, ends, mask);
            if (L >= 3 && mask < first && detail::closes_cycle(adj, ends, mask))
                first = mask;
        }
        if (first != std::numeric_limits<std::uint32_t>::max())
            result[static_cast<std::size_t>(L)] = detail::reconstruct_cycle(adj, ends, first);
    }
    return result;
}

} // namespace pancyclic::kernels::parallel
