#include "pancyclic/oracles.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "bitgraph.hpp"
#include "pancyclic/error.hpp"

namespace pancyclic {

using detail::bit;
using detail::lowest;
using detail::Mask;
using detail::popcount;

namespace {

void require_within_cap(const Graph& g, int cap, const char* what)
{
    if (g.order() > cap || g.order() > 64)
        throw Error(ErrorKind::CapExceeded, std::string(what) + ": n=" + std::to_string(g.order())
                                                + " exceeds oracle cap " + std::to_string(std::min(cap, 64)));
}

std::uint64_t saturating_binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(r + 0.5L);
}

// Branch and bound for a maximum clique; the bound is a greedy colouring of
// the candidate set (a clique cover of the complement).
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

    std::vector<Vertex> run(Mask candidates)
    {
        if (candidates)
            expand(candidates);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(Mask p)
    {
        std::array<int, 64> order{};
        std::array<int, 64> color{};
        int count = 0;
        Mask uncolored = p;
        for (int c = 1; uncolored; ++c) {
            Mask q = uncolored;
            while (q) {
                int v = lowest(q);
                q &= ~bit(v) & ~adj_[static_cast<std::size_t>(v)];
                uncolored &= ~bit(v);
                order[static_cast<std::size_t>(count)] = v;
                color[static_cast<std::size_t>(count)] = c;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (current_.size() + static_cast<std::size_t>(color[static_cast<std::size_t>(i)]) <= best_.size())
                return;
            int v = order[static_cast<std::size_t>(i)];
            current_.push_back(v);
            Mask next = p & adj_[static_cast<std::size_t>(v)];
            if (next)
                expand(next);
            else if (current_.size() > best_.size())
                best_ = current_;
            current_.pop_back();
            p &= ~bit(v);
        }
    }

    const std::vector<Mask>& adj_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

// Pruned backtracking for a Hamilton cycle through vertex 0.
class HamiltonSearch {
public:
    HamiltonSearch(const std::vector<Mask>& adj, int n, std::uint64_t budget)
        : adj_(adj), n_(n), all_(detail::low_mask(n)), budget_(budget)
    {
    }

    // nullopt result with exhausted() == false means the budget ran out.
    std::optional<CycleWitness> run()
    {
        path_.assign(1, 0);
        visited_ = bit(0);
        bool found = extend(0);
        if (found)
            return CycleWitness{path_};
        return std::nullopt;
    }

    bool exhausted() const noexcept { return !aborted_; }

private:
    bool extend(int v)
    {
        if (aborted_ || ++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        if (static_cast<int>(path_.size()) == n_)
            return (adj_[static_cast<std::size_t>(v)] & bit(0)) != 0;
        Mask unvisited = all_ & ~visited_;
        Mask usable = unvisited | bit(v) | bit(0);
        for (Mask r = unvisited; r; r &= r - 1) {
            int u = lowest(r);
            if (popcount(adj_[static_cast<std::size_t>(u)] & usable & ~bit(u)) < 2)
                return false;
        }
        // Unvisited vertices must stay reachable from the current end.
        Mask seen = bit(v);
        Mask frontier = bit(v);
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj_[static_cast<std::size_t>(lowest(f))];
            next &= unvisited & ~seen;
            seen |= next;
            frontier = next;
        }
        if ((seen & unvisited) != unvisited)
            return false;

        std::array<int, 64> order{};
        int count = 0;
        for (Mask c = adj_[static_cast<std::size_t>(v)] & unvisited; c; c &= c - 1)
            order[static_cast<std::size_t>(count++)] = lowest(c);
        std::stable_sort(order.begin(), order.begin() + count, [&](int a, int b) {
            return popcount(adj_[static_cast<std::size_t>(a)] & unvisited)
                 < popcount(adj_[static_cast<std::size_t>(b)] & unvisited);
        });
        for (int i = 0; i < count; ++i) {
            int w = order[static_cast<std::size_t>(i)];
            visited_ |= bit(w);
            path_.push_back(w);
            if (extend(w))
                return true;
            path_.pop_back();
            visited_ &= ~bit(w);
            if (aborted_)
                return false;
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    Mask all_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    Mask visited_ = 0;
    std::vector<Vertex> path_;
};

std::vector<std::optional<CycleWitness>> dp_cycles(const Graph& g, const OracleConfig& cfg)
{
    return cfg.parallel ? kernels::parallel::subset_dp_cycles(g) : kernels::serial::subset_dp_cycles(g);
}

bool dp_allowed(const Graph& g, const OracleConfig& cfg)
{
    return g.order() <= std::min(cfg.subset_dp_cap, 30);
}

} // namespace

std::vector<Vertex> maximum_clique(const Graph& g, const OracleConfig& cfg)
{
    require_within_cap(g, cfg.oracle_cap, "maximum_clique");
    auto adj = detail::adjacency_masks(g);
    return CliqueSearch(adj).run(detail::low_mask(g.order()));
}

IndependentSet independence_number(const Graph& g, const OracleConfig& cfg)
{
    require_within_cap(g, cfg.oracle_cap, "independence_number");
    const int n = g.order();
    auto adj = detail::adjacency_masks(g);
    std::vector<Mask> complement(adj.size());
    for (int v = 0; v < n; ++v)
        complement[static_cast<std::size_t>(v)] = detail::low_mask(n) & ~adj[static_cast<std::size_t>(v)] & ~bit(v);
    auto set = CliqueSearch(complement).run(detail::low_mask(n));
    return IndependentSet{static_cast<int>(set.size()), std::move(set)};
}

std::optional<CycleWitness> hamilton_cycle(const Graph& g, const OracleConfig& cfg)
{
    require_within_cap(g, cfg.oracle_cap, "hamilton_cycle");
    const int n = g.order();
    if (n < 3)
        return std::nullopt;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            return std::nullopt;
    auto adj = detail::adjacency_masks(g);
    auto reach = detail::distances_within(adj, 0, detail::low_mask(n));
    if (std::ranges::any_of(reach, [](int d) { return d < 0; }))
        return std::nullopt;

    HamiltonSearch search(adj, n, cfg.dfs_node_budget);
    auto found = search.run();
    if (found || search.exhausted())
        return found;
    if (dp_allowed(g, cfg))
        return dp_cycles(g, cfg)[static_cast<std::size_t>(n)];
    throw Error(ErrorKind::BudgetExceeded, "hamilton_cycle: search budget exhausted at n=" + std::to_string(n));
}

std::optional<CycleWitness> cycle_of_length(const Graph& g, int ell, const OracleConfig& cfg, CycleSearch method)
{
    const int n = g.order();
    if (ell < 3 || ell > n)
        throw Error(ErrorKind::InvalidArgument, "cycle_of_length: need 3 <= ell <= n, got ell=" + std::to_string(ell));
    require_within_cap(g, cfg.oracle_cap, "cycle_of_length");

    auto run_dfs = [&] {
        return cfg.parallel ? kernels::parallel::dfs_cycle(g, ell, cfg.dfs_node_budget)
                            : kernels::serial::dfs_cycle(g, ell, cfg.dfs_node_budget);
    };
    auto run_subsets = [&] {
        return cfg.parallel ? kernels::parallel::subset_cycle(g, ell, cfg.subset_budget)
                            : kernels::serial::subset_cycle(g, ell, cfg.subset_budget);
    };
    auto undecided = [&](const char* how) {
        return Error(ErrorKind::BudgetExceeded,
                     std::string("cycle_of_length: ") + how + " undecided for ell=" + std::to_string(ell) + ", n=" + std::to_string(n));
    };

    switch (method) {
    case CycleSearch::PathDfs: {
        auto r = run_dfs();
        if (!r.exhausted)
            throw undecided("path DFS");
        return r.witness;
    }
    case CycleSearch::SubsetEnumeration: {
        auto r = run_subsets();
        if (!r.exhausted)
            throw undecided("subset enumeration");
        return r.witness;
    }
    case CycleSearch::SubsetDp:
        if (!dp_allowed(g, cfg))
            throw undecided("subset DP over cap");
        return dp_cycles(g, cfg)[static_cast<std::size_t>(ell)];
    case CycleSearch::Auto:
        break;
    }

    auto r = run_dfs();
    if (r.exhausted)
        return r.witness;
    if (saturating_binomial(n, ell) <= cfg.subset_budget) {
        auto s = run_subsets();
        if (s.exhausted)
            return s.witness;
    }
    if (dp_allowed(g, cfg))
        return dp_cycles(g, cfg)[static_cast<std::size_t>(ell)];
    throw undecided("all strategies");
}

SpectrumReport cycle_spectrum(const Graph& g, const OracleConfig& cfg)
{
    const int n = g.order();
    require_within_cap(g, cfg.oracle_cap, "cycle_spectrum");
    if (n > cfg.spectrum_cap)
        throw Error(ErrorKind::CapExceeded, "cycle_spectrum: n=" + std::to_string(n) + " exceeds spectrum cap "
                                                + std::to_string(cfg.spectrum_cap));
    SpectrumReport report(n);
    if (n < 3)
        return report;
    if (dp_allowed(g, cfg)) {
        auto cycles = dp_cycles(g, cfg);
        for (int ell = 3; ell <= n; ++ell) {
            if (auto& c = cycles[static_cast<std::size_t>(ell)])
                report.record_witness(*c, "cycle_spectrum/subset_dp", Provenance::Oracle);
            else
                report.record_absent(ell, "cycle_spectrum/subset_dp");
        }
        return report;
    }
    for (int ell = 3; ell <= n; ++ell) {
        try {
            if (auto c = cycle_of_length(g, ell, cfg))
                report.record_witness(*c, "cycle_spectrum/cycle_of_length", Provenance::Oracle);
            else
                report.record_absent(ell, "cycle_spectrum/cycle_of_length");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
            report.record_unknown(ell, "cycle_spectrum/cycle_of_length", e.what());
        }
    }
    return report;
}

std::vector<int> path_length_set(const Graph& g, Vertex x, Vertex y, const OracleConfig& cfg)
{
    const int n = g.order();
    if (!g.contains(x) || !g.contains(y))
        throw Error(ErrorKind::InvalidArgument, "path_length_set: endpoint out of range");
    if (x == y)
        return {0};
    if (!dp_allowed(g, cfg))
        throw Error(ErrorKind::BudgetExceeded, "path_length_set: n=" + std::to_string(n) + " exceeds subset DP cap "
                                                   + std::to_string(cfg.subset_dp_cap));
    auto adj = detail::adjacency_masks(g);
    // Relabel so that x becomes vertex 0 and only masks containing it are visited.
    auto swap_label = [&](int v) { return v == x ? 0 : (v == 0 ? x : v); };
    std::vector<std::uint32_t> local(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (Mask r = adj[static_cast<std::size_t>(v)]; r; r &= r - 1)
            local[static_cast<std::size_t>(swap_label(v))] |= std::uint32_t{1} << swap_label(lowest(r));
    const int target = swap_label(y);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    ends[1] = 1;
    for (std::uint32_t mask = 3; mask <= full; mask += 2) {
        std::uint32_t e = 0;
        for (std::uint32_t r = mask & ~std::uint32_t{1}; r; r &= r - 1) {
            int v = std::countr_zero(r);
            if (ends[mask ^ (std::uint32_t{1} << v)] & local[static_cast<std::size_t>(v)])
                e |= std::uint32_t{1} << v;
        }
        ends[mask] = e;
        if (e & (std::uint32_t{1} << target))
            seen[static_cast<std::size_t>(std::popcount(mask) - 1)] = 1;
    }
    std::vector<int> lengths;
    for (int ell = 1; ell < n; ++ell)
        if (seen[static_cast<std::size_t>(ell)])
            lengths.push_back(ell);
    return lengths;
}

} // namespace pancyclic
