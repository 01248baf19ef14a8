#include "pancyclic/generators.hpp"

#include <numeric>
#include <string>

#include "pancyclic/error.hpp"

namespace pancyclic {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Fixed arithmetic on raw engine output so the stream is the same on every
// standard library.
struct Stream {
    std::uint64_t state;

    std::uint64_t next()
    {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

} // namespace

ExtremalSpec extremal_spec(int k)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidK, "extremal construction needs k >= 2, got " + std::to_string(k));
    ExtremalSpec s;
    s.k = k;
    s.clique_size = 2 * k - 2;
    s.n = k * s.clique_size;
    for (int i = 0; i < k; ++i) {
        s.a.push_back(i * s.clique_size);
        s.b.push_back(i * s.clique_size + 1);
    }
    return s;
}

Graph gen_extremal(int k)
{
    auto s = extremal_spec(k);
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const int base = i * s.clique_size;
        for (int u = 0; u < s.clique_size; ++u)
            for (int v = u + 1; v < s.clique_size; ++v)
                edges.emplace_back(base + u, base + v);
    }
    for (int i = 0; i < k; ++i) {
        Vertex u = s.a[idx(i)], v = s.b[idx((i + 1) % k)];
        if (u > v)
            std::swap(u, v);
        // k = 2: a_0 b_1 and a_1 b_0 are distinct pairs, so no repeats
        edges.emplace_back(u, v);
    }
    return Graph(s.n, edges);
}

std::map<int, CycleWitness> extremal_witnesses(int k)
{
    auto s = extremal_spec(k);
    std::map<int, CycleWitness> out;
    for (int ell = 3; ell <= s.clique_size; ++ell) {
        CycleWitness c;
        for (int v = 0; v < ell; ++v)
            c.vertices.push_back(v);
        out.emplace(ell, std::move(c));
    }
    // k connectors plus a b_i -> a_i path of length len_i in [1, 2k-3] per
    // clique: k + sum(len_i) edges.
    const int max_len = s.clique_size - 1;
    for (int total = 2 * k; total <= s.n; ++total) {
        int extra = total - 2 * k; // distributed over the cliques, at most max_len - 1 each
        CycleWitness c;
        for (int j = 0; j < k; ++j) {
            // visit clique i = (j + 1) % k ... k-1, 0 ... entering at b_i
            int i = (j + 1) % k;
            int len = 1 + std::min(extra, max_len - 1);
            extra -= len - 1;
            const int base = i * s.clique_size;
            c.vertices.push_back(s.b[idx(i)]);
            for (int t = 0; t < len - 1; ++t)
                c.vertices.push_back(base + 2 + t);
            c.vertices.push_back(s.a[idx(i)]);
        }
        out.emplace(total, std::move(c));
    }
    return out;
}

RandomInstance gen_random_bounded_alpha(const GeneratorConfig& cfg, const OracleConfig& oracle)
{
    if (cfg.n < 3)
        throw Error(ErrorKind::InvalidArgument, "need n >= 3, got " + std::to_string(cfg.n));
    if (cfg.k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(cfg.k));
    const int n = cfg.n;
    Stream rng{cfg.seed};

    std::vector<Vertex> perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[idx(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    std::vector<std::vector<char>> adj(idx(n), std::vector<char>(idx(n), 0));
    auto link = [&](Vertex u, Vertex v) { adj[idx(u)][idx(v)] = adj[idx(v)][idx(u)] = 1; };
    for (int i = 0; i < n; ++i)
        link(perm[idx(i)], perm[idx((i + 1) % n)]);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adj[idx(u)][idx(v)] && rng.chance(cfg.density))
                link(u, v);

    auto build = [&] {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[idx(u)][idx(v)])
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    };

    for (int round = 0; round < cfg.max_attempts; ++round) {
        Graph g = build();
        auto is = independence_number(g, oracle);
        if (is.size <= cfg.k)
            return {std::move(g), CycleWitness{perm}, std::move(is)};
        // Break the witness set with one random edge inside it.
        const auto& w = is.vertices;
        auto i = rng.below(w.size());
        auto j = rng.below(w.size() - 1);
        if (j >= i)
            ++j;
        link(w[i], w[j]);
    }
    throw Error(ErrorKind::Infeasible, "alpha still above " + std::to_string(cfg.k) + " after "
                                           + std::to_string(cfg.max_attempts) + " oracle rounds");
}

} // namespace pancyclic
