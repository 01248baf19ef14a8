#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "reference.hpp"

#include "pancyclic/oracles.hpp"
#include "pancyclic/shortening.hpp"

using namespace pancyclic;

namespace {

OrderedPath identity_path(int n)
{
    OrderedPath p;
    for (int i = 0; i < n; ++i)
        p.vertices.push_back(i);
    return p;
}

Graph chained_cliques(int k)
{
    int s = 2 * k - 2;
    std::vector<Edge> e;
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                e.emplace_back(c * s + i, c * s + j);
        int a = c * s, b_next = ((c + 1) % k) * s + 1;
        e.emplace_back(std::min(a, b_next), std::max(a, b_next));
    }
    return Graph(k * s, e);
}

bool subset_of(const OrderedPath& small, const OrderedPath& big)
{
    std::set<Vertex> b(big.vertices.begin(), big.vertices.end());
    return std::all_of(small.vertices.begin(), small.vertices.end(), [&](Vertex v) { return b.count(v) == 1; });
}

// Dense random Hamiltonian graph, its planted cycle opened into a path.
std::pair<Graph, OrderedPath> random_instance(std::mt19937_64& rng, int n, double p)
{
    std::vector<Vertex> cycle;
    auto g = ref::random_hamiltonian(n, p, rng, &cycle);
    return {g, OrderedPath{cycle}};
}

} // namespace

TEST_CASE("easy_jump examples")
{
    auto k5 = Graph::complete(5);
    auto p = easy_jump(k5, identity_path(5), 1);
    CHECK(validate_path(k5, p));
    CHECK(p.front() == 0);
    CHECK(p.back() == 4);
    CHECK(p.length() >= 2);
    CHECK(p.length() <= 3);

    auto g = chained_cliques(3);
    auto h = hamilton_cycle(g);
    REQUIRE(h);
    auto hp = open_cycle(*h);
    auto q = easy_jump(g, hp, 3);
    CHECK(validate_path(g, q));
    CHECK(q.length() >= hp.length() - 6);
    CHECK(q.length() <= hp.length() - 1);
    CHECK(subset_of(q, hp));

    try {
        easy_jump(Graph::path(6), identity_path(6), 2);
        FAIL("expected NoChordFound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoChordFound);
    }
    try {
        easy_jump(k5, identity_path(5), 2);
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
    }
}

TEST_CASE("easy_jump never misses a chord when alpha <= k")
{
    std::mt19937_64 rng(55);
    int runs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto [g, p] = random_instance(rng, 6 + trial % 12, 0.2 + 0.05 * (trial % 12));
        int k = independence_number(g).size;
        if (p.length() <= 2 * k)
            continue;
        auto q = easy_jump(g, p, k);
        ++runs;
        CHECK(validate_path(g, q));
        CHECK(q.front() == p.front());
        CHECK(q.back() == p.back());
        CHECK(subset_of(q, p));
        CHECK(q.length() >= p.length() - 2 * k);
        CHECK(q.length() < p.length());
    }
    CHECK(runs > 100);
}

TEST_CASE("find_special_sequence examples")
{
    auto k6 = Graph::complete(6);
    std::vector<Vertex> host{0, 1, 2, 3, 4, 5};
    auto s = find_special_sequence(k6, host, {}, 1);
    CHECK(validate_special_sequence(k6, s));
    CHECK(s.positions == std::vector<int>{0, 1, 2, 3, 4});

    auto e6 = Graph::empty(6);
    auto single = find_special_sequence(e6, host, {}, 3);
    CHECK(single.positions.size() == 1);

    auto c8 = Graph::cycle(8);
    std::vector<Vertex> along{0, 1, 2, 3, 4, 5, 6, 7};
    int alpha = independence_number(c8).size;
    auto cs = find_special_sequence(c8, along, {}, alpha);
    CHECK(validate_special_sequence(c8, cs));
    CHECK(2 * alpha * cs.count_outside({}) >= 8);
}

TEST_CASE("special sequence bound with exact alpha")
{
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + trial % 14;
        auto g = ref::random_graph(n, 0.15 + 0.05 * (trial % 15), rng);
        std::vector<Vertex> host(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            host[static_cast<std::size_t>(i)] = i;
        std::shuffle(host.begin(), host.end(), rng);
        std::vector<Vertex> excluded;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 4 == 0)
                excluded.push_back(v);
        int alpha = ref::alpha(g);
        auto s = find_special_sequence(g, host, excluded, alpha);
        CHECK(validate_special_sequence(g, s));
        CHECK(2 * alpha * s.count_outside(excluded) >= n - static_cast<int>(excluded.size()));
    }
}

TEST_CASE("special decomposition is a partition into non-concatenable sequences")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + trial % 14;
        auto g = ref::random_graph(n, 0.1 + 0.06 * (trial % 14), rng);
        std::vector<Vertex> host(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            host[static_cast<std::size_t>(i)] = i;
        auto family = special_decomposition(g, host);
        std::map<int, int> seen;
        for (const auto& s : family) {
            CHECK(validate_special_sequence(g, s));
            for (int pos : s.positions)
                ++seen[pos];
        }
        CHECK(static_cast<int>(seen.size()) == n);
        for (auto [pos, count] : seen)
            CHECK(count == 1);
        // No sequence ends where another could continue it.
        for (const auto& s : family)
            for (const auto& t : family)
                if (&s != &t && s.positions.size() > 1) {
                    int last = s.positions.back();
                    CHECK(last != t.positions.front());
                }
        CHECK(static_cast<int>(family.size()) <= ref::alpha(g.complement().complement()) * 2);
    }
}

TEST_CASE("jump_with_zigzag examples")
{
    auto k12 = Graph::complete(12);
    auto p = identity_path(12);
    auto r1 = jump_with_zigzag(k12, p, 1, {}, 1);
    CHECK(r1.path.length() == p.length() - 1);
    CHECK(r1.path.front() == 0);
    CHECK(r1.path.back() == 11);

    auto r2 = jump_with_zigzag(k12, p, 2, {}, 1);
    CHECK(validate_path(k12, r2.path));
    CHECK(r2.path.length() >= p.length() - 5);
    CHECK(r2.path.length() <= p.length() - 1);

    auto g = chained_cliques(2);
    auto h = hamilton_cycle(g);
    REQUIRE(h);
    try {
        jump_with_zigzag(g, open_cycle(*h), 1, {}, 2);
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
    }
    CHECK_THROWS_AS(jump_with_zigzag(k12, p, 1, {99}, 1), Error);
}

TEST_CASE("zigzag precondition arithmetic")
{
    // c((|P|-(4c-1)|U|)/(2k)-1) > k
    for (int n = 1; n <= 60; ++n)
        for (int u = 0; u <= 4; ++u)
            for (int c = 1; c <= 4; ++c)
                for (int k = 1; k <= 4; ++k) {
                    double lhs = c * ((n - (4.0 * c - 1) * u) / (2.0 * k) - 1);
                    bool exact = 2 * k * c * ((n - (4 * c - 1) * u) - 2 * k) > 2 * k * 2 * k * k;
                    CHECK(zigzag_precondition(n, u, c, k) == exact);
                    if (std::abs(lhs - k) > 1e-9)
                        CHECK(zigzag_precondition(n, u, c, k) == (lhs > k));
                }
}

TEST_CASE("jump_with_zigzag keeps pinned vertices and the length window")
{
    std::mt19937_64 rng(777);
    std::map<std::string, int> branches;
    int runs = 0;
    for (int trial = 0; runs < 500 && trial < 20000; ++trial) {
        int n = 14 + trial % 30;
        double density = 0.35 + 0.05 * (trial % 12);
        auto [g, p] = random_instance(rng, n, density);
        int k = independence_number(g).size;
        int c = 1 + static_cast<int>(rng() % 3);
        std::vector<Vertex> pinned;
        int want = static_cast<int>(rng() % 4);
        for (int i = 0; i < want; ++i)
            pinned.push_back(p.vertices[rng() % p.vertices.size()]);
        std::sort(pinned.begin(), pinned.end());
        pinned.erase(std::unique(pinned.begin(), pinned.end()), pinned.end());
        if (!zigzag_precondition(p.vertex_count(), static_cast<int>(pinned.size()), c, k))
            continue;
        ++runs;
        auto r = jump_with_zigzag(g, p, c, pinned, k);
        ++branches[r.branch];
        CHECK(validate_path(g, r.path));
        CHECK(r.path.front() == p.front());
        CHECK(r.path.back() == p.back());
        CHECK(subset_of(r.path, p));
        for (Vertex u : pinned)
            CHECK(std::count(r.path.vertices.begin(), r.path.vertices.end(), u) == 1);
        CHECK(r.path.length() >= p.length() - (4 * c - 3));
        CHECK(r.path.length() < p.length());
    }
    CHECK(runs == 500);
    MESSAGE("branches: short_gap=" << branches["short_gap"] << " inside_s=" << branches["inside_s"]
                                   << " zigzag=" << branches["zigzag"]);
}

TEST_CASE("jump_with_zigzag reports alpha > k instead of guessing")
{
    // A long induced path has large alpha; claiming k = 1 lets the
    // precondition pass, and the construction must refuse.
    auto g = Graph::path(30);
    try {
        jump_with_zigzag(g, identity_path(30), 1, {}, 1);
        FAIL("expected InternalContradiction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InternalContradiction);
    }
}

TEST_CASE("shorten_to_target examples")
{
    auto k20 = Graph::complete(20);
    auto p = identity_path(20);
    auto seq = shorten_to_target(k20, p, 5, 1, {}, 1);
    std::vector<int> lengths;
    for (const auto& q : seq)
        lengths.push_back(q.length());
    std::vector<int> expected;
    for (int len = 19; len >= 4; --len)
        expected.push_back(len);
    CHECK(lengths == expected);

    auto seq3 = shorten_to_target(k20, p, 5, 3, {}, 1);
    for (std::size_t i = 1; i < seq3.size(); ++i) {
        CHECK(seq3[i - 1].length() - seq3[i].length() <= 9);
        CHECK(seq3[i].length() < seq3[i - 1].length());
        CHECK(validate_path(k20, seq3[i]));
        CHECK(subset_of(seq3[i], seq3[i - 1]));
    }

    try {
        shorten_to_target(Graph::cycle(13), identity_path(13), 3, 1, {}, 6);
        FAIL("expected PreconditionFailed");
    } catch (const ShorteningError& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
        CHECK(e.partial().empty());
    }
}

TEST_CASE("shorten_to_target attaches the partial sequence on a later failure")
{
    // Complete on the first 12 labels, induced path after: the first jumps
    // succeed inside the clique region only while it still holds an edge in S.
    std::vector<Edge> e;
    for (int i = 0; i < 40; ++i)
        for (int j = i + 1; j < 40; ++j)
            if (j == i + 1 || j < 12)
                e.emplace_back(i, j);
    Graph g(40, e);
    try {
        auto seq = shorten_to_target(g, identity_path(40), 3, 1, {}, 1);
        for (std::size_t i = 1; i < seq.size(); ++i)
            CHECK(validate_path(g, seq[i]));
    } catch (const ShorteningError& err) {
        CHECK(err.kind() == ErrorKind::InternalContradiction);
        for (std::size_t i = 1; i < err.partial().size(); ++i)
            CHECK(validate_path(g, err.partial()[i]));
    }
}

namespace {

// Path 0..n-1 plus special edges (v_t, v_{t+1} + 1) for v_t = step * t, plus extras.
Graph engineered_host(int n, int step, const std::vector<Edge>& extra)
{
    std::set<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace(i, i + 1);
    for (int v = 0; v + step + 1 < n; v += step)
        e.emplace(v, v + step + 1);
    for (auto [a, b] : extra)
        e.emplace(std::min(a, b), std::max(a, b));
    std::vector<Edge> list(e.begin(), e.end());
    return Graph(n, list);
}

} // namespace

TEST_CASE("zigzag branch on an engineered host")
{
    // c = 1, specials at multiples of 3, S = {2, 5, 8, ...}; the edge 2-8
    // joins S_3 and S_9, so the walks from 3 end at 8 and at 10.
    auto g = engineered_host(40, 3, {{2, 8}});
    auto r = jump_with_zigzag(g, identity_path(40), 1, {}, 1);
    CHECK(r.branch == "zigzag");
    std::vector<Vertex> head{0, 1, 2, 8, 7, 3, 4, 5, 6, 10, 11};
    CHECK(std::equal(head.begin(), head.end(), r.path.vertices.begin()));
    CHECK(r.removed == 1);
    CHECK(validate_path(g, r.path));
}

TEST_CASE("inside_s branch on an engineered host")
{
    // c = 2, specials at multiples of 5, S_10 = {9, 7}; the edge 7-9 bypasses 8.
    auto g = engineered_host(40, 5, {{7, 9}});
    auto r = jump_with_zigzag(g, identity_path(40), 2, {}, 1);
    CHECK(r.branch == "inside_s");
    CHECK(r.removed == 1);
    CHECK(std::find(r.path.vertices.begin(), r.path.vertices.end(), 8) == r.path.vertices.end());
    CHECK(validate_path(g, r.path));
}

TEST_CASE("all branches on randomised engineered hosts")
{
    std::mt19937_64 rng(2718);
    std::map<std::string, int> branches;
    int contradictions = 0;
    for (int trial = 0; trial < 600; ++trial) {
        int c = 1 + trial % 3;
        int step = 2 * c + static_cast<int>(rng() % 3);
        int n = 30 + static_cast<int>(rng() % 31);
        std::vector<int> s_positions;
        for (int v = step; v + 1 < n; v += step)
            for (int t = 1; t <= 2 * c - 1; t += 2)
                s_positions.push_back(v - t);
        std::vector<Edge> extra;
        int want = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < want; ++i) {
            int a = s_positions[rng() % s_positions.size()], b = s_positions[rng() % s_positions.size()];
            if (std::abs(a - b) >= 2)
                extra.emplace_back(a, b);
        }
        auto g = engineered_host(n, step, extra);
        auto p = identity_path(n);
        std::vector<Vertex> pinned;
        if (trial % 2)
            pinned.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
        if (!zigzag_precondition(n, static_cast<int>(pinned.size()), c, 1))
            continue;
        try {
            auto r = jump_with_zigzag(g, p, c, pinned, 1);
            ++branches[r.branch];
            CHECK(validate_path(g, r.path));
            CHECK(r.path.front() == 0);
            CHECK(r.path.back() == n - 1);
            CHECK(r.path.length() >= p.length() - (4 * c - 3));
            CHECK(r.path.length() < p.length());
            for (Vertex u : pinned)
                CHECK(std::count(r.path.vertices.begin(), r.path.vertices.end(), u) == 1);
        } catch (const Error& e) {
            // These hosts have huge alpha; an edge-free S is a legitimate outcome.
            CHECK(e.kind() == ErrorKind::InternalContradiction);
            ++contradictions;
        }
    }
    CHECK(branches["zigzag"] > 50);
    CHECK(branches["inside_s"] > 5);
    MESSAGE("branches: short_gap=" << branches["short_gap"] << " inside_s=" << branches["inside_s"]
                                   << " zigzag=" << branches["zigzag"] << " no-edge=" << contradictions);
}
