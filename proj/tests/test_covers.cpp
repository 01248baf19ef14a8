#include <random>

#include "doctest.h"
#include "reference.hpp"

#include "pancyclic/covers.hpp"
#include "pancyclic/error.hpp"
#include "pancyclic/oracles.hpp"

using namespace pancyclic;

namespace {

Digraph random_digraph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p), flip(0.5);
    std::vector<Edge> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                arcs.push_back(flip(rng) ? Edge{u, v} : Edge{v, u});
    return Digraph(n, arcs);
}

} // namespace

TEST_CASE("gallai_milgram_cover examples")
{
    std::vector<Edge> tt;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            tt.emplace_back(v, u);
    Digraph tournament(5, tt);
    auto cover = gallai_milgram_cover(tournament);
    CHECK(cover.size() == 1);
    CHECK(validate_cover(tournament, cover));

    Digraph edgeless(6, std::vector<Edge>{});
    CHECK(gallai_milgram_cover(edgeless).size() == 6);

    Digraph tri(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
    auto c3 = gallai_milgram_cover(tri);
    CHECK(c3.size() == 1);
    CHECK(validate_cover(tri, c3));

    CHECK(gallai_milgram_cover(Digraph{}).size() == 0);
}

TEST_CASE("longest_cover_path examples")
{
    Digraph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(longest_cover_path(path).vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(longest_cover_path(Digraph(5, std::vector<Edge>{})).vertex_count() == 1);

    std::vector<Edge> e;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                e.emplace_back(base + i, base + j);
    auto two = Digraph::orient_by_label(Graph(8, e));
    auto p = longest_cover_path(two);
    CHECK(p.vertex_count() == 4);
    CHECK(validate_directed_path(two, p));
}

TEST_CASE("cover size never exceeds alpha on random digraphs")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + trial % 12;
        double p = 0.1 * (1 + trial % 9);
        auto d = random_digraph(n, p, rng);
        auto cover = gallai_milgram_cover(d);
        CHECK(validate_cover(d, cover));
        CHECK(cover.size() <= ref::alpha(d.underlying()));
        auto longest = longest_cover_path(d);
        CHECK(longest.vertex_count() * cover.size() >= n);
    }
}

TEST_CASE("gallai_milgram_cover is deterministic")
{
    std::mt19937_64 a(77), b(77);
    auto d1 = random_digraph(11, 0.4, a);
    auto d2 = random_digraph(11, 0.4, b);
    auto c1 = gallai_milgram_cover(d1), c2 = gallai_milgram_cover(d2);
    REQUIRE(c1.size() == c2.size());
    for (int i = 0; i < c1.size(); ++i)
        CHECK(c1.paths[static_cast<std::size_t>(i)] == c2.paths[static_cast<std::size_t>(i)]);
}

TEST_CASE("to_rational recovers short fractions")
{
    CHECK(to_rational(0.1) == Rational(1, 10));
    CHECK(to_rational(0.25) == Rational(1, 4));
    CHECK(to_rational(0.49) == Rational(49, 100));
    CHECK(to_rational(1.0 / 3) == Rational(1, 3));
}

TEST_CASE("log bound in exact arithmetic")
{
    for (int n : {1, 2, 10, 100, 200})
        for (Rational gamma : {Rational(1, 20), Rational(1, 10), Rational(1, 4), Rational(49, 100)}) {
            int t = log_ceil(n, gamma);
            CHECK(t == ref::log_ceil(n, gamma.numerator(), gamma.denominator()));
            if (t > 0)
                CHECK(within_log_bound(t - 1, n, gamma));
        }
    // (1.25)^3 = 1.953125 < 2 <= (1.25)^4
    CHECK(log_ceil(2, Rational(1, 4)) == 4);
    CHECK(within_log_bound(3, 2, Rational(1, 4)));
    CHECK_FALSE(within_log_bound(4, 2, Rational(1, 4)));
}

TEST_CASE("bfs_cluster_partition examples")
{
    auto kn = bfs_cluster_partition(Graph::complete(9), 0.1);
    REQUIRE(kn.clusters.size() == 1);
    CHECK(kn.clusters[0].vertices.size() == 9);
    CHECK(kn.leftover.empty());

    auto empty = bfs_cluster_partition(Graph::empty(5), 0.1);
    CHECK(empty.clusters.size() == 5);
    CHECK(empty.leftover.empty());

    // Level sizes along P_8 are all 1; with gamma = 0.4 the rule first stops
    // at i = 2 (1 <= 0.4 * 3), so each cluster keeps three vertices.
    auto p8 = bfs_cluster_partition(Graph::path(8), 0.4);
    REQUIRE(p8.clusters.size() == 2);
    CHECK(p8.clusters[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(p8.clusters[1].vertices == std::vector<Vertex>{4, 5, 6});
    CHECK(p8.leftover == std::vector<Vertex>{3, 7});
    CHECK(partition_violations(Graph::path(8), p8).empty());

    CHECK(bfs_cluster_partition(Graph{}, 0.2).clusters.empty());
    for (double bad : {0.0, 0.5, -0.1, 0.7})
        try {
            bfs_cluster_partition(Graph::path(3), bad);
            FAIL("expected InvalidGamma");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidGamma);
        }
}

TEST_CASE("partition postconditions on random graphs")
{
    std::mt19937_64 rng(2023);
    const double gammas[] = {0.05, 0.1, 0.25, 0.49};
    std::uniform_int_distribution<int> order(1, 200);
    for (int trial = 0; trial < 200; ++trial) {
        int n = order(rng);
        double avg_deg = 1.0 + trial % 6;
        auto g = ref::random_graph(n, std::min(1.0, avg_deg / n), rng);
        auto part = bfs_cluster_partition(g, gammas[trial % 4]);
        auto bad = partition_violations(g, part);
        CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
    }
}

TEST_CASE("partition_violations detects a bad partition")
{
    auto g = Graph::path(4);
    auto part = bfs_cluster_partition(g, 0.25);
    REQUIRE(part.clusters.size() == 1);
    // Split the single cluster in two along an edge.
    auto broken = part;
    broken.clusters[0].vertices = {0, 1};
    broken.clusters.push_back(Cluster{2, {2, 3}, 1});
    broken.cluster_of[2] = broken.cluster_of[3] = 1;
    broken.parent[2] = -1;
    broken.distance[2] = 0;
    broken.distance[3] = 1;
    CHECK_FALSE(partition_violations(g, broken).empty());
}
