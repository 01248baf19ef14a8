#include <random>

#include "doctest.h"
#include "reference.hpp"

#include "pancyclic/dense_paths.hpp"
#include "pancyclic/error.hpp"
#include "pancyclic/oracles.hpp"

using namespace pancyclic;

namespace {

Graph disjoint_cliques(int count, int size)
{
    std::vector<Edge> e;
    for (int c = 0; c < count; ++c)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                e.emplace_back(c * size + i, c * size + j);
    return Graph(count * size, e);
}

AnalysisParams params_for(int k, double gamma)
{
    AnalysisParams p;
    p.k = k;
    p.gamma = gamma;
    return p;
}

void check_spine_invariants(const DensePairCertificate& cert)
{
    for (std::size_t i = 0; i + 1 < cert.spine_distances.size(); ++i) {
        CHECK(cert.spine_distances[i] <= cert.spine_distances[i + 1]);
        CHECK(cert.spine_distances[i + 1] <= cert.spine_distances[i] + 1);
    }
    CHECK(cert.lo == cert.spine_distances.back());
    CHECK(cert.hi == static_cast<int>(cert.spine.size()) - 1 + cert.spine_distances.front());
    CHECK(static_cast<int>(cert.paths.size()) == cert.hi - cert.lo + 1);
}

} // namespace

TEST_CASE("find_dense_pair on K_8")
{
    auto g = Graph::complete(8);
    auto cert = find_dense_pair(g, params_for(1, 0.25));
    CHECK(validate_certificate(g, cert));
    CHECK(cert.lo == 1);
    CHECK(cert.hi == 7);
    CHECK(cert.gap == 1);
    check_spine_invariants(cert);
}

TEST_CASE("find_dense_pair on two disjoint K_4")
{
    auto g = disjoint_cliques(2, 4);
    auto cert = find_dense_pair(g, params_for(2, 0.1));
    CHECK(validate_certificate(g, cert));
    CHECK(cert.width() >= 2);
    for (Vertex v : cert.spine)
        CHECK(v / 4 == cert.u / 4);
}

TEST_CASE("find_dense_pair on C_12")
{
    auto g = Graph::cycle(12);
    auto cert = find_dense_pair(g, params_for(6, 0.4));
    CHECK(validate_certificate(g, cert));
    check_spine_invariants(cert);
}

TEST_CASE("find_dense_pair never exceeds the clique size on disjoint cliques")
{
    for (int count = 1; count <= 5; ++count)
        for (int size = 1; size <= 7; ++size) {
            auto g = disjoint_cliques(count, size);
            auto cert = find_dense_pair(g, params_for(count, 0.2));
            CHECK(validate_certificate(g, cert));
            CHECK(cert.hi <= size - 1);
        }
}

TEST_CASE("find_dense_pair rejects bad input")
{
    CHECK_THROWS_AS(find_dense_pair(Graph{}, params_for(1, 0.1)), Error);
    CHECK_THROWS_AS(find_dense_pair(Graph::complete(3), params_for(1, 0.5)), Error);
    auto single = find_dense_pair(Graph::empty(1), params_for(1, 0.1));
    CHECK(single.lo == 0);
    CHECK(single.hi == 0);
}

TEST_CASE("dense pair certificates on random graphs")
{
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> order(1, 60);
    const double gammas[] = {0.05, 0.1, 0.25, 0.49};
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial < 60 ? 1 + trial % 14 : order(rng);
        auto g = ref::random_graph(n, 0.1 + 0.1 * (trial % 8), rng);
        int k = independence_number(g).size;
        auto cert = find_dense_pair(g, params_for(k, gammas[trial % 4]));
        CHECK(validate_certificate(g, cert));
        check_spine_invariants(cert);
        if (n <= 14) {
            auto exact = ref::path_lengths(g, cert.u, cert.v);
            for (int len = cert.lo; len <= cert.hi; ++len)
                CHECK(exact.count(len) == 1);
        }
    }
}

TEST_CASE("is_dense_set boundary cases")
{
    CHECK(is_dense_set({1, 5}, 4, 1, 5));
    CHECK_FALSE(is_dense_set({1, 5}, 3.5, 1, 5));
    CHECK(is_dense_set({}, 3, 0, 2));
    CHECK_FALSE(is_dense_set({}, 2, 0, 2));
    CHECK_FALSE(is_dense_set({4}, 1, 0, 4));
    CHECK(is_dense_set({2}, 2, 0, 4));
}

TEST_CASE("is_p_dense examples")
{
    CHECK(is_p_dense(Graph::complete(5), 0, 3, 1, 1, 4));
    CHECK_FALSE(is_p_dense(Graph::cycle(6), 0, 1, 1, 1, 5));
    CHECK(is_p_dense(Graph::cycle(6), 0, 1, 4, 1, 5));
    OracleConfig cfg;
    cfg.subset_dp_cap = 4;
    CHECK_THROWS_AS(is_p_dense(Graph::cycle(6), 0, 1, 4, 1, 5, cfg), Error);
}

TEST_CASE("is_p_dense agrees with a direct subinterval scan")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 8;
        auto g = ref::random_graph(n, 0.4, rng);
        auto lengths = ref::path_lengths(g, 0, n - 1);
        for (int p = 1; p <= 4; ++p) {
            // Integer p and endpoints: the extreme subintervals start at an
            // integer s (holding s..s+p) or at s + 1/2 (holding s+1..s+p).
            bool expect = true;
            for (int s = 0; s + p <= n; ++s) {
                bool hit = false, hit_half = false;
                for (int len = s; len <= s + p; ++len)
                    hit = hit || lengths.count(len);
                for (int len = s + 1; len <= s + p; ++len)
                    hit_half = hit_half || lengths.count(len);
                expect = expect && hit && (s + p == n || hit_half);
            }
            CHECK(is_p_dense(g, 0, n - 1, p, 0, n) == expect);
        }
    }
}
