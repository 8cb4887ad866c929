#include <doctest.h>

#include "lapdiam/canonical.hpp"
#include "lapdiam/families.hpp"
#include "lapdiam/spectra.hpp"

using namespace lapdiam;

namespace {

std::size_t clique_edges(long n, long d) {
    const auto k = static_cast<std::size_t>(n - d - 1);
    return static_cast<std::size_t>(d) + k * (k - 1) / 2 + 3 * k;
}

}  // namespace

TEST_CASE("basic families") {
    CHECK(path(2).graph == complete(2).graph);
    CHECK(degree_sequence(complete_minus_edge(5).graph).degrees == std::vector<std::size_t>{4, 4, 4, 3, 3});
    const auto c4 = cycle(4).graph;
    CHECK(c4.size() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(is_isomorphic(c4, complement(disjoint_union(complete(2).graph, complete(2).graph))));
    CHECK(complete(6).graph.size() == 15);
    CHECK(path(1).graph.order() == 1);
    CHECK(path(4).label("u1") == 0);
    CHECK(complete(4).label("v4") == 3);
}

TEST_CASE("g_ndt") {
    const auto g = g_ndt(7, 3, 2);
    CHECK(g.graph.order() == 7);
    CHECK(g.graph.size() == 15);
    CHECK(diameter(g.graph) == 3);
    CHECK(g.declared_diameter == 3);
    CHECK(g.specifier() == "g_ndt:7,3,2");
    CHECK(eigenvalue_rank_test(g.graph, 4, Rational(6)) == RankComparison::Equal);

    const auto small = g_ndt(4, 2, 2);
    CHECK(small.graph.size() == 5);
    const auto w = small.label("clique_0");
    for (const auto* u : {"u1", "u2", "u3"}) CHECK(small.graph.adjacent(w, small.label(u)));

    CHECK_THROWS_WITH_AS(g_ndt(7, 3, 9), doctest::Contains("2 <= t <= d"), FamilyError);
    CHECK_THROWS_AS(g_ndt(7, 1, 1), FamilyError);
    CHECK_THROWS_AS(g_ndt(7, 6, 2), FamilyError);
}

TEST_CASE("g_ndt sweep: size, diameter, mirror symmetry, Lemma 2.4") {
    std::size_t instances = 0;
    for (long n = 4; n <= 12; ++n) {
        for (long d = 2; d <= n - 2; ++d) {
            for (long t = 2; t <= d; ++t) {
                const auto g = g_ndt(n, d, t).graph;
                CHECK(g.size() == clique_edges(n, d));
                CHECK(diameter(g) == static_cast<std::size_t>(d));
                if (n <= 10) CHECK(is_isomorphic(g, g_ndt(n, d, d + 2 - t).graph));
                CHECK(eigenvalue_rank_test(g, static_cast<std::size_t>(n - d), Rational(n - d + 2)) ==
                      RankComparison::Equal);
                ++instances;
            }
        }
    }
    CHECK(instances > 100);
}

TEST_CASE("g_ndra") {
    const auto g = g_ndra(6, 3, 2, 1);
    CHECK(g.graph.size() == 10);
    const auto w1 = g.label("V1_0");
    const auto w2 = g.label("V2_0");
    CHECK(g.graph.adjacent(w1, w2));
    for (const auto* u : {"u1", "u2", "u3"}) CHECK(g.graph.adjacent(w1, g.label(u)));
    for (const auto* u : {"u2", "u3", "u4"}) CHECK(g.graph.adjacent(w2, g.label(u)));
    CHECK_FALSE(g.graph.adjacent(w1, g.label("u4")));
    CHECK_FALSE(g.graph.adjacent(w2, g.label("u1")));

    for (long n = 5; n <= 10; ++n) {
        for (long d = 3; d <= n - 2; ++d) {
            for (long r = 2; r <= d - 1; ++r) {
                for (long a = 1; a <= n - d - 2; ++a) {
                    const auto h = g_ndra(n, d, r, a).graph;
                    CHECK(diameter(h) == static_cast<std::size_t>(d));
                    CHECK(h.size() == clique_edges(n, d));
                }
            }
        }
    }
    CHECK_THROWS_AS(g_ndra(7, 3, 3, 1), FamilyError);
    CHECK_THROWS_AS(g_ndra(7, 3, 2, 3), FamilyError);
    CHECK_THROWS_AS(g_ndra(7, 2, 2, 1), FamilyError);
}

TEST_CASE("h_npq shapes") {
    const auto wide = h_npq(9, 2, 5);
    CHECK(wide.graph.degree(wide.label("v")) == 3);
    CHECK_FALSE(wide.graph.adjacent(wide.label("u"), wide.label("v")));

    const auto same = h_npq(8, 3, 3);
    const auto u = same.label("u");
    const auto v = same.label("v");
    CHECK(same.graph.adjacent(u, v));
    for (const auto* x : {"u2", "u3", "u4"}) {
        CHECK(same.graph.adjacent(u, same.label(x)));
        CHECK(same.graph.adjacent(v, same.label(x)));
    }
    CHECK(v == 7);
    CHECK(h_npq(8, 3, 4).graph.adjacent(h_npq(8, 3, 4).label("u"), h_npq(8, 3, 4).label("v")));
    CHECK_THROWS_AS(h_npq(8, 3, 2), FamilyError);
    CHECK_THROWS_AS(h_npq(8, 2, 6), FamilyError);
}

TEST_CASE("h_npq sweep: size, diameter n-3, fifth eigenvalue below 4") {
    std::size_t instances = 0;
    for (long n = 6; n <= 12; ++n) {
        for (long p = 2; p <= n - 3; ++p) {
            for (long q = p; q <= n - 3; ++q) {
                const auto h = h_npq(n, p, q).graph;
                const auto extra = (q == p || q == p + 1) ? 1U : 0U;
                CHECK(h.size() == static_cast<std::size_t>(n) + 3 + extra);
                CHECK(diameter(h) == static_cast<std::size_t>(n - 3));
                CHECK(ExactCounter(h).count_at_least(Rational(4)) <= 4);
                ++instances;
            }
        }
    }
    CHECK(instances > 50);
}

TEST_CASE("r1, r2 and h0") {
    const auto a = r1();
    CHECK(a.graph.order() == 8);
    CHECK(a.graph.size() == 9);
    CHECK(diameter(a.graph) == 5);
    CHECK(eigenvalue_rank_test(a.graph, 6, Rational(2)) == RankComparison::Equal);

    const auto b = r2();
    CHECK(b.graph.order() == 7);
    CHECK(diameter(b.graph) == 5);
    CHECK(eigenvalue_rank_test(b.graph, 5, Rational(1)) == RankComparison::Equal);

    CHECK(h0().graph == complement(path(5).graph));
}

TEST_CASE("specifier parsing") {
    CHECK(make_family("g_ndra:7,3,2,1").graph == g_ndra(7, 3, 2, 1).graph);
    CHECK(make_family("r1").graph == r1().graph);
    CHECK(make_family("complete", {3}).graph == complete(3).graph);
    CHECK(make_family("h_npq:8,3,3").specifier() == "h_npq:8,3,3");
    CHECK_THROWS_WITH_AS(make_family("nosuch:3"), doctest::Contains("nosuch"), FamilyError);
    CHECK_THROWS_WITH_AS(make_family("path:x"), doctest::Contains("x"), FamilyError);
    CHECK_THROWS_AS(make_family("path:3,4"), FamilyError);
    CHECK_THROWS_AS(make_family("path:0"), FamilyError);
    CHECK_THROWS_AS(make_family("g_ndt:7,3"), FamilyError);
    for (const auto& name : family_names()) CHECK_FALSE(name.empty());
}
