#include <doctest.h>

#include <random>
#include <sstream>

#include "sierpinski/codes.hpp"
#include "test_util.hpp"

using namespace sierpinski;
using testutil::complete_graph;
using testutil::random_connected_graph;
using testutil::random_subset;

namespace {

Bitset make_code(const SierpinskiGraph& g,
                 std::initializer_list<std::initializer_list<int>> labels) {
    Bitset b(g.vertex_count());
    for (const auto& l : labels) b.set(g.encode(VertexLabel(l)));
    return b;
}

std::vector<VertexId> ids(const SierpinskiGraph& g,
                          std::initializer_list<std::initializer_list<int>> labels) {
    std::vector<VertexId> out;
    for (const auto& l : labels) out.push_back(g.encode(VertexLabel(l)));
    return out;
}

// Re-checks a failure witness straight from the definitions.
void replay_witness(const Graph& g, const Bitset& code, const VerificationReport& r) {
    REQUIRE_FALSE(r.valid);
    if (r.uncovered) {
        VertexId u = *r.uncovered;
        bool self = r.kind != CodeKind::TotalDominating && code.test(u);
        bool nbr = false;
        for (VertexId v : g.neighbors(u)) nbr = nbr || code.test(v);
        bool any_cover = self || nbr;
        CHECK_FALSE(any_cover);
    } else {
        REQUIRE(r.unseparated.has_value());
        auto [u, v] = *r.unseparated;
        CHECK(u != v);
        CHECK(ball(g, u, code) == ball(g, v, code));
        CHECK(ball(g, u, code) == r.shared_iset);
        if (r.kind == CodeKind::LocatingDominating) {
            CHECK_FALSE(code.test(u));
            CHECK_FALSE(code.test(v));
        }
    }
}

}  // namespace

TEST_CASE("ball is the code within the closed neighborhood") {
    SierpinskiGraph g(2, 3);
    Bitset all(g.vertex_count());
    all.set_all();
    CHECK(ball(g.graph(), g.encode({0, 0}), all) == ids(g, {{0, 0}, {0, 1}, {0, 2}}));
    CHECK(ball(g.graph(), g.encode({0, 1}), make_code(g, {{1, 0}})) == ids(g, {{1, 0}}));
    CHECK(ball(g.graph(), g.encode({1, 1}), make_code(g, {{0, 0}})).empty());
}

TEST_CASE("dominating verifier") {
    SierpinskiGraph g(2, 3);
    CHECK(is_dominating(g.graph(), make_code(g, {{0, 0}, {1, 1}, {2, 2}})).valid);

    Bitset all(g.vertex_count());
    all.set_all();
    CHECK(is_dominating(g.graph(), all).valid);

    Bitset empty(g.vertex_count());
    auto r = is_dominating(g.graph(), empty);
    CHECK_FALSE(r.valid);
    REQUIRE(r.uncovered.has_value());
    replay_witness(g.graph(), empty, r);
}

TEST_CASE("total-dominating verifier") {
    SierpinskiGraph g4(2, 4);
    CHECK(is_total_dominating(g4.graph(),
                              make_code(g4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})).valid);

    SierpinskiGraph g3(2, 3);
    Bitset extremes = make_code(g3, {{0, 0}, {1, 1}, {2, 2}});
    auto r = is_total_dominating(g3.graph(), extremes);
    CHECK_FALSE(r.valid);
    replay_witness(g3.graph(), extremes, r);

    CHECK_FALSE(is_total_dominating(g3.graph(), Bitset(9)).valid);
}

TEST_CASE("identifying verifier") {
    SierpinskiGraph g(2, 3);
    Bitset inner(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_extreme(u)) inner.set(u);
    CHECK(inner.count() == 6);
    CHECK(is_identifying(g.graph(), inner).valid);

    // complete graphs have closed twins
    Graph k3 = complete_graph(3);
    Bitset all(3);
    all.set_all();
    auto r = is_identifying(k3, all);
    CHECK_FALSE(r.valid);
    replay_witness(k3, all, r);

    Bitset five = make_code(g, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}});
    auto r5 = is_identifying(g.graph(), five);
    CHECK_FALSE(r5.valid);
    replay_witness(g.graph(), five, r5);
}

TEST_CASE("locating-dominating verifier") {
    SierpinskiGraph g(2, 3);
    CHECK(is_locating_dominating(g.graph(), make_code(g, {{0, 1}, {1, 2}, {2, 0}})).valid);

    Bitset one = make_code(g, {{0, 0}});
    auto r = is_locating_dominating(g.graph(), one);
    CHECK_FALSE(r.valid);
    replay_witness(g.graph(), one, r);
}

TEST_CASE("twin-freeness") {
    CHECK(is_twin_free(SierpinskiGraph(2, 3).graph()));
    CHECK_FALSE(is_twin_free(complete_graph(3)));
    CHECK_FALSE(is_twin_free(complete_graph(5)));
    for (auto [n, k] : {std::pair{2, 4}, {3, 3}, {2, 5}})
        CHECK(is_twin_free(SierpinskiGraph(n, k).graph()));

    // full vertex set is identifying iff twin-free
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(rng, 10);
        Bitset all(g.vertex_count());
        all.set_all();
        CHECK(is_twin_free(g) == is_identifying(g, all).valid);
    }
}

TEST_CASE("classify") {
    SierpinskiGraph g(2, 3);
    Bitset all(g.vertex_count());
    all.set_all();
    CHECK(classify(g.graph(), all).size() == 4);
    CHECK(classify(g.graph(), Bitset(9)).empty());

    Bitset inner(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (!g.is_extreme(u)) inner.set(u);
    CHECK(classify(g.graph(), inner).size() == 4);  // inner vertices satisfy all four
}

TEST_CASE("implication chain and superset monotonicity on random codes") {
    std::mt19937 rng(42);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_connected_graph(rng, 10);
        Bitset c = random_subset(rng, g.vertex_count());

        bool dom = is_dominating(g, c).valid;
        bool td = is_total_dominating(g, c).valid;
        bool id = is_identifying(g, c).valid;
        bool ld = is_locating_dominating(g, c).valid;
        if (id) CHECK(ld);
        if (ld) CHECK(dom);
        if (td) CHECK(dom);

        Bitset c2 = c;
        c2.set(std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng));
        if (dom) CHECK(is_dominating(g, c2).valid);
        if (td) CHECK(is_total_dominating(g, c2).valid);
        if (id) CHECK(is_identifying(g, c2).valid);
        if (ld) CHECK(is_locating_dominating(g, c2).valid);
    }
}

TEST_CASE("ball distributes over code union") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_connected_graph(rng, 10);
        Bitset c1 = random_subset(rng, g.vertex_count());
        Bitset c2 = random_subset(rng, g.vertex_count());
        VertexId u = std::uniform_int_distribution<VertexId>(
            0, static_cast<VertexId>(g.vertex_count() - 1))(rng);
        auto lhs = ball(g, u, c1 | c2);
        auto b1 = ball(g, u, c1);
        auto b2 = ball(g, u, c2);
        std::vector<VertexId> rhs(b1);
        rhs.insert(rhs.end(), b2.begin(), b2.end());
        std::sort(rhs.begin(), rhs.end());
        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
        CHECK(lhs == rhs);
        for (VertexId v : lhs) CHECK((c1 | c2).test(v));  // ball(u,C) subset of C
    }
}

TEST_CASE("failing reports always carry a replayable witness") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph(rng, 9);
        Bitset c = random_subset(rng, g.vertex_count());
        for (CodeKind kind : {CodeKind::Dominating, CodeKind::TotalDominating,
                              CodeKind::Identifying, CodeKind::LocatingDominating}) {
            auto r = verify(g, c, kind);
            if (!r.valid) replay_witness(g, c, r);
        }
    }
}

TEST_CASE("code file parsing") {
    SierpinskiGraph g(2, 3);
    std::istringstream in("# a comment\n0,1\n\n  1,2  # trailing\n2,0\n");
    Code code = parse_code(in, g);
    CHECK(code.size() == 3);
    CHECK(code.members == make_code(g, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(format_code(code, g) == "0,1\n1,2\n2,0\n");

    std::istringstream bad("0,9\n");
    CHECK_THROWS_AS(parse_code(bad, g), std::invalid_argument);
    std::istringstream malformed("0;1\n");
    CHECK_THROWS_AS(parse_code(malformed, g), std::invalid_argument);
}
