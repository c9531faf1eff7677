#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fibcube/factorization.hpp"

using namespace fibcube;

namespace {

// multiset equality up to isomorphism
bool same_factors(std::vector<Graph> a, std::vector<Graph> b) {
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const Graph& g : a) {
        bool matched = false;
        for (size_t j = 0; j < b.size() && !matched; ++j) {
            if (used[j]) continue;
            if (is_isomorphic(g, b[j])) {
                used[j] = 1;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("factorize the frozen examples") {
    const Graph q3 = build_cube({Family::O, 1, 3, 3});
    const Factorization f = factorize(q3);
    REQUIRE(f.factors.size() == 3);
    for (const Graph& factor : f.factors) {
        CHECK(factor.vertex_count() == 2);
        CHECK(factor.edge_count() == 1);
    }
    CHECK(verify_factorization(q3, f));

    const Graph gamma5 = build_cube({Family::O, 1, 1, 5});
    const Factorization single = factorize(gamma5);
    REQUIRE(single.factors.size() == 1);
    CHECK(is_isomorphic(single.factors[0], gamma5));

    const Graph prism = cartesian_product(path_graph(3), path_graph(2));
    CHECK(same_factors(factorize(prism).factors,
                       {path_graph(3), path_graph(2)}));

    CHECK_THROWS_AS(factorize(Graph(1, {})), std::invalid_argument);
    CHECK_THROWS_AS(factorize(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("verify_factorization rejects tampered results") {
    const Graph q3 = build_cube({Family::O, 1, 3, 3});
    const Factorization good = factorize(q3);
    CHECK(verify_factorization(q3, good));

    Factorization missing = good;
    missing.factors.pop_back();  // order product mismatch
    CHECK_FALSE(verify_factorization(q3, missing));

    Factorization squashed = good;
    for (auto& tuple : squashed.coordinates) tuple[0] = 0;  // not a bijection
    CHECK_FALSE(verify_factorization(q3, squashed));

    Factorization rewired = good;
    rewired.factors[0] = Graph(2, {});  // breaks the edge condition
    CHECK_FALSE(verify_factorization(q3, rewired));

    const Graph k2 = path_graph(2);
    Factorization self;
    self.factors = {k2};
    self.coordinates = {{0}, {1}};
    CHECK(verify_factorization(k2, self));
}

TEST_CASE("every factor is itself prime") {
    for (const Graph& g :
         {cartesian_product(path_graph(4), star_graph(3)),
          cartesian_product(cycle_graph(5), path_graph(2)),
          build_cube({Family::O, 1, 4, 4})}) {
        const Factorization f = factorize(g);
        CHECK(verify_factorization(g, f));
        for (const Graph& factor : f.factors) CHECK(is_prime(factor));
    }
}

TEST_CASE("round trips through explicit products") {
    std::mt19937 rng(311);
    std::vector<Graph> pool = {path_graph(2), path_graph(3), path_graph(4),
                               star_graph(3), star_graph(4), cycle_graph(5),
                               build_cube({Family::O, 1, 1, 3}),
                               build_cube({Family::O, 1, 1, 4})};
    for (int trial = 0; trial < 8; ++trial) {
        const Graph& a = pool[rng() % pool.size()];
        const Graph& b = pool[rng() % pool.size()];
        const Graph prod = cartesian_product(a, b);
        const Factorization f = factorize(prod);
        CHECK(verify_factorization(prod, f));
        CHECK(same_factors(f.factors, {a, b}));

        // order of the operands never shows through
        const Graph swapped = cartesian_product(b, a);
        CHECK(same_factors(factorize(swapped).factors, f.factors));
    }
}

TEST_CASE("random products factor into the combined prime multisets") {
    std::mt19937 rng(0x5eed);
    const auto random_connected = [&rng](int max_order) {
        const int order = 2 + static_cast<int>(rng() % (max_order - 1));
        std::vector<Edge> edges;
        for (int v = 1; v < order; ++v) {
            const int parent = static_cast<int>(rng() % v);
            edges.push_back({parent, v});
        }
        const int extra = static_cast<int>(rng() % (order + 1));
        for (int t = 0; t < extra; ++t) {
            const int u = static_cast<int>(rng() % order);
            const int v = static_cast<int>(rng() % order);
            if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
        }
        return Graph(order, edges);
    };

    for (int trial = 0; trial < 30; ++trial) {
        const Graph a = random_connected(7);
        const Graph b = random_connected(7);
        const Graph prod = cartesian_product(a, b);
        const Factorization whole = factorize(prod);
        CHECK(verify_factorization(prod, whole));

        // the inputs may themselves be composite; compare against the union
        // of their own prime factors
        std::vector<Graph> expected;
        for (const Graph* part : {&a, &b})
            for (Graph& factor : factorize(*part).factors)
                expected.push_back(std::move(factor));
        CHECK(same_factors(whole.factors, std::move(expected)));
        for (const Graph& factor : whole.factors) CHECK(is_prime(factor));
    }
}

TEST_CASE("composite cubes decompose into coordinate edges") {
    for (int n = 2; n <= 4; ++n) {
        const Graph g = build_cube({Family::O, 1, n, n});  // full hypercube
        const Factorization f = factorize(g);
        REQUIRE(f.factors.size() == static_cast<size_t>(n));
        // canonical order lists the coordinate classes from the right: the
        // smallest edge joins the all-zero word to the unit word at position n
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int c = 0; c < n; ++c)
                CHECK(f.coordinates[static_cast<size_t>(v)][static_cast<size_t>(c)] ==
                      (g.label(v).bit(n - c) ? 1 : 0));
    }
}

TEST_CASE("primality grid agrees with the closed-form rule") {
    const auto cells = primality_grid(2, 2, 5, 300);
    CHECK(!cells.empty());
    for (const GridCell& cell : cells) {
        CAPTURE(cell.p);
        CAPTURE(cell.r);
        CAPTURE(cell.n);
        CAPTURE(cell.detail);
        CHECK(cell.pass);
        CHECK(cell.evaluated);
    }
    // spot checks of the expectation itself
    const auto find = [&](int p, int r, int n) {
        for (const GridCell& cell : cells)
            if (cell.p == p && cell.r == r && cell.n == n) return cell.detail;
        return std::string("missing");
    };
    CHECK(find(1, 2, 2).find("composite") == 0);
    CHECK(find(1, 1, 4) == "prime");
    CHECK(find(2, 2, 5) == "prime");

    const auto wide = primality_grid(1, 3, 2, 300);
    for (const GridCell& cell : wide)
        if (cell.p == 1 && cell.r == 3 && cell.n == 2)
            CHECK(cell.detail == "composite, 2 edge factors");
}

TEST_CASE("grid cells honour the vertex cap") {
    const auto cells = primality_grid(1, 4, 6, 10);
    bool skipped = false;
    for (const GridCell& cell : cells) {
        if (!cell.evaluated) {
            skipped = true;
            CHECK(count_words({Family::O, cell.p, cell.r, cell.n}) > 10);
        }
    }
    CHECK(skipped);
}

TEST_CASE("recognizer, layer and theta grids pass on a small sweep") {
    for (const GridCell& cell : recognizer_grid(3, 3, 5, 300)) CHECK(cell.pass);
    for (const GridCell& cell : layer_grid(2, 2, 5, 200)) CHECK(cell.pass);
    for (const GridCell& cell : coordinate_theta_grid(2, 2, 5, 200))
        CHECK(cell.pass);
}

TEST_CASE("family comparison report") {
    for (const FamilyCell& cell : family_equivalence_check(1, 2, 8)) {
        CHECK(cell.pass);
        CHECK(cell.status == FamilyCell::Status::equal_words);
    }
    for (const FamilyCell& cell : family_equivalence_check(2, 1, 8)) {
        CHECK(cell.pass);
        CHECK(cell.status == FamilyCell::Status::equal_words);
    }
    const auto mixed = family_equivalence_check(2, 2, 4);
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0].status == FamilyCell::Status::equal_words);  // n = 1
    CHECK(mixed[1].status == FamilyCell::Status::not_isomorphic);
    CHECK(mixed[1].detail == "3 vs 4 vertices");
}
