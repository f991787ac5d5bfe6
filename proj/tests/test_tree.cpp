#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "treewave/error.hpp"
#include "treewave/tree.hpp"

using namespace treewave;

TEST_CASE("ball sizes and layer structure", "[tree]") {
    CHECK(build_tree(2, 0)->vertex_count() == 1);
    CHECK(build_tree(2, 2)->vertex_count() == 10); // 1 + 3 + 6
    CHECK(build_tree(1, 5)->vertex_count() == 11); // path of 2R+1 vertices
    CHECK(build_tree(2, 3)->vertex_count() == 22);
    CHECK(build_tree(3, 2)->vertex_count() == 17);

    for (const std::int64_t q : {1, 2, 3}) {
        const auto ball = build_tree(q, 5);
        CHECK(ball->layer_size(0) == 1);
        for (std::int64_t m = 1; m <= 5; ++m)
            CHECK(ball->layer_size(m) == (q + 1) * ipow(q, m - 1));
        if (q >= 2)
            CHECK(ball->vertex_count() == 1 + (q + 1) * (ipow(q, 5) - 1) / (q - 1));
        else
            CHECK(ball->vertex_count() == 1 + 2 * 5);
    }
}

TEST_CASE("construction rejects bad parameters", "[tree]") {
    CHECK_THROWS_AS(build_tree(0, 3), Error);
    CHECK_THROWS_AS(build_tree(2, -1), Error);
}

TEST_CASE("parent and child indexing are mutually consistent", "[tree]") {
    for (const std::int64_t q : {1, 2, 3}) {
        const auto ball = build_tree(q, 4);
        CHECK(ball->child_count(0) == q + 1);
        for (std::int64_t m = 0; m < 4; ++m)
            for (Vertex v = ball->layer_begin(m); v < ball->layer_end(m); ++v) {
                const Vertex cb = ball->first_child(v);
                for (Vertex c = cb; c < cb + ball->child_count(v); ++c) {
                    CHECK(ball->parent(c) == v);
                    CHECK(ball->depth(c) == m + 1);
                }
            }
    }
}

TEST_CASE("distance agrees with breadth-first search", "[tree]") {
    CHECK(build_tree(2, 2)->distance(0, 0) == 0);

    const auto ball = build_tree(2, 2);
    const Vertex layer1 = ball->layer_begin(1);
    CHECK(ball->distance(layer1, ball->first_child(layer1)) == 1);
    // distinct layer-2 vertices under different layer-1 parents
    const Vertex a = ball->first_child(layer1);
    const Vertex b = ball->first_child(layer1 + 1);
    CHECK(ball->distance(a, b) == 4);

    for (const std::int64_t q : {1, 2, 3}) {
        const auto big = build_tree(q, 6);
        const oracles::AdjacencyOracle oracle(*big);
        SeededRng rng(42);
        for (int i = 0; i < 40; ++i) {
            const Vertex u = static_cast<Vertex>(rng.next(big->vertex_count()));
            const Vertex v = static_cast<Vertex>(rng.next(big->vertex_count()));
            CHECK(big->distance(u, v) == oracle.distance(u, v));
            CHECK(big->distance(u, v) == big->distance(v, u));
        }
    }
}

TEST_CASE("spheres enumerate exactly the k-distant vertices", "[tree]") {
    const auto q3 = build_tree(3, 2);
    CHECK(q3->sphere(0, 1).size() == 4);
    CHECK(build_tree(2, 3)->sphere(5, 0) == std::vector<Vertex>{5});

    {
        const auto ball = build_tree(2, 3);
        const oracles::AdjacencyOracle oracle(*ball);
        const Vertex v = ball->layer_begin(1);
        auto got = ball->sphere(v, 2);
        auto want = oracle.sphere(v, 2);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
        CHECK(got.size() == 6);
    }

    for (const std::int64_t q : {1, 2, 3}) {
        const auto ball = build_tree(q, 6);
        const oracles::AdjacencyOracle oracle(*ball);
        SeededRng rng(7);
        for (int i = 0; i < 25; ++i) {
            const Vertex v = static_cast<Vertex>(rng.next(ball->vertex_count()));
            const std::int64_t max_k = 6 - ball->depth(v);
            const std::int64_t k = static_cast<std::int64_t>(rng.next(max_k + 1));
            auto got = ball->sphere(v, k);
            std::set<Vertex> unique(got.begin(), got.end());
            CHECK(unique.size() == got.size());
            std::sort(got.begin(), got.end());
            CHECK(got == oracle.sphere(v, k));
            if (v == 0 && k >= 1)
                CHECK(static_cast<std::int64_t>(got.size()) == (q + 1) * ipow(q, k - 1));
        }
    }
}

TEST_CASE("sphere leaving the ball is rejected", "[tree]") {
    const auto ball = build_tree(2, 3);
    const Vertex deep = ball->layer_begin(2);
    try {
        ball->sphere(deep, 2);
        FAIL("expected sphere-out-of-range");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::sphere_out_of_range);
    }
}

TEST_CASE("outward cones are the outward part of the sphere", "[tree]") {
    const auto ball = build_tree(2, 4);
    const Vertex v = ball->layer_begin(1);
    CHECK(ball->outward_cone(v, 1).size() == 2);
    CHECK(ball->outward_cone(v, 1)[0] == ball->first_child(v));
    CHECK(ball->outward_cone(v, 2).size() == 4);

    const auto q3 = build_tree(3, 4);
    const Vertex w = q3->layer_begin(2);
    const auto cone = q3->outward_cone(w, 1);
    const auto sibling_cone = q3->outward_cone(w + 1, 1);
    CHECK(cone.size() == 3);
    for (const Vertex s : cone) {
        CHECK(q3->distance(w, s) == 1);
        CHECK(q3->depth(s) == q3->depth(w) + 1);
        CHECK(std::find(sibling_cone.begin(), sibling_cone.end(), s) == sibling_cone.end());
    }

    // cone vertices sit inside the sphere of the same radius
    const auto sphere = ball->sphere(v, 2);
    for (const Vertex s : ball->outward_cone(v, 2))
        CHECK(std::find(sphere.begin(), sphere.end(), s) != sphere.end());
}

TEST_CASE("layer cones partition the deeper layer", "[tree]") {
    for (const std::int64_t q : {1, 2, 3}) {
        const auto ball = build_tree(q, 5);
        const std::int64_t m = 2, k = 2;
        std::set<Vertex> seen;
        for (Vertex v = ball->layer_begin(m); v < ball->layer_end(m); ++v)
            for (const Vertex s : ball->outward_cone(v, k)) {
                CHECK(!seen.count(s));
                seen.insert(s);
            }
        CHECK(static_cast<std::int64_t>(seen.size()) == ball->layer_size(m + k));
        CHECK(*seen.begin() == ball->layer_begin(m + k));
    }
}

TEST_CASE("distance decomposes through the meeting depth", "[tree]") {
    const auto ball = build_tree(2, 5);
    SeededRng rng(11);
    for (int i = 0; i < 30; ++i) {
        Vertex u = static_cast<Vertex>(rng.next(ball->vertex_count()));
        Vertex v = static_cast<Vertex>(rng.next(ball->vertex_count()));
        Vertex a = u, b = v;
        while (ball->depth(a) > ball->depth(b)) a = ball->parent(a);
        while (ball->depth(b) > ball->depth(a)) b = ball->parent(b);
        while (a != b) {
            a = ball->parent(a);
            b = ball->parent(b);
        }
        CHECK(ball->distance(u, v) == ball->depth(u) + ball->depth(v) - 2 * ball->depth(a));
    }
}
