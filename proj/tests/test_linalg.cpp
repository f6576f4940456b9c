#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidual/catalog.hpp"
#include "braidual/linmap.hpp"
#include "support.hpp"

using namespace braidual;
using oracle::dense;

namespace {

Space k2() { return Space::numbered("A", 2); }
Space k3() { return Space::numbered("B", 3); }

}  // namespace

TEST_CASE("identity after flip is the flip") {
    auto v = k2();
    auto f = flip(v, v);
    CHECK(compose(LinMap::identity({v, v}), f) == f);
}

TEST_CASE("flip is an involution") {
    auto v = k2();
    CHECK(compose(flip(v, v), flip(v, v)) == LinMap::identity({v, v}));
}

TEST_CASE("composing across mismatched spaces is a shape error") {
    LinMap f({k2()}, {k2()}), g({k3()}, {k3()});
    CHECK(oracle::thrown_kind([&] { compose(g, f); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("compose and tensor agree with dense products") {
    std::mt19937 rng(7);
    auto a = k2(), b = k3();
    for (int trial = 0; trial < 20; ++trial) {
        auto f = oracle::random_map({a, b}, {b}, rng);
        auto g = oracle::random_map({b}, {a, a}, rng);
        CHECK(dense(compose(g, f)) == oracle::matmul(dense(g), dense(f)));
        auto h = oracle::random_map({a}, {b}, rng);
        CHECK(dense(tensor(f, h)) == oracle::kron(dense(f), dense(h)));
    }
}

TEST_CASE("tensoring with the identity on K changes nothing but shapes") {
    std::mt19937 rng(3);
    auto f = oracle::random_map({k2()}, {k3()}, rng);
    auto t = tensor(LinMap::identity({}), f);
    CHECK(t.same_table(f));
}

TEST_CASE("flip tensor flip on four copies of K2 has 16 unit entries") {
    auto v = k2();
    auto t = tensor(flip(v, v), flip(v, v));
    CHECK(t.nnz() == 16);
    for (std::uint64_t c = 0; c < t.dom_dim(); ++c) {
        REQUIRE(t.column(c).size() == 1);
        CHECK(t.column(c)[0].second == 1);
    }
}

TEST_CASE("tensor is functorial") {
    std::mt19937 rng(11);
    auto a = k2(), b = k3();
    auto f = oracle::random_map({a}, {b}, rng), g = oracle::random_map({b}, {a}, rng);
    auto f2 = oracle::random_map({b}, {a}, rng), g2 = oracle::random_map({a}, {b, a}, rng);
    CHECK(compose(tensor(f2, g2), tensor(f, g)) == tensor(compose(f2, f), compose(g2, g)));
}

TEST_CASE("tensor associates as coefficient tables") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = oracle::random_map({k2()}, {k3()}, rng);
        auto g = oracle::random_map({k3()}, {k2()}, rng);
        auto h = oracle::random_map({k2()}, {k2()}, rng);
        CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    }
}

TEST_CASE("inverse of the flip is the flip") {
    auto v = k3();
    CHECK(invert(flip(v, v)) == flip(v, v));
}

TEST_CASE("superline braiding is its own inverse and symmetric") {
    auto h = make_superline().data().bialgebra.braiding;
    auto sq = oracle::matmul(dense(h.psi), dense(h.psi));
    CHECK(sq == oracle::eye(4));
    CHECK(invert(h.psi) == h.psi);
    CHECK(transpose(h.psi).same_table(h.psi));
}

TEST_CASE("a map with two equal rows is singular") {
    auto v = k2();
    auto f = oracle::table({v}, {v}, {{0, 0, 1}, {0, 1, 2}, {1, 0, 1}, {1, 1, 2}});
    CHECK(oracle::thrown_kind([&] { invert(f); }) == ErrorKind::Singular);
}

TEST_CASE("transpose is an involution fixing the identity") {
    std::mt19937 rng(9);
    CHECK(transpose(LinMap::identity({k3()})).same_table(LinMap::identity({k3()})));
    auto f = oracle::random_map({k2(), k3()}, {k3()}, rng);
    CHECK(transpose(transpose(f)).same_table(f));
}

TEST_CASE("random invertible maps invert exactly") {
    std::mt19937 rng(13);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 25; ++trial) {
        std::size_t n = 1 + trial % 8;
        auto s = Space::numbered("R", n);
        auto f = oracle::random_map({s}, {s}, rng, 1);
        LinMap inv;
        try {
            inv = invert(f);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Singular);
            continue;
        }
        ++done;
        CHECK(dense(compose(f, inv)) == oracle::eye(n));
        CHECK(dense(compose(inv, f)) == oracle::eye(n));
    }
    CHECK(done >= 10);
}

TEST_CASE("rational arithmetic distributes exactly") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = oracle::random_rational(rng), b = oracle::random_rational(rng),
             c = oracle::random_rational(rng);
        CHECK((a + b) * c == a * c + b * c);
    }
    CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
    CHECK(to_string(Scalar(-3, 2)) == "-3/2");
    CHECK(oracle::thrown_kind([] { parse_scalar("1.5"); }) == ErrorKind::Parse);
}

TEST_CASE("dual of the dual is the original space") {
    Space v("V", {"a", "b"}, {0, 2}, 3);
    CHECK(v.dual().dual() == v);
    CHECK(v.dual().label(1) == "b*");
    CHECK(v.dual().signed_degree(1) == -2);
}

TEST_CASE("permute_legs moving a leg across dualizes it") {
    std::mt19937 rng(19);
    auto a = k2(), b = k3();
    auto f = oracle::random_map({a}, {b}, rng);
    // legs: 0 = codomain b, 1 = domain a; put both in the domain
    auto g = permute_legs(f, {1, 0}, 0);
    REQUIRE(g.domain() == Shape{a, b.dual()});
    REQUIRE(g.codomain().empty());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) CHECK(oracle::coeff(g, {}, {i, j}) == f.at(j, i));
}

TEST_CASE("evaluation pairs dual basis vectors") {
    auto v = k3();
    auto ev = evaluation(v);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(oracle::coeff(ev, {}, {i, j}) == (i == j ? 1 : 0));
}

TEST_CASE("linear solve reports inconsistency and uniqueness") {
    bool unique = false;
    auto x = solve_linear({{1, 1}, {1, -1}}, {3, 1}, &unique);
    REQUIRE(x);
    CHECK(unique);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_linear({{1, 1}, {2, 2}}, {1, 3}, &unique));
    auto y = solve_linear({{1, 1}, {2, 2}}, {1, 2}, &unique);
    REQUIRE(y);
    CHECK_FALSE(unique);
}
