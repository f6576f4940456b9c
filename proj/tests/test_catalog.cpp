#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidual/catalog.hpp"
#include "braidual/duality.hpp"
#include "support.hpp"

using namespace braidual;
using oracle::apply_at;
using oracle::basis;
using oracle::Vec;

namespace {

// [n]_p! with [k]_p = 1 + p + ... + p^(k-1).
Scalar q_factorial(const Scalar& p, int n) {
    Scalar f = 1;
    for (int k = 1; k <= n; ++k) {
        Scalar s = 0, pw = 1;
        for (int i = 0; i < k; ++i, pw *= p) s += pw;
        f *= s;
    }
    return f;
}

Scalar binomial(int n, int k) {
    Scalar b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

Vec mapped(const std::vector<Scalar>& phi, const Vec& v) {
    Vec out;
    for (const auto& [idx, c] : v) {
        Scalar s = c;
        for (auto i : idx) s *= phi[i];
        out[idx] += s;
    }
    return oracle::cleaned(out);
}

}  // namespace

TEST_CASE("catalog names") {
    CHECK(catalog_names().size() == 9);
    for (const auto& name : catalog_names()) CHECK(is_catalog_name(name));
    CHECK_FALSE(is_catalog_name("bline:q=2"));
    CHECK(oracle::thrown_kind([] { catalog_hopf("nope"); }) == ErrorKind::Parse);
    CHECK(oracle::thrown_kind([] { make_braided_line_truncated(0, 3); }) == ErrorKind::InvalidParameter);
    CHECK(oracle::thrown_kind([] { make_braided_line_truncated(2, 9); }) == ErrorKind::InvalidParameter);
    CHECK(oracle::thrown_kind([] { make_quantum_plane_truncated(2, -1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("every catalog constructor carries a passing report") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        auto h = catalog_hopf(name);
        CHECK(h.report().passed());
        CHECK(check_hopf(h.data()).passed());
    }
}

TEST_CASE("group algebra structure") {
    for (int n = 1; n <= 4; ++n) {
        auto h = make_group_bialgebra(n).data();
        for (std::size_t a = 0; a < std::size_t(n); ++a) {
            for (std::size_t b = 0; b < std::size_t(n); ++b)
                CHECK(apply_at(h.bialgebra.mult, 0, basis({a, b})) == basis({(a + b) % n}));
            CHECK(apply_at(h.bialgebra.comult, 0, basis({a})) == basis({a, a}));
            CHECK(apply_at(h.antipode, 0, basis({a})) == basis({(n - a) % n}));
        }
        CHECK(h.bialgebra.braiding.psi == flip(h.space(), h.space()));
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(q_binomial(2, 4, 2) == 35);
    CHECK(q_binomial(Scalar(1, 2), 3, 1) == Scalar(7, 4));
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(1, n, k) == binomial(n, k));
            for (const Scalar& q : {Scalar(2), Scalar(-3), Scalar(2, 3)})
                CHECK(q_binomial(q, n, k) == q_factorial(q, n) / (q_factorial(q, k) * q_factorial(q, n - k)));
        }
}

TEST_CASE("braided line coproduct uses gaussian binomials") {
    for (const Scalar& q : {Scalar(1), Scalar(2), Scalar(-1, 2)}) {
        auto g = make_braided_line_truncated(q, 4);
        const auto& h = g.hopf.data().bialgebra;
        for (std::size_t n = 0; n <= 4; ++n) {
            Vec expected;
            for (std::size_t k = 0; k <= n; ++k) expected[{k, n - k}] = q_binomial(q, int(n), int(k));
            CHECK(apply_at(h.comult, 0, basis({n})) == oracle::cleaned(expected));
            for (std::size_t m = 0; m <= 4; ++m) {
                Scalar qq = 1;
                for (std::size_t i = 0; i < n * m; ++i) qq *= q;
                CHECK(apply_at(h.braiding.psi, 0, basis({n, m})) == Vec{{{m, n}, qq}});
            }
        }
    }
}

TEST_CASE("q=1 graded instances are classical") {
    for (const auto& name : {"bline:q=1:deg=4", "qplane:q=1:deg=3"}) {
        CAPTURE(name);
        auto h = catalog_hopf(name).data().bialgebra;
        CHECK(h.braiding.psi == flip(h.space(), h.space()));
    }
}

TEST_CASE("truncation is reported as skipped, not passed") {
    auto g = make_braided_line_truncated(2, 4);
    auto r = check_hopf(g.hopf.data());
    CHECK(r.passed());
    CHECK(r.count(Verdict::Skipped) > 0);
    auto h = g.hopf.data().bialgebra;
    CHECK(h.mult.unknown(2 * 5 + 3));  // x^2 x^3 leaves degree 4
    CHECK_FALSE(h.mult.unknown(2 * 5 + 2));
}

TEST_CASE("graded checks up to a cutoff") {
    auto g = make_quantum_plane_truncated(2, 3);
    for (int c = 0; c <= 3; ++c) CHECK(check_graded_up_to(g, c).passed());
    CHECK(oracle::thrown_kind([&] { check_graded_up_to(g, 4); }) == ErrorKind::InvalidParameter);
    auto b = make_braided_line_truncated(Scalar(3, 2), 6);
    for (int c = 0; c <= 6; ++c) CHECK(check_graded_up_to(b, c).passed());
}

TEST_CASE("dual of the braided line is the braided line") {
    for (const Scalar& q : {Scalar(2), Scalar(-3), Scalar(1, 2)}) {
        CAPTURE(q.get_str());
        const int deg = 4;
        auto h = make_braided_line_truncated(q, deg).hopf.data().bialgebra;
        auto u = dual_bialgebra(h).bialgebra;
        // x^{n*} -> x^n / [n]_{1/q}!
        std::vector<Scalar> phi;
        for (int n = 0; n <= deg; ++n) phi.push_back(1 / q_factorial(1 / q, n));
        for (std::size_t a = 0; a <= deg; ++a) {
            CHECK(mapped(phi, apply_at(u.comult, 0, basis({a}))) ==
                  apply_at(h.comult, 0, mapped(phi, basis({a}))));
            for (std::size_t b = 0; a + b <= deg; ++b) {
                CHECK(mapped(phi, apply_at(u.mult, 0, basis({a, b}))) ==
                      apply_at(h.mult, 0, mapped(phi, basis({a, b}))));
                CHECK(mapped(phi, apply_at(u.braiding.psi, 0, basis({a, b}))) ==
                      apply_at(h.braiding.psi, 0, mapped(phi, basis({a, b}))));
            }
        }
        CHECK(u.unit.same_table(h.unit));
        CHECK(u.counit.same_table(h.counit));
    }
}
