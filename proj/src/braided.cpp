#include "braidual/braided.hpp"

#include <map>

#include "braidual/error.hpp"

namespace braidual {

namespace {

LinMap I(const Space& s) { return id(s); }

Space square_space(const LinMap& psi, const char* what) {
    if (psi.domain().size() != 2 || psi.domain()[0] != psi.domain()[1] ||
        psi.codomain() != psi.domain())
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": expected a map on V⊗V");
    return psi.domain()[0];
}

void add_algebra_laws(CheckReport& r, const AlgebraData& a) {
    const Space& h = a.space();
    const LinMap& m = a.mult;
    compare(r, "assoc", "", m * tensor(m, I(h)), m * tensor(I(h), m));
    compare(r, "unit", "left", m * tensor(a.unit, I(h)), I(h));
    compare(r, "unit", "right", m * tensor(I(h), a.unit), I(h));
    auto self = CrossBraiding::self(a.braiding);
    r.append(check_mult_compat(self, a, Which::V));
    r.append(check_mult_compat(self, a, Which::W));
    const LinMap& psi = a.braiding.psi;
    compare(r, "Pmm", "", psi * tensor(m, m),
            tensor(m, m) * tensor({I(h), psi, I(h)}) * tensor(psi, psi) *
                tensor({I(h), psi, I(h)}));
}

void add_coalgebra_laws(CheckReport& r, const CoalgebraData& c) {
    const Space& h = c.space();
    const LinMap& d = c.comult;
    compare(r, "coassoc", "", tensor(d, I(h)) * d, tensor(I(h), d) * d);
    compare(r, "counit", "left", tensor(c.counit, I(h)) * d, I(h));
    compare(r, "counit", "right", tensor(I(h), c.counit) * d, I(h));
    auto self = CrossBraiding::self(c.braiding);
    r.append(check_comult_compat(self, c, Which::V));
    r.append(check_comult_compat(self, c, Which::W));
    const LinMap& psi = c.braiding.psi;
    compare(r, "PDD", "", tensor(d, d) * psi,
            tensor({I(h), psi, I(h)}) * tensor(psi, psi) * tensor({I(h), psi, I(h)}) *
                tensor(d, d));
}

void add_braiding_laws(CheckReport& r, const Braiding& b) {
    r.append(check_yang_baxter(b.psi));
    compare(r, "YBE", "Ψ·Ψ⁻¹", b.psi * b.psi_inv, LinMap::identity(b.psi.domain()));
    auto self = CrossBraiding::self(b);
    r.append(check_hexagon_left(self, b.psi));
    r.append(check_hexagon_right(self, b.psi));
}

}  // namespace

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::Given: return "given";
    case Provenance::InducedDual: return "induced";
    case Provenance::InducedDualCirc: return "induced-circ";
    case Provenance::DoubleDualBullet: return "bullet";
    }
    return "?";
}

Braiding Braiding::from(const LinMap& psi) {
    Space v = square_space(psi, "braiding");
    return {v, psi, invert(psi)};
}

Braiding Braiding::flip_on(const Space& v) {
    LinMap f = flip(v, v);
    return {v, f, f};
}

CrossBraiding CrossBraiding::from(const LinMap& psi, Provenance p) {
    if (psi.domain().size() != 2 || psi.codomain().size() != 2 ||
        psi.domain()[0] != psi.codomain()[1] || psi.domain()[1] != psi.codomain()[0])
        throw Error(ErrorKind::ShapeMismatch, "cross-braiding must map V⊗W to W⊗V");
    return {psi.domain()[0], psi.domain()[1], psi, invert(psi), p};
}

CrossBraiding CrossBraiding::self(const Braiding& b) {
    return {b.space, b.space, b.psi, b.psi_inv, Provenance::Given};
}

CrossBraiding CrossBraiding::flip_between(const Space& v, const Space& w) {
    return {v, w, flip(v, w), flip(w, v), Provenance::Given};
}

bool operator==(const Braiding& a, const Braiding& b) {
    return a.space == b.space && a.psi == b.psi && a.psi_inv == b.psi_inv;
}

bool operator==(const BialgebraData& a, const BialgebraData& b) {
    return a.braiding == b.braiding && a.mult == b.mult && a.unit == b.unit &&
           a.comult == b.comult && a.counit == b.counit;
}

bool operator==(const HopfData& a, const HopfData& b) {
    return a.bialgebra == b.bialgebra && a.antipode == b.antipode &&
           a.antipode_inv == b.antipode_inv;
}

CheckReport check_yang_baxter(const LinMap& psi) {
    Space v = square_space(psi, "YBE");
    CheckReport r;
    compare(r, "YBE", "", tensor(psi, I(v)) * tensor(I(v), psi) * tensor(psi, I(v)),
            tensor(I(v), psi) * tensor(psi, I(v)) * tensor(I(v), psi));
    return r;
}

CheckReport check_hexagon_left(const CrossBraiding& x, const LinMap& psi_vv) {
    const Space& v = x.left;
    const Space& w = x.right;
    CheckReport r;
    compare(r, "VW", "", tensor(x.psi, I(v)) * tensor(I(v), x.psi) * tensor(psi_vv, I(w)),
            tensor(I(w), psi_vv) * tensor(x.psi, I(v)) * tensor(I(v), x.psi));
    return r;
}

CheckReport check_hexagon_right(const CrossBraiding& x, const LinMap& psi_ww) {
    const Space& v = x.left;
    const Space& w = x.right;
    CheckReport r;
    compare(r, "WV", "", tensor(I(w), x.psi) * tensor(x.psi, I(w)) * tensor(I(v), psi_ww),
            tensor(psi_ww, I(v)) * tensor(I(w), x.psi) * tensor(x.psi, I(w)));
    return r;
}

CheckReport check_mult_compat(const CrossBraiding& x, const AlgebraData& a, Which side) {
    const Space& v = x.left;
    const Space& w = x.right;
    const LinMap& m = a.mult;
    CheckReport r;
    if (side == Which::V) {
        compare(r, "AWm", "", x.psi * tensor(m, I(w)),
                tensor(I(w), m) * tensor(x.psi, I(v)) * tensor(I(v), x.psi));
        compare(r, "1W", "", x.psi * tensor(a.unit, I(w)), tensor(I(w), a.unit));
    } else {
        compare(r, "VAm", "", x.psi * tensor(I(v), m),
                tensor(m, I(v)) * tensor(I(w), x.psi) * tensor(x.psi, I(w)));
        compare(r, "V1", "", x.psi * tensor(I(v), a.unit), tensor(a.unit, I(v)));
    }
    return r;
}

CheckReport check_comult_compat(const CrossBraiding& x, const CoalgebraData& c, Which side) {
    const Space& v = x.left;
    const Space& w = x.right;
    const LinMap& d = c.comult;
    CheckReport r;
    if (side == Which::V) {
        compare(r, "PHW", "", tensor(I(w), d) * x.psi,
                tensor(x.psi, I(v)) * tensor(I(v), x.psi) * tensor(d, I(w)));
        compare(r, "PHW.eps", "", tensor(I(w), c.counit) * x.psi, tensor(c.counit, I(w)));
    } else {
        compare(r, "PVH", "", tensor(d, I(v)) * x.psi,
                tensor(I(w), x.psi) * tensor(x.psi, I(w)) * tensor(I(v), d));
        compare(r, "PVH.eps", "", tensor(c.counit, I(v)) * x.psi, tensor(I(v), c.counit));
    }
    return r;
}

CheckReport check_braiding(const Braiding& b) {
    CheckReport r;
    add_braiding_laws(r, b);
    return r;
}

CheckReport check_algebra(const AlgebraData& a) {
    CheckReport r;
    add_braiding_laws(r, a.braiding);
    add_algebra_laws(r, a);
    return r;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
    CheckReport r;
    add_braiding_laws(r, c.braiding);
    add_coalgebra_laws(r, c);
    return r;
}

CheckReport check_bialgebra(const BialgebraData& h) {
    CheckReport r;
    add_braiding_laws(r, h.braiding);
    add_algebra_laws(r, h.algebra());
    add_coalgebra_laws(r, h.coalgebra());
    const Space& s = h.space();
    const LinMap& psi = h.braiding.psi;
    compare(r, "Dcm", "", h.comult * h.mult,
            tensor(h.mult, h.mult) * tensor({I(s), psi, I(s)}) * tensor(h.comult, h.comult));
    compare(r, "eps.m", "", h.counit * h.mult, tensor(h.counit, h.counit));
    compare(r, "eps.1", "", h.counit * h.unit, LinMap::identity({}));
    compare(r, "Delta.1", "", h.comult * h.unit, tensor(h.unit, h.unit));
    return r;
}

CheckReport check_antipode_identities(const HopfData& hd) {
    const BialgebraData& h = hd.bialgebra;
    const Space& s = h.space();
    const LinMap& S = hd.antipode;
    const LinMap& psi = h.braiding.psi;
    CheckReport r;
    LinMap unit_counit = h.unit * h.counit;
    compare(r, "conv", "S∗id", h.mult * tensor(S, I(s)) * h.comult, unit_counit);
    compare(r, "conv", "id∗S", h.mult * tensor(I(s), S) * h.comult, unit_counit);
    compare(r, "Sbraid", "Ψ(S⊗id)", psi * tensor(S, I(s)), tensor(I(s), S) * psi);
    compare(r, "Sbraid", "Ψ(id⊗S)", psi * tensor(I(s), S), tensor(S, I(s)) * psi);
    compare(r, "Sbraid", "S∘m", S * h.mult, h.mult * psi * tensor(S, S));
    compare(r, "Sbraid", "Δ∘S", h.comult * S, psi * tensor(S, S) * h.comult);
    compare(r, "Sbraid", "ε∘S", h.counit * S, h.counit);
    if (hd.antipode_inv) {
        compare(r, "Sinv", "S∘S⁻¹", S * *hd.antipode_inv, I(s));
        compare(r, "Sinv", "S⁻¹∘S", *hd.antipode_inv * S, I(s));
    }
    return r;
}

CheckReport check_hopf(const HopfData& h) {
    CheckReport r = check_bialgebra(h.bialgebra);
    r.append(check_antipode_identities(h));
    return r;
}

LinMap convolution(const LinMap& phi, const LinMap& psi, const CoalgebraData& coalg,
                   const AlgebraData& alg) {
    return alg.mult * tensor(phi, psi) * coalg.comult;
}

LinMap solve_antipode(const BialgebraData& h) {
    const Space& s = h.space();
    const std::size_t n = s.dim();
    // Unknowns S[i][p] restricted to degree-preserving positions.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            if (s.signed_degree(i) == s.signed_degree(p)) {
                var[{i, p}] = vars.size();
                vars.emplace_back(i, p);
            }
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    LinMap target = h.unit * h.counit;
    for (std::size_t a = 0; a < n; ++a) {
        if (h.comult.unknown(a)) continue;
        std::map<std::uint64_t, std::vector<Scalar>> eqs;  // output row -> coefficients
        bool usable = true;
        for (const auto& [pq, c] : h.comult.column(a)) {
            std::size_t p = pq / n, q = pq % n;
            for (std::size_t i = 0; i < n; ++i) {
                auto it = var.find({i, p});
                if (it == var.end()) continue;
                std::uint64_t col = i * n + q;
                if (h.mult.unknown(col)) {
                    usable = false;
                    continue;
                }
                for (const auto& [row, mv] : h.mult.column(col)) {
                    auto& e = eqs[row];
                    if (e.empty()) e.assign(vars.size(), 0);
                    e[it->second] += c * mv;
                }
            }
        }
        if (!usable) continue;
        for (std::uint64_t row = 0; row < n; ++row) {
            auto it = eqs.find(row);
            rows.push_back(it == eqs.end() ? std::vector<Scalar>(vars.size(), 0) : it->second);
            rhs.push_back(target.at(row, a));
        }
    }
    bool unique = false;
    auto sol = solve_linear(rows, rhs, &unique);
    if (!sol) throw Error(ErrorKind::NoAntipode, "antipode equation is inconsistent");
    if (!unique) throw Error(ErrorKind::NoAntipode, "antipode equation is underdetermined");
    LinMap S({s}, {s});
    for (std::size_t k = 0; k < vars.size(); ++k) S.set(vars[k].first, vars[k].second, (*sol)[k]);
    CheckReport right;
    compare(right, "conv", "id∗S", h.mult * tensor(I(s), S) * h.comult, target);
    if (!right.passed()) throw Error(ErrorKind::NoAntipode, "left inverse is not a right inverse");
    return S;
}

void throw_if_failed(const CheckReport& r, ErrorKind kind, const std::string& what) {
    if (const CheckEntry* e = r.first_failure()) {
        std::string msg = what + ": equation " + e->equation;
        if (!e->context.empty()) msg += " [" + e->context + "]";
        if (e->witness) msg += " fails at " + e->witness->domain_label;
        throw Error(kind, msg);
    }
}

BraidedAlgebra BraidedAlgebra::make(AlgebraData d) {
    CheckReport r = check_algebra(d);
    throw_if_failed(r, ErrorKind::Validation, "braided algebra");
    return BraidedAlgebra(std::move(d), std::move(r));
}

BraidedCoalgebra BraidedCoalgebra::make(CoalgebraData d) {
    CheckReport r = check_coalgebra(d);
    throw_if_failed(r, ErrorKind::Validation, "braided coalgebra");
    return BraidedCoalgebra(std::move(d), std::move(r));
}

BraidedBialgebra BraidedBialgebra::make(BialgebraData d) {
    CheckReport r = check_bialgebra(d);
    throw_if_failed(r, ErrorKind::Validation, "braided bialgebra");
    return BraidedBialgebra(std::move(d), std::move(r));
}

BraidedHopf BraidedHopf::make(HopfData d) {
    CheckReport r = check_hopf(d);
    throw_if_failed(r, ErrorKind::Validation, "braided Hopf algebra");
    return BraidedHopf(std::move(d), std::move(r));
}

BraidedBialgebra braided_tensor_bialgebra(const BialgebraData& a, const BialgebraData& b,
                                          const CrossBraiding& x) {
    const Space& A = a.space();
    const Space& B = b.space();
    if (x.left != A || x.right != B)
        throw Error(ErrorKind::ShapeMismatch, "braided tensor: cross-braiding must be A⊗B→B⊗A");
    CrossBraiding x_ba = x.inverse();
    CheckReport pre;
    pre.append(check_hexagon_left(x, a.braiding.psi));
    pre.append(check_hexagon_right(x, b.braiding.psi));
    pre.append(check_mult_compat(x_ba, b.algebra(), Which::V));
    pre.append(check_mult_compat(x_ba, a.algebra(), Which::W));
    pre.append(check_comult_compat(x, a.coalgebra(), Which::V));
    pre.append(check_comult_compat(x, b.coalgebra(), Which::W));
    throw_if_failed(pre, ErrorKind::PrecheckFailed, "braided tensor product");

    Space ab = product_space({A, B}, A.name() + "⊗" + B.name());
    LinMap m = tensor(a.mult, b.mult) * tensor({I(A), x_ba.psi, I(B)});
    LinMap u = tensor(a.unit, b.unit);
    LinMap d = tensor({I(A), x.psi, I(B)}) * tensor(a.comult, b.comult);
    LinMap e = tensor(a.counit, b.counit);
    LinMap psi = tensor({I(A), x.psi, I(B)}) * tensor(a.braiding.psi, b.braiding.psi) * tensor({I(A), x.psi_inv, I(B)});
    BialgebraData out{
        Braiding::from(with_shapes(psi, {ab, ab}, {ab, ab})),
        with_shapes(m, {ab, ab}, {ab}),
        with_shapes(u, {}, {ab}),
        with_shapes(d, {ab}, {ab, ab}),
        with_shapes(e, {ab}, {}),
    };
    return BraidedBialgebra::make(std::move(out));
}

}  // namespace braidual
