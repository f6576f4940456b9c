#include "braidual/duality.hpp"

#include "braidual/twist.hpp"

namespace braidual {

namespace {

LinMap I(const Space& s) { return id(s); }

// Psi as a 4-tensor P[o1,o2,i1,i2], rebuilt by a leg map into a new map.
template <class Place>
LinMap reshape_braiding(const LinMap& psi, Shape dom, Shape cod, Place place) {
    const std::uint64_t n = psi.domain()[0].dim();
    LinMap out(std::move(dom), std::move(cod));
    for (std::uint64_t c = 0; c < psi.dom_dim(); ++c)
        for (const auto& [r, v] : psi.column(c)) {
            auto [row, col] = place(r / n, r % n, c / n, c % n, n);
            out.set(row, col, v);
        }
    return out;
}

LinMap dual_uu(const LinMap& p, const Space& u) {
    // Psi_UU[(r,s);(i,j)] = P[(j,i);(s,r)]
    return reshape_braiding(p, {u, u}, {u, u}, [](auto o1, auto o2, auto i1, auto i2, auto n) {
        return std::pair{i2 * n + i1, o2 * n + o1};
    });
}

LinMap dual_uh(const LinMap& p, const Space& h, const Space& u) {
    // Psi_UH[(r,t);(i,a)] = P[(i,r);(a,t)]
    return reshape_braiding(p, {u, h}, {h, u}, [](auto o1, auto o2, auto i1, auto i2, auto n) {
        return std::pair{o2 * n + i2, o1 * n + i1};
    });
}

LinMap dual_hu(const LinMap& p, const Space& h, const Space& u) {
    // Psi_HU[(s,p);(b,i)] = P[(p,i);(s,b)]
    return reshape_braiding(p, {h, u}, {u, h}, [](auto o1, auto o2, auto i1, auto i2, auto n) {
        return std::pair{i1 * n + o1, i2 * n + o2};
    });
}

CrossBraiding make_cross(const LinMap& f, Provenance p) {
    try {
        return CrossBraiding::from(f, p);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            throw Error(ErrorKind::NotClosed, "induced braiding is not invertible");
        throw;
    }
}

// Transpose of a map with every factor sent to its dual; legs keep their order.
LinMap dual_map(const LinMap& f) { return mask_truncation(transpose(f)); }


}  // namespace

LinMap nested_pairing(const Space& h) {
    Space u = h.dual();
    return evaluation(h) * tensor({I(u), evaluation(h), I(h)});
}

LinMap factorwise_pairing(const Shape& hs) {
    // f_1..f_n, a_1..a_n -> f_1 a_1 ... f_n a_n
    const std::size_t n = hs.size();
    Shape in;
    for (const auto& s : hs) in.push_back(s.dual());
    for (const auto& s : hs) in.push_back(s);
    std::vector<int> perm;
    for (std::size_t i = 0; i < n; ++i) {
        perm.push_back(static_cast<int>(i));
        perm.push_back(static_cast<int>(n + i));
    }
    LinMap evs = LinMap::identity({});
    for (const auto& s : hs) evs = tensor(evs, evaluation(s));
    return evs * permutation(in, perm);
}

InducedBraidings induce_dual_braidings(const Braiding& b) {
    const Space& h = b.space;
    Space u = h.dual();
    LinMap uu = dual_uu(b.psi, u);
    LinMap uu_inv = dual_uu(b.psi_inv, u);
    return {h,
            u,
            Braiding{u, uu, uu_inv},
            make_cross(dual_uh(b.psi, h, u), Provenance::InducedDual),
            make_cross(dual_uh(b.psi_inv, h, u), Provenance::InducedDualCirc),
            make_cross(dual_hu(b.psi, h, u), Provenance::InducedDual),
            make_cross(dual_hu(b.psi_inv, h, u), Provenance::InducedDualCirc)};
}

CheckReport check_induced_braidings(const InducedBraidings& ib, const Braiding& b) {
    const Space& h = ib.h;
    const Space& u = ib.u;
    CheckReport r;
    LinMap nested = nested_pairing(h);
    LinMap tau = flip(h, h);
    // (Psi_UU(f(x)g))(b(x)a) = <<f(x)g, Psi(a(x)b)>>
    compare(r, "UU", "", factorwise_pairing({h, h}) * tensor(ib.psi_uu.psi, LinMap::identity({h, h})),
            nested * tensor({I(u), I(u), b.psi * tau}));
    compare(r, "UU", "inverse", ib.psi_uu.psi * ib.psi_uu.psi_inv, LinMap::identity({u, u}));
    // Psi_UH(g(x)a)(f(x)b) = <<f(x)g, Psi^{+-1}(a(x)b)>>, legs g,a,f,b
    LinMap pair2 = tensor(evaluation(h), evaluation(h));
    // Psi_UH(g(x)a)(f(x)b) = <<f(x)g, Psi^{+-1}(a(x)b)>>; output a'(x)g' pairs as f(a') g'(b)
    auto uh_check = [&](const char* eq, const LinMap& x, const LinMap& p) {
        LinMap l = pair2 * permutation({h, u, u, h}, {2, 0, 1, 3}) *
                   tensor(x, LinMap::identity({u, h}));
        LinMap rr = nested * tensor({I(u), I(u), p}) * permutation({u, h, u, h}, {2, 0, 1, 3});
        compare(r, eq, "", l, rr);
    };
    uh_check("PsiHH", ib.psi_uh.psi, b.psi);
    uh_check("PsiHHcirc", ib.psi_uh_circ.psi, b.psi_inv);
    // Psi_HU(b(x)f)(a(x)g) = <<f(x)g, Psi^{+-1}(a(x)b)>>; output f'(x)b' pairs as f'(a) g(b')
    auto hu_check = [&](const char* eq, const LinMap& x, const LinMap& p) {
        // legs f',b',a,g -> f'(a) g(b')
        LinMap l = pair2 * permutation({u, h, h, u}, {0, 2, 3, 1}) *
                   tensor(x, LinMap::identity({h, u}));
        // legs b,f,a,g -> f,g,a,b
        LinMap rr = nested * tensor({I(u), I(u), p}) * permutation({h, u, h, u}, {1, 3, 2, 0});
        compare(r, eq, "", l, rr);
    };
    hu_check("PHU", ib.psi_hu.psi, b.psi);
    hu_check("PHU", ib.psi_hu_circ.psi, b.psi_inv);
    r.append(check_yang_baxter(ib.psi_uu.psi), "Ψ_UU");
    auto hexes = [&](const CrossBraiding& x, const LinMap& left_b, const LinMap& right_b,
                     const std::string& ctx) {
        r.append(check_hexagon_left(x, left_b), ctx);
        r.append(check_hexagon_right(x, right_b), ctx);
    };
    for (bool inv : {false, true}) {
        const LinMap& puu = inv ? ib.psi_uu.psi_inv : ib.psi_uu.psi;
        const LinMap& phh = inv ? b.psi_inv : b.psi;
        std::string s = inv ? " (Ψ⁻¹)" : "";
        hexes(ib.psi_uh, puu, phh, "Ψ_UH" + s);
        hexes(ib.psi_uh_circ, puu, phh, "Ψ°_UH" + s);
        hexes(ib.psi_hu, phh, puu, "Ψ_HU" + s);
        hexes(ib.psi_hu_circ, phh, puu, "Ψ°_HU" + s);
    }
    return r;
}

}  // namespace braidual

namespace braidual {

namespace {

LinMap I2(const Space& s) { return id(s); }

Braiding dual_braiding(const Braiding& b) {
    Space u = b.space.dual();
    return {u, dual_uu(b.psi, u), dual_uu(b.psi_inv, u)};
}

}  // namespace

AlgebraData dual_algebra(const CoalgebraData& h, DualProduct variant) {
    const Braiding& b = h.braiding;
    const LinMap& p = variant == DualProduct::Star ? b.psi : b.psi_inv;
    LinMap m = dual_map(flip(h.space(), h.space()) * p * h.comult);
    return {dual_braiding(b), m, dual_map(h.counit)};
}

CoalgebraData dual_coalgebra(const AlgebraData& h, DualCoproduct variant) {
    const Braiding& b = h.braiding;
    const LinMap& p = variant == DualCoproduct::UnderlineDelta ? b.psi : b.psi_inv;
    LinMap d = dual_map(h.mult * p * flip(h.space(), h.space()));
    return {dual_braiding(b), d, dual_map(h.unit)};
}

DualBialgebra dual_bialgebra(const BialgebraData& h) {
    InducedBraidings ib = induce_dual_braidings(h.braiding);
    AlgebraData a = dual_algebra(h.coalgebra(), DualProduct::UnderlineM);
    CoalgebraData c = dual_coalgebra(h.algebra(), DualCoproduct::UnderlineDelta);
    BialgebraData u{ib.psi_uu, a.mult, a.unit, c.comult, c.counit};
    DualPairing p{ib.u, ib.h, evaluation(h.space()), ib.psi_uh_circ};
    return {std::move(u), std::move(p), std::move(ib)};
}

HopfData dual_hopf(const HopfData& h) {
    DualBialgebra d = dual_bialgebra(h.bialgebra);
    HopfData out{d.bialgebra, dual_map(h.antipode), std::nullopt};
    if (h.antipode_inv) out.antipode_inv = dual_map(*h.antipode_inv);
    LinMap solved = solve_antipode(out.bialgebra);
    if (!(solved.same_table(out.antipode)))
        throw Error(ErrorKind::Validation, "transposed antipode differs from the solved one");
    return out;
}

CheckReport verify_dual_pairing(const DualPairing& p, const BialgebraData& u,
                                const BialgebraData& h) {
    const Space& U = p.left;
    const Space& H = p.right;
    if (u.space() != U || h.space() != H)
        throw Error(ErrorKind::ShapeMismatch, "pairing spaces do not match the bialgebras");
    CheckReport r;
    LinMap pp = tensor(p.eval, p.eval) * tensor({I2(U), p.upsilon.psi, I2(H)});
    compare(r, "mD", "", p.eval * tensor(u.mult, I2(H)),
            pp * tensor({I2(U), I2(U), h.comult}));
    compare(r, "Dm", "", p.eval * tensor(I2(U), h.mult),
            pp * tensor({u.comult, I2(H), I2(H)}));
    compare(r, "1a", "⟨1,a⟩ = ε(a)", p.eval * tensor(u.unit, I2(H)), h.counit);
    compare(r, "1a", "⟨h,1⟩ = ε(h)", p.eval * tensor(I2(U), h.unit), u.counit);
    LinMap gram({H}, {U.dual()});
    bool shapes_dual = U.dim() == H.dim();
    if (shapes_dual) {
        for (std::uint64_t c = 0; c < p.eval.dom_dim(); ++c)
            for (const auto& [row, v] : p.eval.column(c)) gram.set(c / H.dim(), c % H.dim(), v);
    }
    bool nondeg = shapes_dual;
    if (nondeg) {
        try {
            invert(gram);
        } catch (const Error&) {
            nondeg = false;
        }
    }
    record(r, "nondeg", "", nondeg, nondeg ? "" : "Gram matrix is singular");
    const CrossBraiding& x = p.upsilon;
    r.append(check_hexagon_left(x, u.braiding.psi), "Υ");
    r.append(check_hexagon_right(x, h.braiding.psi), "Υ");
    r.append(check_mult_compat(x, u.algebra(), Which::V), "Υ");
    r.append(check_mult_compat(x, h.algebra(), Which::W), "Υ");
    r.append(check_comult_compat(x, u.coalgebra(), Which::V), "Υ");
    r.append(check_comult_compat(x, h.coalgebra(), Which::W), "Υ");
    return r;
}

CheckReport verify_dual_pairing(const DualPairing& p, const HopfData& u, const HopfData& h) {
    CheckReport r = verify_dual_pairing(p, u.bialgebra, h.bialgebra);
    compare(r, "pairS", "", p.eval * tensor(u.antipode, I2(p.right)),
            p.eval * tensor(I2(p.left), h.antipode));
    return r;
}

namespace {

CheckReport iota_checks(const BialgebraData& h, const BialgebraData& w) {
    if (w.space() != h.space())
        throw Error(ErrorKind::ShapeMismatch, "double dual does not land on the original space");
    CheckReport r;
    LinMap iota = I2(h.space());
    compare(r, "hom.m", "ι∘m = m̲∘(ι⊗ι)", iota * h.mult, w.mult * tensor(iota, iota));
    compare(r, "dud", "(ι⊗ι)∘Δ = Δ̲∘ι", tensor(iota, iota) * h.comult, w.comult * iota);
    compare(r, "hom.eps", "", w.counit * iota, h.counit);
    compare(r, "hom.1", "", iota * h.unit, w.unit);
    compare(r, "hom.Psi", "", tensor(iota, iota) * h.braiding.psi,
            w.braiding.psi * tensor(iota, iota));
    return r;
}

}  // namespace

CheckReport double_dual_iso(const BialgebraData& h) {
    DualBialgebra u = dual_bialgebra(h);
    DualBialgebra w = dual_bialgebra(u.bialgebra);
    CheckReport r = iota_checks(h, w.bialgebra);
    r.append(check_bialgebra(w.bialgebra), "ι(H)");
    return r;
}

CheckReport double_dual_iso(const HopfData& h) {
    HopfData u = dual_hopf(h);
    HopfData w = dual_hopf(u);
    CheckReport r = iota_checks(h.bialgebra, w.bialgebra);
    compare(r, "hom.S", "S∘ι = ι∘S", w.antipode, h.antipode);
    r.append(check_hopf(w), "ι(H)");
    return r;
}

CheckReport dual_of_twist(const BialgebraData& h, int n) {
    if (n < -kMaxTwist || n > kMaxTwist)
        throw Error(ErrorKind::InvalidParameter, "|n| must not exceed the twist bound");
    DualBialgebra d = dual_bialgebra(h);
    const int wide = 2 * kMaxTwist;
    CheckReport r;
    auto tag = [](const char* s, int a, int b) {
        return std::string(s) + "^(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    BialgebraData ht = twist(h, n, -n, TwistBraiding::Psi, wide).data;
    BialgebraData ut = twist(d.bialgebra, -n, n, TwistBraiding::Psi, wide).data;
    r.append(verify_dual_pairing(d.pairing, ut, ht), tag("U", -n, n) + " | " + tag("H", n, -n));
    BialgebraData hi = twist(h, n - 1, -n, TwistBraiding::PsiInv, wide).data;
    BialgebraData ui = twist(d.bialgebra, 2 - n, n - 3, TwistBraiding::PsiInv, wide).data;
    DualPairing plain = d.pairing;
    plain.upsilon = d.induced.psi_uh;
    r.append(verify_dual_pairing(plain, ui, hi),
             tag("U", 2 - n, n - 3) + " | " + tag("H", n - 1, -n));
    return r;
}

}  // namespace braidual
