#include "braidual/twist.hpp"

#include <cstdlib>

namespace braidual {

namespace {

void check_bounds(int k, int n, int bound = kMaxTwist) {
    if (std::abs(k) > bound || std::abs(n) > bound)
        throw Error(ErrorKind::InvalidParameter,
                    "twist exponents must satisfy |k|, |n| <= " + std::to_string(bound));
}

std::string label(int k, int n) {
    return "H^(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

}  // namespace

TwistedStructure twist(const BialgebraData& h, int k, int n, TwistBraiding braiding,
                       int bound) {
    check_bounds(k, n, bound);
    const Braiding& b = h.braiding;
    BialgebraData d = h;
    if (k != 0) d.mult = h.mult * b.power(k);
    if (n != 0) d.comult = b.power(n) * h.comult;
    if (braiding == TwistBraiding::PsiInv) d.braiding = b.inverse();
    return {std::move(d), k, n, braiding};
}

CheckReport check_twist_bialgebra(const BialgebraData& h, int n) {
    CheckReport r;
    r.append(check_bialgebra(twist(h, n, -n).data), label(n, -n) + " Ψ");
    r.append(check_bialgebra(twist(h, n - 1, -n, TwistBraiding::PsiInv).data),
             label(n - 1, -n) + " Ψ⁻¹");
    return r;
}

CheckReport check_twist_hopf(const HopfData& h, int n) {
    CheckReport r;
    HopfData a{twist(h.bialgebra, n, -n).data, h.antipode, h.antipode_inv};
    r.append(check_hopf(a), label(n, -n) + " Ψ");
    if (h.antipode_inv) {
        HopfData b{twist(h.bialgebra, n - 1, -n, TwistBraiding::PsiInv).data,
                   *h.antipode_inv, h.antipode};
        r.append(check_hopf(b), label(n - 1, -n) + " Ψ⁻¹");
    } else {
        r.append(check_bialgebra(twist(h.bialgebra, n - 1, -n, TwistBraiding::PsiInv).data),
                 label(n - 1, -n) + " Ψ⁻¹");
    }
    return r;
}

CheckReport check_bialgebra_morphism(const LinMap& f, const BialgebraData& a,
                                     const BialgebraData& b) {
    CheckReport r;
    compare(r, "hom.m", "", f * a.mult, b.mult * tensor(f, f));
    compare(r, "hom.1", "", f * a.unit, b.unit);
    compare(r, "hom.D", "", tensor(f, f) * a.comult, b.comult * f);
    compare(r, "hom.eps", "", b.counit * f, a.counit);
    compare(r, "hom.Psi", "", tensor(f, f) * a.braiding.psi, b.braiding.psi * tensor(f, f));
    return r;
}

CheckReport antipode_power_morphism(const HopfData& h, int k, int n) {
    if (k < 0 && !h.antipode_inv)
        throw Error(ErrorKind::AntipodeNotInvertible, "negative antipode power needs S^{-1}");
    const BialgebraData& b = h.bialgebra;
    LinMap sk = k >= 0 ? power(h.antipode, h.antipode, k)
                       : power(*h.antipode_inv, *h.antipode_inv, -k);
    CheckReport r;
    std::string ctx = "S^" + std::to_string(k) + ": ";
    r.append(check_bialgebra_morphism(sk, twist(b, n, -n).data, twist(b, n + k, -(n + k)).data),
             ctx + label(n, -n) + " → " + label(n + k, -(n + k)));
    compare(r, "hom.S", ctx + label(n, -n), sk * h.antipode, h.antipode * sk);
    r.append(check_bialgebra_morphism(
                 sk, twist(b, n - 1, -n, TwistBraiding::PsiInv).data,
                 twist(b, n + k - 1, -(n + k), TwistBraiding::PsiInv).data),
             ctx + label(n - 1, -n) + " → " + label(n + k - 1, -(n + k)));
    return r;
}

}  // namespace braidual
