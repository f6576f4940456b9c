#pragma once

#include <optional>

#include "braidual/braided.hpp"

namespace braidual {

// Braidings induced on the full dual U = H' and between U and H.
struct InducedBraidings {
    Space h;
    Space u;
    Braiding psi_uu;
    CrossBraiding psi_uh;       // U(x)H -> H(x)U from Psi
    CrossBraiding psi_uh_circ;  // from Psi^{-1}
    CrossBraiding psi_hu;       // H(x)U -> U(x)H from Psi
    CrossBraiding psi_hu_circ;
};

// Throws NotClosed if an induced map is not invertible.
InducedBraidings induce_dual_braidings(const Braiding& b);
// Defining pairing identities, Yang-Baxter and hexagons.
CheckReport check_induced_braidings(const InducedBraidings& ib, const Braiding& b);

// Pairings used to state the defining identities: nested <<f(x)g, x(x)y>> = g(x) f(y)
// on U(x)U(x)H(x)H, and the factorwise one (f(x)g)(x(x)y) = f(x) g(y).
LinMap nested_pairing(const Space& h);
LinMap factorwise_pairing(const Shape& hs);

enum class DualProduct { Star, UnderlineM };        // Psi o Delta or Psi^{-1} o Delta
enum class DualCoproduct { UnderlineDelta, Circ };  // m o Psi or m o Psi^{-1}

AlgebraData dual_algebra(const CoalgebraData& h, DualProduct variant);
CoalgebraData dual_coalgebra(const AlgebraData& h, DualCoproduct variant);

struct DualPairing {
    Space left;
    Space right;
    LinMap eval;  // left (x) right -> K
    CrossBraiding upsilon;
};

struct DualBialgebra {
    BialgebraData bialgebra;
    DualPairing pairing;
    InducedBraidings induced;
};

DualBialgebra dual_bialgebra(const BialgebraData& h);
HopfData dual_hopf(const HopfData& h);

CheckReport verify_dual_pairing(const DualPairing& p, const BialgebraData& u,
                                const BialgebraData& h);
CheckReport verify_dual_pairing(const DualPairing& p, const HopfData& u, const HopfData& h);
CheckReport double_dual_iso(const BialgebraData& h);
CheckReport double_dual_iso(const HopfData& h);

// U^(-n,n) against H^(n,-n) with the circ braiding, and U^(2-n,n-3) against
// H^(n-1,-n) (braidings inverted) with the plain one.
CheckReport dual_of_twist(const BialgebraData& h, int n);

}  // namespace braidual
