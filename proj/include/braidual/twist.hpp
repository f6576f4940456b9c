#pragma once

#include "braidual/braided.hpp"

namespace braidual {

enum class TwistBraiding { Psi, PsiInv };

inline constexpr int kMaxTwist = 4;

// H with product m o Psi^k and coproduct Psi^n o Delta. Powers always refer to
// the braiding of the input; `braiding` selects which braiding the result carries.
struct TwistedStructure {
    BialgebraData data;
    int k = 0;
    int n = 0;
    TwistBraiding braiding = TwistBraiding::Psi;
};

// Throws InvalidParameter when |k| or |n| exceeds `bound`.
TwistedStructure twist(const BialgebraData& h, int k, int n,
                       TwistBraiding braiding = TwistBraiding::Psi, int bound = kMaxTwist);

// H^(n,-n) under Psi, H^(n-1,-n) under Psi^{-1}; antipodes S and S^{-1}.
CheckReport check_twist_bialgebra(const BialgebraData& h, int n);
CheckReport check_twist_hopf(const HopfData& h, int n);

// S^k as a morphism H^(n,-n) -> H^(n+k,-(n+k)) and H^(n-1,-n) -> H^(n+k-1,-(n+k)).
// Throws AntipodeNotInvertible for k < 0 without S^{-1}.
CheckReport antipode_power_morphism(const HopfData& h, int k, int n);

// Equations of a map f : A -> B between bialgebras on equal spaces.
CheckReport check_bialgebra_morphism(const LinMap& f, const BialgebraData& a,
                                     const BialgebraData& b);

}  // namespace braidual
