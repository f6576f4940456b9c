#pragma once

#include <optional>
#include <utility>

#include "braidual/braided.hpp"

namespace braidual {

enum class Side { Left, Right };
const char* side_name(Side s);

// Left: A(x)V -> V with cross A(x)V -> V(x)A. Right: V(x)A -> V with cross V(x)A -> A(x)V.
struct ModuleData {
    Side side = Side::Left;
    AlgebraData algebra;
    std::optional<CoalgebraData> coalgebra;  // needed for module algebras
    Space carrier;
    LinMap action;
    CrossBraiding cross;
    std::optional<AlgebraData> carrier_algebra;
};

// Left: V -> H(x)V with cross V(x)H -> H(x)V. Right: V -> V(x)H with cross H(x)V -> V(x)H.
struct ComoduleData {
    Side side = Side::Right;
    CoalgebraData coalgebra;
    std::optional<AlgebraData> algebra;  // needed for comodule algebras
    Space carrier;
    LinMap coaction;
    CrossBraiding cross;
    std::optional<AlgebraData> carrier_algebra;
};

CheckReport check_module(const ModuleData& m);
CheckReport check_comodule(const ComoduleData& c);
// Require carrier_algebra and the second half of the acting bialgebra.
CheckReport check_module_algebra(const ModuleData& m);
CheckReport check_comodule_algebra(const ComoduleData& c);

// Opposite side over the (-1)-twisted structure with inverse braidings.
ModuleData flip_side(const ModuleData& m);
ComoduleData flip_side(const ComoduleData& c);
// Opposite side over the same algebra (coalgebra) using S^{-1}.
// Throws AntipodeNotInvertible when h has no S^{-1}.
ModuleData antipode_flip(const ModuleData& m, const HopfData& h);
ComoduleData antipode_flip(const ComoduleData& c, const HopfData& h);

// Comodule of H -> module of the dual algebra U (product us, braiding Psi_UU).
ModuleData comodule_to_module(const ComoduleData& c);
// Module of H -> comodule of (U, Psi_UU^{-2} o brcop).
ComoduleData module_to_comodule(const ModuleData& m);
// Natural left and right actions of the dual U on H.
std::pair<ModuleData, ModuleData> natural_action(const BialgebraData& h);
// f(g > a) = (fg)(a) and g(a < f) = (fg)(a).
CheckReport check_natural_action(const BialgebraData& h);

// Coaction on V -> action on V' (and the opposite side).
ModuleData dualize_coaction(const ComoduleData& c);
// Action on V -> coaction on V' over (U, cuD).
ComoduleData dualize_action(const ModuleData& m);
// e(f > v) pairings between a conversion and the dualized structure.
CheckReport check_adjoint(const ModuleData& converted, const ModuleData& dualized);
CheckReport check_adjoint(const ComoduleData& converted, const ComoduleData& dualized);
// Both constructions of the bullet braiding on V'(x)U agree.
CheckReport check_bullet_braidings(const ComoduleData& c);

struct ComoduleRoundTrip {
    ModuleData middle;
    ComoduleData result;
    LinMap closed_form_coaction;
    CheckReport report;
};
struct ModuleRoundTrip {
    ComoduleData middle;
    ModuleData result;
    LinMap closed_form_action;
    CheckReport report;
};
ComoduleRoundTrip duality_round_trip(const ComoduleData& c);
ModuleRoundTrip duality_round_trip(const ModuleData& m);

// Builds a K-valued map on `shape` pairing leg i with leg j for every (i, j),
// where shape[i] is the dual of shape[j].
LinMap contract(const Shape& shape, const std::vector<std::pair<int, int>>& pairs);

}  // namespace braidual
