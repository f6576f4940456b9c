#pragma once

#include <string>
#include <vector>

#include "braidual/braided.hpp"

namespace braidual {

enum class GradedFamily { BraidedLine, QuantumPlane };

inline constexpr int kMaxCutoff = 8;

struct GradedStructure {
    GradedFamily family;
    Scalar q;
    int cutoff = 0;
    BraidedHopf hopf;
};

BraidedHopf make_group_bialgebra(int n);
BraidedHopf make_superline();
// Throws InvalidParameter for q = 0 or cutoff outside [0, kMaxCutoff].
GradedStructure make_braided_line_truncated(const Scalar& q, int cutoff);
GradedStructure make_quantum_plane_truncated(const Scalar& q, int cutoff);

// Gaussian binomial [n choose k]_q.
Scalar q_binomial(const Scalar& q, int n, int k);

// Restricts every structure map to basis vectors of degree <= cutoff.
HopfData restrict_degree(const HopfData& h, int cutoff);
// Full Hopf suite on the degree <= cutoff part; identities that leave the
// truncation are Skipped.
CheckReport check_graded_up_to(const GradedStructure& g, int cutoff);

// Parses `zn:<n>`, `superline`, `bline:q=<p/q>:deg=<d>`, `qplane:q=<p/q>:deg=<d>`.
// Throws Parse for unknown names.
BraidedHopf catalog_hopf(const std::string& name);
bool is_catalog_name(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace braidual

#include <variant>

#include "braidual/modules.hpp"

namespace braidual {

using ModuleOrComodule = std::variant<ModuleData, ComoduleData>;

// `<base>/<kind>` with kind one of module_kinds(). Trivial (co)actions use the
// group algebra of Z2 as carrier algebra with the flip cross-braiding;
// natural-module is the left action of the dual on the base.
ModuleOrComodule catalog_module(const std::string& name);
bool is_catalog_module_name(const std::string& name);
const std::vector<std::string>& module_kinds();
std::vector<std::string> catalog_module_names();

}  // namespace braidual
