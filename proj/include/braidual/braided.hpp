#pragma once

#include <optional>
#include <string>

#include "braidual/error.hpp"
#include "braidual/linmap.hpp"
#include "braidual/report.hpp"

namespace braidual {

struct Braiding {
    Space space;
    LinMap psi;      // V(x)V -> V(x)V
    LinMap psi_inv;

    static Braiding from(const LinMap& psi);
    static Braiding flip_on(const Space& v);
    Braiding inverse() const { return {space, psi_inv, psi}; }
    LinMap power(int k) const { return braidual::power(psi, psi_inv, k); }
};

enum class Provenance { Given, InducedDual, InducedDualCirc, DoubleDualBullet };
const char* provenance_name(Provenance p);

// Psi_VW : V(x)W -> W(x)V.
struct CrossBraiding {
    Space left;
    Space right;
    LinMap psi;
    LinMap psi_inv;
    Provenance provenance = Provenance::Given;

    static CrossBraiding from(const LinMap& psi, Provenance p = Provenance::Given);
    static CrossBraiding self(const Braiding& b);
    static CrossBraiding flip_between(const Space& v, const Space& w);
    // Psi_VW^{-1} read as a cross-braiding W(x)V -> V(x)W.
    CrossBraiding inverse() const { return {right, left, psi_inv, psi, provenance}; }
};

struct AlgebraData {
    Braiding braiding;
    LinMap mult;  // H(x)H -> H
    LinMap unit;  // K -> H
    const Space& space() const { return braiding.space; }
};

struct CoalgebraData {
    Braiding braiding;
    LinMap comult;  // H -> H(x)H
    LinMap counit;  // H -> K
    const Space& space() const { return braiding.space; }
};

struct BialgebraData {
    Braiding braiding;
    LinMap mult;
    LinMap unit;
    LinMap comult;
    LinMap counit;

    const Space& space() const { return braiding.space; }
    AlgebraData algebra() const { return {braiding, mult, unit}; }
    CoalgebraData coalgebra() const { return {braiding, comult, counit}; }
    BialgebraData with_braiding(const Braiding& b) const { return {b, mult, unit, comult, counit}; }
};

struct HopfData {
    BialgebraData bialgebra;
    LinMap antipode;
    std::optional<LinMap> antipode_inv;

    const Space& space() const { return bialgebra.space(); }
};

bool operator==(const Braiding& a, const Braiding& b);
bool operator==(const BialgebraData& a, const BialgebraData& b);
bool operator==(const HopfData& a, const HopfData& b);

enum class Which { V, W };

CheckReport check_yang_baxter(const LinMap& psi);
// Left: W is left V-braided (needs Psi_VV). Right: V is right W-braided (needs Psi_WW).
CheckReport check_hexagon_left(const CrossBraiding& x, const LinMap& psi_vv);
CheckReport check_hexagon_right(const CrossBraiding& x, const LinMap& psi_ww);
// Which::V: V is the algebra (AWm, 1W); Which::W: W is the algebra (VAm, V1).
CheckReport check_mult_compat(const CrossBraiding& x, const AlgebraData& a, Which algebra_side);
// Which::V: V is the coalgebra (PHW); Which::W: W is the coalgebra (PVH).
CheckReport check_comult_compat(const CrossBraiding& x, const CoalgebraData& c,
                                Which coalgebra_side);

// Yang-Baxter, Ψ·Ψ⁻¹ and both hexagons of Ψ against itself.
CheckReport check_braiding(const Braiding& b);
CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const CoalgebraData& c);
CheckReport check_bialgebra(const BialgebraData& h);
CheckReport check_antipode_identities(const HopfData& h);
CheckReport check_hopf(const HopfData& h);

LinMap convolution(const LinMap& phi, const LinMap& psi, const CoalgebraData& coalg,
                   const AlgebraData& alg);
// Throws ErrorKind::NoAntipode.
LinMap solve_antipode(const BialgebraData& h);

// Validated wrappers: construction runs the full checker and throws
// ErrorKind::Validation on any Fail. Skipped entries are allowed.
class BraidedAlgebra {
  public:
    static BraidedAlgebra make(AlgebraData d);
    const AlgebraData& data() const { return d_; }
    const CheckReport& report() const { return r_; }

  private:
    BraidedAlgebra(AlgebraData d, CheckReport r) : d_(std::move(d)), r_(std::move(r)) {}
    AlgebraData d_;
    CheckReport r_;
};

class BraidedCoalgebra {
  public:
    static BraidedCoalgebra make(CoalgebraData d);
    const CoalgebraData& data() const { return d_; }
    const CheckReport& report() const { return r_; }

  private:
    BraidedCoalgebra(CoalgebraData d, CheckReport r) : d_(std::move(d)), r_(std::move(r)) {}
    CoalgebraData d_;
    CheckReport r_;
};

class BraidedBialgebra {
  public:
    static BraidedBialgebra make(BialgebraData d);
    const BialgebraData& data() const { return d_; }
    const CheckReport& report() const { return r_; }

  private:
    BraidedBialgebra(BialgebraData d, CheckReport r) : d_(std::move(d)), r_(std::move(r)) {}
    BialgebraData d_;
    CheckReport r_;
};

class BraidedHopf {
  public:
    static BraidedHopf make(HopfData d);
    const HopfData& data() const { return d_; }
    const CheckReport& report() const { return r_; }

  private:
    BraidedHopf(HopfData d, CheckReport r) : d_(std::move(d)), r_(std::move(r)) {}
    HopfData d_;
    CheckReport r_;
};

// A (x) B with product from Psi_AB^{-1}, coproduct and braiding from Psi_AB.
// Throws ErrorKind::PrecheckFailed naming the first failing equation.
BraidedBialgebra braided_tensor_bialgebra(const BialgebraData& a, const BialgebraData& b,
                                          const CrossBraiding& psi_ab);

void throw_if_failed(const CheckReport& r, ErrorKind kind, const std::string& what);

}  // namespace braidual
