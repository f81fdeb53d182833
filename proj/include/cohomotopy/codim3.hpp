#pragma once

#include "cohomotopy/datum.hpp"
#include "cohomotopy/operations.hpp"
#include "cohomotopy/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coh {

// Flags that settle parameters the data leaves open.
struct Codim3Options {
    bool assumePhiTrivial = false;
    bool assumeTTrivial = false;
    bool assumeEps3Zero = false;
    bool enumerateExtensions = false;
};

int eps_sq4z(const Datum& d);

// G₁ = H^{n+3}(F2) / Sq⁴_ℤ(ker(Sq²_ℤ:n-1)).
AbelianGroup compute_g1(const Datum& d);

// ker(α³:n) and ker(S̄q²:n) as extensions over ker(Θ:n).
struct KerAlpha3 {
    ParametricGroup group;    // ker(α³:n)
    ParametricGroup kerSq2Bar;
    SESReport alpha3Ses;      // 0 -> V -> ker(α³) -> ker(Θ:n) -> 0
    SESReport sq2BarSes;      // 0 -> A -> ker(S̄q²) -> ker(Θ:n) -> 0
    Verdict qhComponent = Verdict::Split;
    Verdict g1Component = Verdict::Split;
    // G₁ is a direct summand of ker(α³), and the stated criterion for it.
    bool g1Summand = true;
    bool g1Criterion = true;
    std::vector<std::string> notes;
};

KerAlpha3 ker_alpha3(const Datum& d, const Codim3Options& o = {});

// QH^{n+2}(X;Sq²)/Θ(ker(Sq²_ℤ∩Sq⁴_ℤ:n-1)).
ParametricGroup theta_quotient_n2(const Datum& d);

// G₂ = H^{n+3}(F2) / (Sq²Sq¹(ker(Sq²:n)) + Φ(...)).
ParametricGroup compute_g2(const Datum& d, const Codim3Options& o = {});

struct TowerGroups {
    Invariants g1;
    ParametricGroup g2;
    KerAlpha3 kerAlpha3;
    ParametricGroup thetaQuotient;
    int epsSq4Z = 0;
};

TowerGroups tower_groups(const Datum& d, const Codim3Options& o = {});

struct Codim3Result {
    int manifoldCase = 0;  // 1..4
    ParametricGroup group;  // πⁿ(M)
    TowerGroups tower;
    std::vector<std::string> notes;
};

// Four-case manifold theorem.
Codim3Result assemble_codim3(const Datum& d, const Codim3Options& o = {});

// [X, Q₃Sⁿ] through the tower stages; used for CW data and as an
// independent route for manifolds. Branches whose stage formula does not
// apply carry status Undetermined.
ParametricGroup codim3_tower_route(const Datum& d, const Codim3Options& o = {});

// String manifolds: the ℤ/24 summand and the inner ker(S̄q²) sequence.
ParametricGroup string_fast_path(const Datum& d);

// Ω₃^Spin(M) as the split extension over ker(S̄q²:n).
ParametricGroup spin3_bordism(const Datum& d);

}  // namespace coh
