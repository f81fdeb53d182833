#pragma once

#include "cohomotopy/datum.hpp"
#include "cohomotopy/operations.hpp"
#include "cohomotopy/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coh {

// πⁿ(X) for an (n+2)-dimensional datum.
struct Codim2Result {
    std::string route;  // manifold | cw-sq2-nontrivial | cw-sq2-trivial | homology
    Invariants kernelTerm;
    Invariants quotientTerm;
    std::optional<bool> framedSummandPresent;  // empty when it depends on a parameter
    Matrix classifier;
    Verdict splitting = Verdict::Split;
    ParametricGroup group;
    std::vector<std::string> notes;
};

// φ: ₂ker(Sq²_ℤ:n) -> QH^{n+1}(X;Sq²_ℤ).
LiftClassifier codim2_classifier(const Datum& d);

Codim2Result codim2_group(const Datum& d);

// Homological form via H₁, H₂, H₃, the w₂ pairing and cap product. When the
// cohomological result is available the two middles are compared and a
// mismatch raises InconsistentInputError.
Codim2Result codim2_bordism_dual(const Datum& d);

struct FramedSpin2 {
    SESReport spin;       // Ω₂^{fr,Spin}(M)
    Invariants framed;    // Ω₂^fr(M)
    bool corollaryHolds = false;
};

FramedSpin2 framed_spin_bordism2(const Datum& d);

}  // namespace coh
