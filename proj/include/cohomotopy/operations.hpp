#pragma once

#include "cohomotopy/abelian.hpp"
#include "cohomotopy/datum.hpp"

#include <string>

namespace coh {

// Integral operations start from H^i(X;Z); the others from H^i(X;F2).
enum class OpName { Sq2Z, Sq4Z, Sq2, Sq1, Sq2Sq1, P1Z };

OpName parse_op_name(const std::string& s);
const char* to_string(OpName op);

AbelianGroup elementary_group(std::size_t rank, long p);

// The operation at `degree` as a homomorphism of presented groups.
AbHom op_hom(const Datum& d, OpName op, int degree);
Subgroup op_kernel(const Datum& d, OpName op, int degree);
AbelianGroup op_quotient(const Datum& d, OpName op, int degree);

// w₂ = 0 (resp. w₃ = 0), falling back on Poincaré duality: w₂⌣ on H^{D-2}
// and w₃⌣ on H^{D-3} are nonzero exactly when the class is.
Tri w2_vanishes(const Datum& d);
Tri w3_vanishes(const Datum& d);

// x -> [L(x')] with delta(x') = x, on the 2-torsion of K <= H.
//
// L sends the mod-2 source of delta into a space W; the values must lie in
// the span of `basis` (columns in W), and the columns of `image` (also in W)
// are divided out. The target group is presented on the basis columns.
// Independence of the choice of x' is checked on ker delta.
struct LiftClassifier {
    Subgroup kernel;
    Subgroup twoTorsion;  // inside kernel.group()
    AbelianGroup target;
    Matrix phi;           // columns: twoTorsion generators
    bool is_zero() const;
};

LiftClassifier lift_classifier(const AbelianGroup& H, const Matrix& delta, std::size_t source_rank,
                               const Subgroup& K, const F2Matrix& L, const F2Matrix& basis,
                               const F2Matrix& image);

// Same, with H = H^n(X;Z) and delta the Bockstein out of degree n-1.
LiftClassifier lift_classifier(const Datum& d, int n, const Subgroup& K, const F2Matrix& L,
                               const F2Matrix& basis, const F2Matrix& image);

}  // namespace coh
