#pragma once

#include "cohomotopy/abelian.hpp"

#include <string>
#include <vector>

namespace coh {

enum class Verdict { Split, NonSplit, Undetermined };

std::string to_string(Verdict v);

// 0 -> V -> E -> A -> 0 with V elementary abelian p, classified by a
// homomorphism phi from the p-torsion subgroup of A into V.
struct ExtensionResult {
    AbelianGroup middle;
    Verdict verdict = Verdict::Split;
    AbHom inclusion;   // V -> E
    AbHom projection;  // E -> A
};

// pA must be an ambient subgroup of A containing every element of order p,
// spanned by elements of order dividing p. phi has one column per generator
// of pA and rows in V's generator coordinates.
ExtensionResult classify_elementary_extension(const Subgroup& pA, const AbelianGroup& V,
                                              const Matrix& phi, long p);

inline ExtensionResult classify_elementary_two_extension(const Subgroup& twoA, const AbelianGroup& V,
                                                         const Matrix& phi) {
    return classify_elementary_extension(twoA, V, phi, 2);
}

bool is_elementary(const AbelianGroup& g, long p);

// Largest-exponent fusion of (Z/p)^left_rank into the right group; used as
// an upper bound when an extension is not determined.
Invariants max_fusion(const Invariants& right, long p, std::size_t left_rank);

// Every isomorphism type of middle group over all classifiers. The search
// runs over p^(left_rank * s) maps, s = rank of the p-torsion of `right`.
std::vector<Invariants> enumerate_middles(const AbelianGroup& right, long p, std::size_t left_rank);

}  // namespace coh
