#pragma once

#include "cohomotopy/datum.hpp"
#include "cohomotopy/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coh {

enum class Theory { Framed, Spin, SO, String };
std::string to_string(Theory t);

// Coefficient groups Ω_k^G; empty where the table has no entry.
std::optional<Invariants> coefficient(Theory t, int k);

// framed = spin for k <= 2 and framed = string for k <= 6.
bool coefficient_table_coherent();

// 0 -> Ω_k^G -> Ω_k^G(M) -> Ω_k^H(M) -> 0, split by the constant map.
// One branch per assignment of the parameters the right term depends on.
ParametricGroup g_to_h_ses(const Datum& d, int k);

enum class SectionVerdict { Exists, NotExists, Insufficient };
std::string to_string(SectionVerdict v);

struct EulerData {
    int k = 2;             // 1, 2: Spin; 3: String
    Tri eGZero = Tri::Unknown;
    Tri kappaZero = Tri::Unknown;
    Tri eHZero = Tri::Unknown;
    Tri deltaZero = Tri::Unknown;  // forced true for k = 1, 3
};

struct SectionResult {
    SectionVerdict verdict = SectionVerdict::Insufficient;
    std::vector<std::string> failing;  // conditions known to fail
    std::vector<std::string> unknown;  // conditions left open
};

SectionResult section_existence(const EulerData& e);

// ⊕_d π_{d-n}^S over the listed sphere dimensions.
Invariants wedge_oracle(const std::vector<int>& sphere_dims, int n);

}  // namespace coh
