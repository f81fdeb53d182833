#pragma once

#include "cohomotopy/abelian.hpp"
#include "cohomotopy/extension.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coh {

// 0 -> left -> middle -> right -> 0.
struct SESReport {
    std::string name;
    std::string leftLabel, middleLabel, rightLabel;
    Invariants left, middle, right;
    Verdict verdict = Verdict::Split;
    std::optional<Matrix> classifier;
    // Candidate middles when the verdict is Undetermined; `middle` then holds
    // the split case.
    std::vector<Invariants> candidates;
    std::vector<std::string> notes;
};

// Orders multiply when everything is finite; free ranks add always.
bool exactness_holds(const Invariants& left, const Invariants& middle, const Invariants& right);
bool exactness_holds(const SESReport& r);

enum class Provenance { Computed, Forced, Override, Unknown };
std::string to_string(Provenance p);

struct Parameter {
    std::string name;
    Provenance provenance = Provenance::Unknown;
    std::optional<int> value;  // empty iff Unknown
    std::string reason;
};

using Assignment = std::map<std::string, int>;

struct Branch {
    Assignment assumptions;
    Invariants group;
    Verdict status = Verdict::Split;
    std::vector<Invariants> candidates;
    std::vector<SESReport> ses;
};

struct ParametricGroup {
    std::string name;
    std::vector<Parameter> parameters;
    std::vector<Branch> branches;

    bool determined() const { return branches.size() == 1; }
    const Branch& only() const;
    const Parameter* parameter(const std::string& name) const;
};

// Every assignment of 0/1 to the unknown parameters, with the known ones
// fixed at their value. Ordered lexicographically by parameter order.
std::vector<Assignment> assignment_lattice(const std::vector<Parameter>& params);

Invariants cyclic(const Int& order);
Invariants elementary(std::size_t rank, long p = 2);
Invariants sum(std::initializer_list<Invariants> parts);

// Candidate middles of 0 -> (Z/p)^left_rank -> E -> right -> 0 for an
// undetermined extension: the split case and maximal fusion, or the full list
// when enumeration is requested and the torsion of `right` has order <= 64.
std::vector<Invariants> extension_candidates(const Invariants& right, long p, std::size_t left_rank,
                                             bool enumerate);

}  // namespace coh
