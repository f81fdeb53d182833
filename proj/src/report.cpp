#include "cohomotopy/report.hpp"

#include "cohomotopy/errors.hpp"

#include <algorithm>

namespace coh {

bool exactness_holds(const Invariants& left, const Invariants& middle, const Invariants& right) {
    if (middle.free_rank != left.free_rank + right.free_rank) return false;
    if (left.is_finite() && right.is_finite())
        return middle.torsion_order() == left.torsion_order() * right.torsion_order();
    return true;
}

bool exactness_holds(const SESReport& r) {
    if (!exactness_holds(r.left, r.middle, r.right)) return false;
    return std::all_of(r.candidates.begin(), r.candidates.end(),
                       [&](const Invariants& c) { return exactness_holds(r.left, c, r.right); });
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Computed: return "computed";
        case Provenance::Forced: return "forced";
        case Provenance::Override: return "override";
        case Provenance::Unknown: return "unknown";
    }
    return "?";
}

const Branch& ParametricGroup::only() const {
    if (branches.size() != 1)
        throw HypothesisError(name + " has " + std::to_string(branches.size()) + " branches, not one");
    return branches.front();
}

const Parameter* ParametricGroup::parameter(const std::string& n) const {
    for (const auto& p : parameters)
        if (p.name == n) return &p;
    return nullptr;
}

std::vector<Assignment> assignment_lattice(const std::vector<Parameter>& params) {
    std::vector<Assignment> out{Assignment{}};
    for (const auto& p : params) {
        std::vector<Assignment> next;
        for (const auto& a : out) {
            if (p.value) {
                Assignment b = a;
                b[p.name] = *p.value;
                next.push_back(std::move(b));
            } else {
                for (int v : {0, 1}) {
                    Assignment b = a;
                    b[p.name] = v;
                    next.push_back(std::move(b));
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

Invariants cyclic(const Int& order) {
    if (order == 0) return Invariants::from_cyclic_orders(1, {});
    return Invariants::from_cyclic_orders(0, {order});
}

Invariants elementary(std::size_t rank, long p) {
    return Invariants::from_cyclic_orders(0, std::vector<Int>(rank, Int(p)));
}

Invariants sum(std::initializer_list<Invariants> parts) {
    Invariants out;
    for (const auto& p : parts) out = out + p;
    return out;
}

std::vector<Invariants> extension_candidates(const Invariants& right, long p, std::size_t left_rank,
                                             bool enumerate) {
    Invariants split = right + elementary(left_rank, p);
    if (enumerate && right.torsion_order() <= 64)
        return enumerate_middles(AbelianGroup::from_invariants(right), p, left_rank);
    std::vector<Invariants> out{split};
    Invariants fused = max_fusion(right, p, left_rank);
    if (fused != split) out.push_back(fused);
    return out;
}

}  // namespace coh
