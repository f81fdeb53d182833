#pragma once

#include "cohomotopy/datum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace coh {

struct RingGenerator {
    std::string name;
    int degree = 1;
    int truncation = 0;  // g^truncation = 0; 0 means no truncation
};

// Commutative F2 algebra F2[g_1..g_r]/(g_i^{e_i}) with Steenrod squares given
// on generators. Sq^deg g = g^2 and Sq^i g = 0 for i > deg are implied; the
// entries of `sq` give Sq^1, Sq^2, Sq^4 below the degree of the generator.
struct RingPresentation {
    std::vector<RingGenerator> generators;
    std::map<std::string, std::map<int, std::vector<std::string>>> sq;
    std::optional<std::string> w2, w3;  // polynomial expressions
    bool sq1_lift = false;
};

using Monomial = std::vector<int>;  // exponent per generator
using Poly = std::set<Monomial>;    // F2 sum of distinct monomials

class TruncatedRing {
public:
    // Basis monomials are enumerated up to max_degree, sorted by exponent vector.
    TruncatedRing(RingPresentation p, int max_degree);

    const RingPresentation& presentation() const { return p_; }
    int degree(const Monomial& m) const;
    const std::vector<Monomial>& basis(int deg) const;
    FVec vector(const Poly& p, int deg) const;
    Poly poly(const FVec& v, int deg) const;

    Poly parse(const std::string& expr) const;  // "d^2*a + c^2*d*a"
    std::string format(const Poly& p) const;

    Poly multiply(const Poly& a, const Poly& b) const;
    Poly sq(int k, const Poly& p) const;

    // Matrix of x -> Sq^k x (or x -> c·x) from degree deg.
    F2Matrix sq_matrix(int k, int deg) const;
    F2Matrix mult_matrix(const Poly& c, int cdeg, int deg) const;

private:
    RingPresentation p_;
    int max_degree_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::vector<Poly>> gen_total_;  // gen_total_[g][i] = Sq^i(g), i = 0..4
    std::vector<std::map<Monomial, std::size_t>> index_;

    Poly monomial_sq(int k, const Monomial& m) const;
    bool valid(const Monomial& m) const;
};

// Mod-2 part of a datum from a presented ring (ranks, Sq¹, Sq², Sq⁴, cup with
// w2 and w3 on every degree up to `top`), plus the integral part when the
// presentation asks for the Sq¹ lift.
struct RingData {
    std::map<int, std::size_t> mod2;
    std::map<Op, std::map<int, F2Matrix>> ops;
    std::optional<FVec> w2, w3;
    std::map<int, AbelianGroup> integral;
    std::map<int, F2Matrix> rho2;
    std::map<int, Matrix> bockstein;
};

RingData ingest_ring(const RingPresentation& p, int top);

// Merge ring-derived data into d. Supplied fields win; a warning is added for
// every disagreement.
void merge_ring_data(Datum& d, const RingData& r);

}  // namespace coh
