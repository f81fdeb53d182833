#pragma once

#include "cohomotopy/matrix.hpp"
#include "cohomotopy/smith.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coh {

// Isomorphism type of a finitely generated abelian group: Z^free ⊕ ⊕ Z/d_i with
// d_1 | d_2 | ... and every d_i > 1.
struct Invariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    static Invariants from_cyclic_orders(std::size_t free_rank, const std::vector<Int>& orders);
    static Invariants zero() { return {}; }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int torsion_order() const;
    // dim over F_2 of G/2G.
    std::size_t two_rank() const;
    // Torsion summands decomposed into prime powers, ascending.
    std::vector<Int> primary_orders() const;

    Invariants operator+(const Invariants& other) const;  // direct sum
    bool operator==(const Invariants& other) const;
    bool operator!=(const Invariants& other) const { return !(*this == other); }

    // "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/4", "0" for the trivial group.
    std::string render() const;
};

// <generators | relations>: the group Z^g / (column span of the relation matrix).
class AbelianGroup {
public:
    AbelianGroup();
    AbelianGroup(std::size_t generators, Matrix relations);

    static AbelianGroup free(std::size_t rank);
    static AbelianGroup cyclic(const Int& order);
    static AbelianGroup elementary_two(std::size_t rank);
    static AbelianGroup from_invariants(const Invariants& inv);
    static AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

    std::size_t num_generators() const { return gens_; }
    const Matrix& relations() const { return rel_; }
    const Invariants& invariants() const { return data_->inv; }
    const SmithForm& smith() const { return data_->snf; }

    // Canonical coordinates in the diagonal basis, torsion coordinates reduced.
    IntVec reduce(const IntVec& x) const;
    bool is_zero_element(const IntVec& x) const;
    bool equal_elements(const IntVec& x, const IntVec& y) const;
    bool is_trivial() const { return invariants().is_zero(); }

private:
    struct Data {
        SmithForm snf;
        Invariants inv;
    };
    std::size_t gens_ = 0;
    Matrix rel_;
    std::shared_ptr<const Data> data_;
};

// Homomorphism given by an integer matrix (rows = codomain generators). The
// constructor checks that relations of the domain map to zero.
class AbHom {
public:
    AbHom(AbelianGroup domain, AbelianGroup codomain, Matrix m);

    static AbHom zero(const AbelianGroup& domain, const AbelianGroup& codomain);
    static AbHom identity(const AbelianGroup& g);

    const AbelianGroup& domain() const { return dom_; }
    const AbelianGroup& codomain() const { return cod_; }
    const Matrix& matrix() const { return m_; }

    IntVec apply(const IntVec& x) const { return m_ * x; }
    bool is_zero() const;
    // this ∘ first
    AbHom compose(const AbHom& first) const;

private:
    AbelianGroup dom_;
    AbelianGroup cod_;
    Matrix m_;
};

// Subgroup of an ambient group spanned by the given elements (columns).
class Subgroup {
public:
    Subgroup(AbelianGroup ambient, Matrix generators);

    const AbelianGroup& ambient() const { return ambient_; }
    const Matrix& generators() const { return gens_; }
    std::size_t count() const { return gens_.cols(); }

    // Presentation on the listed generators.
    const AbelianGroup& group() const { return *group_; }
    AbHom inclusion() const;

    std::optional<IntVec> coordinates(const IntVec& x) const;
    bool contains(const IntVec& x) const { return coordinates(x).has_value(); }
    bool contains(const Subgroup& other) const;
    bool is_trivial() const { return group().is_trivial(); }

private:
    AbelianGroup ambient_;
    Matrix gens_;
    std::shared_ptr<const AbelianGroup> group_;
};

// num / den inside an ambient group, presented on the numerator generators.
class Subquotient {
public:
    Subquotient(const AbelianGroup& ambient, const Matrix& numerator, const Matrix& denominator);

    const AbelianGroup& group() const { return group_; }
    const Subgroup& numerator() const { return num_; }
    // Coordinates of an ambient element in the numerator generators.
    IntVec express(const IntVec& x) const;

private:
    Subgroup num_;
    AbelianGroup group_;
};

struct Cokernel {
    AbelianGroup group;
    AbHom projection;
};

Invariants group_invariants(const AbelianGroup& g);
Subgroup hom_kernel(const AbHom& f);
Cokernel hom_cokernel(const AbHom& f);
Subgroup hom_image(const AbHom& f);
Subgroup preimage(const AbHom& f, const Subgroup& target);
Subgroup two_torsion(const AbelianGroup& g);
Subquotient subquotient(const AbelianGroup& g, const Matrix& numerator, const Matrix& denominator);
Cokernel quotient(const AbelianGroup& g, const Subgroup& h);

}  // namespace coh
