#include "cohomotopy/abelian.hpp"

#include "cohomotopy/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coh {
namespace {

// Prime-power factorisation by trial division; orders met here are small.
std::vector<std::pair<Int, unsigned>> factor(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int ipow(const Int& p, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

Matrix drop_zero_columns(const Matrix& m) {
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        IntVec c = m.column(j);
        if (!is_zero_vector(c)) cols.push_back(std::move(c));
    }
    return Matrix::from_columns(m.rows(), cols);
}

// Rows [0, k) of the integer kernel of m.
Matrix projected_kernel(const Matrix& m, std::size_t k) {
    Matrix ker = integer_kernel(m);
    return ker.block(0, 0, k, ker.cols());
}

}  // namespace

Invariants Invariants::from_cyclic_orders(std::size_t free_rank, const std::vector<Int>& orders) {
    Invariants inv;
    inv.free_rank = free_rank;
    std::map<Int, std::vector<unsigned>> by_prime;
    for (const Int& d : orders) {
        if (d == 0) {
            ++inv.free_rank;
            continue;
        }
        for (auto& [p, e] : factor(d)) by_prime[p].push_back(e);
    }
    std::size_t len = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
    }
    // k-th largest invariant factor collects the k-th largest power of each prime.
    std::vector<Int> factors(len, Int(1));
    for (auto& [p, es] : by_prime)
        for (std::size_t k = 0; k < es.size(); ++k) factors[k] *= ipow(p, es[k]);
    std::reverse(factors.begin(), factors.end());
    inv.torsion = std::move(factors);
    return inv;
}

Int Invariants::torsion_order() const {
    Int o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::size_t Invariants::two_rank() const {
    std::size_t r = free_rank;
    for (const auto& d : torsion)
        if (mpz_even_p(d.get_mpz_t())) ++r;
    return r;
}

std::vector<Int> Invariants::primary_orders() const {
    std::vector<Int> out;
    for (const auto& d : torsion)
        for (auto& [p, e] : factor(d)) out.push_back(ipow(p, e));
    std::sort(out.begin(), out.end());
    return out;
}

Invariants Invariants::operator+(const Invariants& o) const {
    std::vector<Int> all = torsion;
    all.insert(all.end(), o.torsion.begin(), o.torsion.end());
    return from_cyclic_orders(free_rank + o.free_rank, all);
}

bool Invariants::operator==(const Invariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
}

std::string Invariants::render() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank) {
        os << "ℤ^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " ⊕ ") << "ℤ/" << d.get_str();
        first = false;
    }
    return os.str();
}

AbelianGroup::AbelianGroup() : AbelianGroup(0, Matrix(0, 0)) {}

AbelianGroup::AbelianGroup(std::size_t generators, Matrix relations)
    : gens_(generators), rel_(std::move(relations)) {
    if (rel_.rows() != gens_) {
        if (rel_.cols() == 0) rel_ = Matrix(gens_, 0);
        else throw std::invalid_argument("relation matrix row count must equal generator count");
    }
    auto d = std::make_shared<Data>();
    d->snf = smith_normal_form(rel_);
    std::vector<Int> tors;
    for (const auto& x : d->snf.diagonal)
        if (x > 1) tors.push_back(x);
    d->inv.free_rank = gens_ - d->snf.rank;
    d->inv.torsion = std::move(tors);
    data_ = std::move(d);
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(rank, Matrix(rank, 0)); }

AbelianGroup AbelianGroup::cyclic(const Int& order) {
    if (order == 0) return free(1);
    Matrix r(1, 1);
    r(0, 0) = abs(order);
    return AbelianGroup(1, r);
}

AbelianGroup AbelianGroup::elementary_two(std::size_t rank) {
    return AbelianGroup(rank, Matrix::identity(rank).scaled(2));
}

AbelianGroup AbelianGroup::from_invariants(const Invariants& inv) {
    std::size_t g = inv.free_rank + inv.torsion.size();
    Matrix r(g, inv.torsion.size());
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) r(inv.free_rank + i, i) = inv.torsion[i];
    return AbelianGroup(g, r);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    return AbelianGroup(a.gens_ + b.gens_, a.rel_.direct_sum(b.rel_));
}

IntVec AbelianGroup::reduce(const IntVec& x) const {
    if (x.size() != gens_) throw std::invalid_argument("element length does not match generator count");
    const SmithForm& s = smith();
    IntVec y = s.U * x;
    for (std::size_t i = 0; i < s.rank; ++i) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), s.diagonal[i].get_mpz_t());
        y[i] = r;
    }
    return y;
}

bool AbelianGroup::is_zero_element(const IntVec& x) const { return is_zero_vector(reduce(x)); }

bool AbelianGroup::equal_elements(const IntVec& x, const IntVec& y) const {
    return is_zero_element(add(x, scale(y, -1)));
}

AbHom::AbHom(AbelianGroup domain, AbelianGroup codomain, Matrix m)
    : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(m)) {
    if (m_.rows() != cod_.num_generators() || m_.cols() != dom_.num_generators()) {
        if (m_.rows() * m_.cols() == 0 && (cod_.num_generators() == 0 || dom_.num_generators() == 0))
            m_ = Matrix(cod_.num_generators(), dom_.num_generators());
        else
            throw std::invalid_argument("homomorphism matrix shape " + std::to_string(m_.rows()) + "x" +
                                        std::to_string(m_.cols()) + " does not match groups " +
                                        std::to_string(cod_.num_generators()) + "x" +
                                        std::to_string(dom_.num_generators()));
    }
    const Matrix& r = dom_.relations();
    for (std::size_t j = 0; j < r.cols(); ++j)
        if (!cod_.is_zero_element(m_ * r.column(j)))
            throw WellDefinednessError("homomorphism does not respect domain relation " + std::to_string(j));
}

AbHom AbHom::zero(const AbelianGroup& d, const AbelianGroup& c) {
    return AbHom(d, c, Matrix(c.num_generators(), d.num_generators()));
}

AbHom AbHom::identity(const AbelianGroup& g) { return AbHom(g, g, Matrix::identity(g.num_generators())); }

bool AbHom::is_zero() const {
    for (std::size_t j = 0; j < m_.cols(); ++j)
        if (!cod_.is_zero_element(m_.column(j))) return false;
    return true;
}

AbHom AbHom::compose(const AbHom& first) const {
    if (first.cod_.num_generators() != dom_.num_generators())
        throw std::invalid_argument("composition shape mismatch");
    return AbHom(first.dom_, cod_, m_ * first.m_);
}

Subgroup::Subgroup(AbelianGroup ambient, Matrix generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)) {
    if (gens_.rows() != ambient_.num_generators()) {
        if (gens_.cols() == 0) gens_ = Matrix(ambient_.num_generators(), 0);
        else throw std::invalid_argument("subgroup generators have the wrong length");
    }
    const std::size_t k = gens_.cols();
    Matrix rels = drop_zero_columns(projected_kernel(gens_.hcat(ambient_.relations()), k));
    group_ = std::make_shared<AbelianGroup>(k, rels);
}

AbHom Subgroup::inclusion() const { return AbHom(group(), ambient_, gens_); }

std::optional<IntVec> Subgroup::coordinates(const IntVec& x) const {
    auto sol = solve_integer(gens_.hcat(ambient_.relations()), x);
    if (!sol) return std::nullopt;
    sol->resize(gens_.cols());
    return sol;
}

bool Subgroup::contains(const Subgroup& other) const {
    for (std::size_t j = 0; j < other.count(); ++j)
        if (!contains(other.generators().column(j))) return false;
    return true;
}

Subquotient::Subquotient(const AbelianGroup& ambient, const Matrix& numerator, const Matrix& denominator)
    : num_(ambient, numerator), group_() {
    Matrix rels = num_.group().relations();
    for (std::size_t j = 0; j < denominator.cols(); ++j) {
        auto c = num_.coordinates(denominator.column(j));
        if (!c) throw ContainmentError("denominator element " + std::to_string(j) + " is not in the numerator");
        rels.append_column(*c);
    }
    if (rels.rows() == 0) rels = Matrix(num_.count(), rels.cols());
    group_ = AbelianGroup(num_.count(), drop_zero_columns(rels));
}

IntVec Subquotient::express(const IntVec& x) const {
    auto c = num_.coordinates(x);
    if (!c) throw ContainmentError("element is not in the numerator subgroup");
    return *c;
}

Invariants group_invariants(const AbelianGroup& g) { return g.invariants(); }

Subgroup hom_kernel(const AbHom& f) {
    const std::size_t n = f.domain().num_generators();
    Matrix l = projected_kernel(f.matrix().hcat(f.codomain().relations()), n);
    return Subgroup(f.domain(), lattice_basis(l));
}

Cokernel hom_cokernel(const AbHom& f) {
    const AbelianGroup& c = f.codomain();
    AbelianGroup q(c.num_generators(), drop_zero_columns(c.relations().hcat(f.matrix())));
    return {q, AbHom(c, q, Matrix::identity(c.num_generators()))};
}

Subgroup hom_image(const AbHom& f) { return Subgroup(f.codomain(), f.matrix()); }

Subgroup preimage(const AbHom& f, const Subgroup& target) {
    if (target.ambient().num_generators() != f.codomain().num_generators())
        throw std::invalid_argument("preimage target lives in a different group");
    const std::size_t n = f.domain().num_generators();
    Matrix l = projected_kernel(f.matrix().hcat(target.generators()).hcat(f.codomain().relations()), n);
    return Subgroup(f.domain(), lattice_basis(l));
}

Subgroup two_torsion(const AbelianGroup& g) {
    return hom_kernel(AbHom(g, g, Matrix::identity(g.num_generators()).scaled(2)));
}

Subquotient subquotient(const AbelianGroup& g, const Matrix& numerator, const Matrix& denominator) {
    return Subquotient(g, numerator, denominator);
}

Cokernel quotient(const AbelianGroup& g, const Subgroup& h) {
    AbelianGroup q(g.num_generators(), drop_zero_columns(g.relations().hcat(h.generators())));
    return {q, AbHom(g, q, Matrix::identity(g.num_generators()))};
}

}  // namespace coh
