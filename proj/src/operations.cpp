#include "cohomotopy/operations.hpp"

#include "cohomotopy/errors.hpp"

namespace coh {

OpName parse_op_name(const std::string& s) {
    if (s == "Sq2Z") return OpName::Sq2Z;
    if (s == "Sq4Z") return OpName::Sq4Z;
    if (s == "Sq2") return OpName::Sq2;
    if (s == "Sq1") return OpName::Sq1;
    if (s == "Sq2Sq1") return OpName::Sq2Sq1;
    if (s == "P1Z") return OpName::P1Z;
    throw ParseError("unknown operation '" + s + "'");
}

const char* to_string(OpName op) {
    switch (op) {
        case OpName::Sq2Z: return "Sq2Z";
        case OpName::Sq4Z: return "Sq4Z";
        case OpName::Sq2: return "Sq2";
        case OpName::Sq1: return "Sq1";
        case OpName::Sq2Sq1: return "Sq2Sq1";
        case OpName::P1Z: return "P1Z";
    }
    return "?";
}

AbelianGroup elementary_group(std::size_t rank, long p) {
    return AbelianGroup(rank, Matrix::identity(rank).scaled(p));
}

AbHom op_hom(const Datum& d, OpName op, int i) {
    if (!d.in_window(i))
        throw DegreeError(std::string(to_string(op)) + " requested at degree " + std::to_string(i) +
                          " outside the window [" + std::to_string(d.window_lo()) + ", " +
                          std::to_string(d.window_hi()) + "]");
    auto mod2 = [&](Op o) {
        F2Matrix m = d.op(o, i);
        return AbHom(elementary_group(d.F2(i), 2), elementary_group(d.F2(i + op_shift(o)), 2), m.to_int());
    };
    switch (op) {
        case OpName::Sq2Z: return AbHom(d.H(i), elementary_group(d.F2(i + 2), 2), d.sq2z(i).to_int());
        case OpName::Sq4Z: return AbHom(d.H(i), elementary_group(d.F2(i + 4), 2), d.sq4z(i).to_int());
        case OpName::Sq2: return mod2(Op::Sq2);
        case OpName::Sq1: return mod2(Op::Sq1);
        case OpName::Sq2Sq1: return mod2(Op::Sq2Sq1);
        case OpName::P1Z:
            return AbHom(d.H(i), elementary_group(d.F3(i + 4), 3), (d.p1cup3_at(i) * d.rho3_at(i)).to_int());
    }
    throw ParseError("unknown operation");
}

Subgroup op_kernel(const Datum& d, OpName op, int degree) { return hom_kernel(op_hom(d, op, degree)); }

AbelianGroup op_quotient(const Datum& d, OpName op, int degree) {
    return hom_cokernel(op_hom(d, op, degree)).group;
}

}  // namespace coh

namespace coh {

bool LiftClassifier::is_zero() const {
    return AbHom(twoTorsion.group(), target, phi).is_zero();
}

LiftClassifier lift_classifier(const AbelianGroup& H, const Matrix& delta, std::size_t source_rank,
                               const Subgroup& K, const F2Matrix& L, const F2Matrix& basis,
                               const F2Matrix& image) {
    auto coords = [&](const FVec& w) {
        auto c = basis.solve(w);
        if (!c) throw DataError("classifier value lies outside the declared target subspace");
        return *c;
    };
    const std::size_t b = basis.cols();
    Matrix rel = Matrix::identity(b).scaled(2);
    for (std::size_t j = 0; j < image.cols(); ++j) rel = rel.hcat(Matrix::column_vector(fvec_to_int(coords(image.column(j)))));
    AbelianGroup target(b, rel);

    AbelianGroup source = elementary_group(source_rank, 2);
    AbHom dh(source, H, delta);

    // Two lifts differ by an element of ker delta; its value must vanish.
    Subgroup kd = hom_kernel(dh);
    for (std::size_t j = 0; j < kd.count(); ++j) {
        IntVec v = fvec_to_int(coords(L.apply(fvec_from_int(kd.generators().column(j)))));
        if (!target.is_zero_element(v))
            throw WellDefinednessError("classifier depends on the choice of Bockstein preimage");
    }

    Subgroup tt = two_torsion(K.group());
    Matrix solve_m = delta.hcat(H.relations());
    Matrix phi(b, 0);
    for (std::size_t j = 0; j < tt.count(); ++j) {
        IntVec x = K.generators() * tt.generators().column(j);
        auto sol = solve_integer(solve_m, x);
        if (!sol) throw DataError("a 2-torsion class has no Bockstein preimage");
        IntVec lift(sol->begin(), sol->begin() + static_cast<long>(source_rank));
        phi.append_column(fvec_to_int(coords(L.apply(fvec_from_int(lift)))));
    }
    return {K, tt, target, phi};
}

LiftClassifier lift_classifier(const Datum& d, int n, const Subgroup& K, const F2Matrix& L,
                               const F2Matrix& basis, const F2Matrix& image) {
    return lift_classifier(d.H(n), d.bockstein_at(n - 1), d.F2(n - 1), K, L, basis, image);
}

}  // namespace coh

namespace coh {

namespace {

Tri by_duality(const Datum& d, Op wu, int deg) {
    try {
        return d.op(wu, deg).is_zero() ? Tri::True : Tri::False;
    } catch (const DegreeError&) {
    } catch (const MissingDataError&) {
    }
    return Tri::Unknown;
}

}  // namespace

Tri w2_vanishes(const Datum& d) {
    Tri t = d.w2_zero();
    if (t != Tri::Unknown || !d.is_manifold()) return t;
    return by_duality(d, Op::Sq2, d.dimension - 2);
}

Tri w3_vanishes(const Datum& d) {
    if (w2_vanishes(d) == Tri::True) return Tri::True;
    Tri t = d.w3_zero();
    if (t != Tri::Unknown || !d.is_manifold()) return t;
    return by_duality(d, Op::Sq2Sq1, d.dimension - 3);
}

}  // namespace coh
