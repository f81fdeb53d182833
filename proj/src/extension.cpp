#include "cohomotopy/extension.hpp"

#include "cohomotopy/errors.hpp"

#include <algorithm>
#include <set>

namespace coh {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Split: return "Split";
        case Verdict::NonSplit: return "NonSplit";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

bool is_elementary(const AbelianGroup& g, long p) {
    const Invariants& inv = g.invariants();
    if (inv.free_rank) return false;
    return std::all_of(inv.torsion.begin(), inv.torsion.end(), [p](const Int& d) { return d == p; });
}

ExtensionResult classify_elementary_extension(const Subgroup& pA, const AbelianGroup& V, const Matrix& phi,
                                              long p) {
    const AbelianGroup& A = pA.ambient();
    if (!is_elementary(V, p))
        throw PreconditionError("extension kernel is not elementary abelian of exponent " + std::to_string(p));
    for (std::size_t j = 0; j < pA.count(); ++j)
        if (!A.is_zero_element(scale(pA.generators().column(j), p)))
            throw PreconditionError("classifier domain contains an element of order other than p");

    Matrix phi_m = phi;
    if (phi_m.rows() * phi_m.cols() == 0) phi_m = Matrix(V.num_generators(), pA.count());
    AbHom classifier(pA.group(), V, phi_m);

    const SmithForm& s = A.smith();
    const std::size_t g = A.num_generators();
    const std::size_t m = V.num_generators();

    // E is presented on the diagonal basis e_i = Uinv[:, i] of A plus V's generators.
    Matrix rel(g + m, 0);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const Int& d = s.diagonal[i];
        IntVec r(g + m);
        r[i] = d;
        if (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
            IntVec tau = scale(s.Uinv.column(i), d / p);
            auto c = pA.coordinates(tau);
            if (!c) throw PreconditionError("classifier domain misses part of the p-torsion subgroup");
            IntVec v = phi_m * *c;
            for (std::size_t k = 0; k < m; ++k) r[g + k] = -v[k];
        }
        rel.append_column(r);
    }
    const Matrix& vr = V.relations();
    for (std::size_t j = 0; j < vr.cols(); ++j) {
        IntVec r(g + m);
        for (std::size_t k = 0; k < m; ++k) r[g + k] = vr(k, j);
        rel.append_column(r);
    }
    AbelianGroup E(g + m, rel);

    Matrix inc(g + m, m);
    for (std::size_t k = 0; k < m; ++k) inc(g + k, k) = 1;
    Matrix proj = s.Uinv.hcat(Matrix(g, m));

    Verdict verdict = classifier.is_zero() ? Verdict::Split : Verdict::NonSplit;
    return ExtensionResult{E, verdict, AbHom(V, E, inc), AbHom(E, A, proj)};
}

Invariants max_fusion(const Invariants& right, long p, std::size_t left_rank) {
    std::vector<Int> t = right.torsion;
    std::size_t fused = 0;
    for (auto it = t.rbegin(); it != t.rend() && fused < left_rank; ++it)
        if (mpz_divisible_ui_p(it->get_mpz_t(), p)) {
            *it *= p;
            ++fused;
        }
    for (; fused < left_rank; ++fused) t.push_back(Int(p));
    return Invariants::from_cyclic_orders(right.free_rank, t);
}

std::vector<Invariants> enumerate_middles(const AbelianGroup& right, long p, std::size_t left_rank) {
    const SmithForm& s = right.smith();
    Matrix taus(right.num_generators(), 0);
    for (std::size_t i = 0; i < s.rank; ++i)
        if (mpz_divisible_ui_p(s.diagonal[i].get_mpz_t(), p))
            taus.append_column(scale(s.Uinv.column(i), s.diagonal[i] / p));
    Subgroup pA(right, taus);
    AbelianGroup V = AbelianGroup::from_invariants(Invariants::from_cyclic_orders(0, std::vector<Int>(left_rank, Int(p))));

    const std::size_t cells = left_rank * pA.count();
    std::set<std::pair<std::size_t, std::vector<std::string>>> seen;
    std::vector<Invariants> out;
    std::vector<long> digits(cells, 0);
    for (;;) {
        Matrix phi(left_rank, pA.count());
        for (std::size_t c = 0; c < cells; ++c) phi(c / pA.count(), c % pA.count()) = digits[c];
        Invariants inv = classify_elementary_extension(pA, V, phi, p).middle.invariants();
        std::vector<std::string> key;
        for (const auto& d : inv.torsion) key.push_back(d.get_str());
        if (seen.emplace(inv.free_rank, key).second) out.push_back(inv);

        std::size_t c = 0;
        while (c < cells && ++digits[c] == p) digits[c++] = 0;
        if (c == cells) break;
    }
    std::sort(out.begin(), out.end(), [](const Invariants& a, const Invariants& b) {
        return a.torsion_order() != b.torsion_order() ? a.torsion_order() < b.torsion_order()
                                                      : a.render() < b.render();
    });
    return out;
}

}  // namespace coh
