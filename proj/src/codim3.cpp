#include "cohomotopy/codim3.hpp"

#include "cohomotopy/errors.hpp"

#include <algorithm>

namespace coh {

namespace {

void require_codim3(const Datum& d) {
    if (d.codimension != 3)
        throw HypothesisError("the codimension-3 engine needs codimension 3, got " + std::to_string(d.codimension));
}

F2Matrix vstack(const F2Matrix& a, const F2Matrix& b) { return a.transpose().hcat(b.transpose()).transpose(); }

F2Matrix block_diag(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.get(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.get(i, j));
    return out;
}

// Mod-2 reduction of Sq^k_Z applied to the generators of a subgroup of H^i.
F2Matrix on_subgroup(const F2Matrix& integral_op, const Subgroup& s) {
    return integral_op * F2Matrix::from_int(s.generators());
}

bool span_contains(const F2Matrix& big, const F2Matrix& small) {
    return big.hcat(small).rank() == big.rank();
}

Int pow2(int k) { return Int(1) << k; }

Subgroup kernel_sq2z(const Datum& d, int i) { return op_kernel(d, OpName::Sq2Z, i); }

// ker(Sq²_Z) ∩ ker(Sq⁴_Z) on H^{n-1}.
Subgroup kernel_sq2z_sq4z(const Datum& d) {
    const int i = d.n() - 1;
    AbelianGroup H = d.H(i);
    F2Matrix both = vstack(d.sq2z(i), d.sq4z(i));
    AbHom f(H, elementary_group(both.rows(), 2), both.to_int());
    return hom_kernel(f);
}

struct ThetaInfo {
    Parameter param;
    std::map<int, Invariants> groups;
};

// QH^{n+2}(X;Sq²) divided by the image of Θ on `domain` (a subgroup of H^{n-1}).
ThetaInfo theta_info(const Datum& d, const Subgroup& domain) {
    const int n = d.n();
    F2Matrix sq2n = d.op(Op::Sq2, n);
    const std::size_t r = d.F2(n + 2);
    const std::size_t base = r - sq2n.rank();
    ThetaInfo t;
    auto declared = d.overrides.thetaImage.find(n - 1);
    if (base == 0 || domain.is_trivial()) {
        t.param = {"theta", Provenance::Computed, 0, "Θ has trivial domain or codomain"};
        t.groups[0] = elementary(base);
    } else if (declared != d.overrides.thetaImage.end()) {
        F2Matrix span = sq2n;
        for (const auto& v : declared->second) {
            if (v.size() != r) throw DataError("declared Θ image vector has the wrong length");
            span = span.hcat(F2Matrix::from_columns(r, {v}));
        }
        const std::size_t reduced = r - span.rank();
        t.param = {"theta", Provenance::Override, reduced < base ? 1 : 0, "declared Θ image"};
        t.groups[*t.param.value] = elementary(reduced);
    } else {
        const std::size_t drop = std::min(domain.group().invariants().two_rank(), base);
        t.param = {"theta", Provenance::Unknown, std::nullopt,
                   "Θ image unknown; branch 1 divides out the largest possible image"};
        t.groups[0] = elementary(base);
        t.groups[1] = elementary(base - drop);
    }
    return t;
}

ParametricGroup theta_group(const std::string& name, const ThetaInfo& t) {
    ParametricGroup g;
    g.name = name;
    g.parameters.push_back(t.param);
    for (const auto& a : assignment_lattice(g.parameters)) g.branches.push_back({a, t.groups.at(a.at("theta")), Verdict::Split, {}, {}});
    return g;
}

Parameter phi_param(const Datum& d, const Codim3Options& o) {
    const int n = d.n();
    if (d.tag == Structure::String) return {"eps_phi", Provenance::Forced, 0, "Φ vanishes on string manifolds"};
    if (kernel_sq2z_sq4z(d).is_trivial()) return {"eps_phi", Provenance::Computed, 0, "Φ has trivial domain"};
    F2Matrix indeterminacy = d.op(Op::Sq2Sq1, n).hcat(d.op(Op::Sq1, n + 2));
    if (indeterminacy.rank() == d.F2(n + 3)) return {"eps_phi", Provenance::Computed, 0, "Φ has trivial codomain"};
    if (o.assumePhiTrivial) return {"eps_phi", Provenance::Override, 0, "--assume-phi-trivial"};
    if (d.overrides.phiTrivial != Tri::Unknown)
        return {"eps_phi", Provenance::Override, d.overrides.phiTrivial == Tri::True ? 0 : 1, "phiTrivial override"};
    return {"eps_phi", Provenance::Unknown, std::nullopt, "Φ not determined by the data"};
}

Parameter t_param(const Datum& d, const Codim3Options& o) {
    const int n = d.n();
    if (d.tag == Structure::String) return {"eps_T", Provenance::Forced, 0, "𝕋 vanishes on string manifolds"};
    if (d.op(Op::Sq2, n + 1).rank() == d.F2(n + 3)) return {"eps_T", Provenance::Computed, 0, "𝕋 has trivial codomain"};
    if (kernel_sq2z_sq4z(d).is_trivial()) {
        F2Matrix ksq = d.op(Op::Sq2Sq1, n).kernel();
        if (span_contains(d.sq2z(n - 2), ksq)) return {"eps_T", Provenance::Computed, 0, "𝕋 has trivial domain"};
    }
    if (o.assumeTTrivial) return {"eps_T", Provenance::Override, 0, "--assume-t-trivial"};
    if (d.overrides.tTrivial != Tri::Unknown)
        return {"eps_T", Provenance::Override, d.overrides.tTrivial == Tri::True ? 0 : 1, "tTrivial override"};
    return {"eps_T", Provenance::Unknown, std::nullopt, "𝕋 not determined by the data"};
}

Parameter eps3_param(const Datum& d, const Codim3Options& o) {
    if (d.tag == Structure::String) return {"eps3", Provenance::Forced, 0, "p1 = 0 mod 3 on string manifolds"};
    if (d.p1Mod3Trivial == Tri::True) return {"eps3", Provenance::Forced, 0, "p1 = 0 mod 3"};
    try {
        if (d.p1cup3_at(d.n() - 1).is_zero())
            return {"eps3", Provenance::Computed, 0, "P1 acts trivially on H^{n-1}(F3)"};
    } catch (const DegreeError&) {
    } catch (const MissingDataError&) {
    }
    if (d.overrides.threePrimaryEpsilon)
        return {"eps3", Provenance::Override, *d.overrides.threePrimaryEpsilon, "threePrimaryEpsilon override"};
    if (o.assumeEps3Zero) return {"eps3", Provenance::Override, 0, "--assume-eps3-zero"};
    return {"eps3", Provenance::Unknown, std::nullopt, "3-primary parameter not determined"};
}

Parameter eps_sq4z_param(const Datum& d) {
    const int e = eps_sq4z(d);
    return {"eps_sq4z", Provenance::Computed, e, e ? "Sq4_Z nonzero on ker(Sq2_Z:n-1)" : "Sq4_Z zero on ker(Sq2_Z:n-1)"};
}

// 3-torsion subgroup of g.
Subgroup three_torsion(const AbelianGroup& g) {
    AbHom times3(g, g, Matrix::identity(g.num_generators()).scaled(3));
    return hom_kernel(times3);
}

// P¹₃(δ⁻¹(₃K)) ⊆ P¹_Z(H^{n-1}), when the mod-3 data is present.
std::optional<bool> three_primary_criterion(const Datum& d, const Subgroup& K) {
    const int n = d.n();
    try {
        AbelianGroup H = d.H(n);
        Matrix delta = d.bockstein3_at(n - 1);
        F3Matrix p1 = d.p1cup3_at(n - 1);
        F3Matrix image = p1 * d.rho3_at(n - 1);
        Subgroup tk = three_torsion(K.group());
        Matrix m = delta.hcat(H.relations());
        for (std::size_t j = 0; j < tk.count(); ++j) {
            IntVec x = K.generators() * tk.generators().column(j);
            auto sol = solve_integer(m, x);
            if (!sol) return std::nullopt;
            IntVec lift(sol->begin(), sol->begin() + static_cast<long>(d.F3(n - 1)));
            if (!image.in_image(p1.apply(fvec_from_int(lift, 3)))) return false;
        }
        return true;
    } catch (const DegreeError&) {
    } catch (const MissingDataError&) {
    }
    return std::nullopt;
}

bool has_three_torsion(const Invariants& g) {
    for (const auto& t : g.torsion)
        if (mpz_divisible_ui_p(t.get_mpz_t(), 3)) return true;
    return false;
}

SESReport ses(const std::string& name, const std::string& ll, const Invariants& l, const std::string& ml,
              const Invariants& m, const std::string& rl, const Invariants& r, Verdict v) {
    SESReport s;
    s.name = name;
    s.leftLabel = ll;
    s.middleLabel = ml;
    s.rightLabel = rl;
    s.left = l;
    s.middle = m;
    s.right = r;
    s.verdict = v;
    return s;
}

}  // namespace

int eps_sq4z(const Datum& d) {
    require_codim3(d);
    const int i = d.n() - 1;
    return on_subgroup(d.sq4z(i), kernel_sq2z(d, i)).is_zero() ? 0 : 1;
}

AbelianGroup compute_g1(const Datum& d) {
    require_codim3(d);
    const int n = d.n();
    F2Matrix img = on_subgroup(d.sq4z(n - 1), kernel_sq2z(d, n - 1));
    const std::size_t r = d.F2(n + 3);
    return AbelianGroup(r, Matrix::identity(r).scaled(2).hcat(img.to_int()));
}

KerAlpha3 ker_alpha3(const Datum& d, const Codim3Options& o) {
    (void)o;
    require_codim3(d);
    const int n = d.n();
    KerAlpha3 out;

    Subgroup Kn = kernel_sq2z(d, n);
    bool theta_known = d.is_manifold();
    if (!theta_known) {
        // Θ: ker(Sq2_Z:n) -> QH^{n+3}(X;Sq2).
        auto it = d.overrides.thetaImage.find(n);
        bool declared_zero = it != d.overrides.thetaImage.end() &&
                             std::all_of(it->second.begin(), it->second.end(), [](const FVec& v) { return fvec_is_zero(v); });
        theta_known = declared_zero || d.op(Op::Sq2, n + 1).rank() == d.F2(n + 3) || Kn.is_trivial();
        if (!theta_known) out.notes.push_back("ker(Θ:n) unknown; ker(Sq2_Z:n) is used as an upper bound");
    }

    const F2Matrix kerSq2 = d.op(Op::Sq2, n + 1).kernel();
    const std::size_t top = d.F2(n + 3);
    F2Matrix L = vstack(d.op(Op::Sq2, n - 1), d.op(Op::Sq4, n - 1));
    F2Matrix image = vstack(d.sq2z(n - 1), d.sq4z(n - 1));
    LiftClassifier cv = lift_classifier(d, n, Kn, L, block_diag(kerSq2, F2Matrix::identity(top)), image);
    LiftClassifier ca = lift_classifier(d, n, Kn, d.op(Op::Sq2, n - 1), kerSq2, d.sq2z(n - 1));

    ExtensionResult ev = classify_elementary_two_extension(cv.twoTorsion, cv.target, cv.phi);
    ExtensionResult ea = classify_elementary_two_extension(ca.twoTorsion, ca.target, ca.phi);
    const Verdict status = theta_known ? Verdict::Split : Verdict::Undetermined;

    out.qhComponent = ea.verdict;
    // G₁ component: φ on the classes whose QH component vanishes.
    F2Matrix phiA = F2Matrix::from_int(ca.phi);
    F2Matrix phiV = F2Matrix::from_int(cv.phi);
    F2Matrix ker_a = phiA.kernel();
    bool g1_nonzero = false;
    for (std::size_t j = 0; j < ker_a.cols(); ++j) {
        IntVec v = fvec_to_int(phiV.apply(ker_a.column(j)));
        if (!cv.target.is_zero_element(v)) g1_nonzero = true;
    }
    out.g1Component = g1_nonzero ? Verdict::NonSplit : Verdict::Split;

    // Purity of G₁ = image of 0 ⊕ H^{n+3}(F2) in ker(α³).
    const AbelianGroup& E = ev.middle;
    Subgroup twiceE(E, Matrix::identity(E.num_generators()).scaled(2));
    const std::size_t a = kerSq2.cols();
    for (unsigned long mask = 1; mask < (1ul << top); ++mask) {
        IntVec v(a + top, 0);
        for (std::size_t j = 0; j < top; ++j)
            if (mask >> j & 1u) v[a + j] = 1;
        if (cv.target.is_zero_element(v)) continue;
        IntVec e = ev.inclusion.apply(v);
        if (twiceE.contains(e)) out.g1Summand = false;
    }
    // Sq⁴(x') ∈ Sq⁴_Z(ker(Sq2_Z:n-1)) on the chosen Bockstein preimages.
    F2Matrix sq4img = on_subgroup(d.sq4z(n - 1), kernel_sq2z(d, n - 1));
    for (std::size_t j = 0; j < cv.phi.cols(); ++j) {
        FVec c = fvec_from_int(cv.phi.column(j));
        FVec g(c.begin() + static_cast<long>(a), c.end());
        if (!sq4img.in_image(g)) out.g1Criterion = false;
    }
    if (out.g1Summand != out.g1Criterion)
        out.notes.push_back("G1 summand test and the preimage criterion disagree on the chosen preimages");

    const Invariants right = Kn.group().invariants();
    out.alpha3Ses = ses("ker(alpha3:n)", "ker(Sq2:n+1)/Sq2_Z(H^{n-1}) + G1", cv.target.invariants(), "ker(alpha3:n)",
                        ev.middle.invariants(), "ker(Θ:n)", right, ev.verdict);
    out.alpha3Ses.classifier = cv.phi;
    out.sq2BarSes = ses("ker(Sq2bar:n)", "ker(Sq2:n+1)/Sq2_Z(H^{n-1})", ca.target.invariants(), "ker(Sq2bar:n)",
                        ea.middle.invariants(), "ker(Θ:n)", right, ea.verdict);
    out.sq2BarSes.classifier = ca.phi;
    if (!theta_known) {
        out.alpha3Ses.verdict = out.sq2BarSes.verdict = Verdict::Undetermined;
        out.alpha3Ses.notes = out.sq2BarSes.notes = out.notes;
    }
    out.group.name = "ker(alpha3:n)";
    out.group.branches.push_back({{}, ev.middle.invariants(), theta_known ? ev.verdict : status, {}, {out.alpha3Ses}});
    out.kerSq2Bar.name = "ker(Sq2bar:n)";
    out.kerSq2Bar.branches.push_back({{}, ea.middle.invariants(), theta_known ? ea.verdict : status, {}, {out.sq2BarSes}});
    return out;
}

ParametricGroup theta_quotient_n2(const Datum& d) {
    require_codim3(d);
    return theta_group("QH^{n+2}(X;Sq2)/Θ", theta_info(d, kernel_sq2z_sq4z(d)));
}

ParametricGroup compute_g2(const Datum& d, const Codim3Options& o) {
    require_codim3(d);
    const int n = d.n();
    if (!d.op(Op::Sq1, n + 2).is_zero()) throw HypothesisError("Sq1 acts nontrivially on H^{n+2}(X;F2)");
    F2Matrix s = d.op(Op::Sq2Sq1, n) * d.op(Op::Sq2, n).kernel();
    const std::size_t base = d.F2(n + 3) - s.rank();
    ParametricGroup g;
    g.name = "G2";
    g.parameters.push_back(phi_param(d, o));
    for (const auto& a : assignment_lattice(g.parameters)) {
        const std::size_t drop = a.at("eps_phi") ? std::min<std::size_t>(1, base) : 0;
        g.branches.push_back({a, elementary(base - drop), Verdict::Split, {}, {}});
    }
    return g;
}

TowerGroups tower_groups(const Datum& d, const Codim3Options& o) {
    TowerGroups t;
    t.epsSq4Z = eps_sq4z(d);
    t.g1 = compute_g1(d).invariants();
    t.g2 = compute_g2(d, o);
    t.kerAlpha3 = ker_alpha3(d, o);
    t.thetaQuotient = theta_quotient_n2(d);
    return t;
}

Codim3Result assemble_codim3(const Datum& d, const Codim3Options& o) {
    require_codim3(d);
    if (!d.is_manifold()) throw TagError("the four-case theorem needs a manifold tag; use the tower route for CW data");
    const int n = d.n();

    Codim3Result r;
    const Tri w2z = w2_vanishes(d);
    if (w2z == Tri::Unknown) throw DispatchError("cannot decide whether w2 vanishes");
    if (w2z == Tri::True) {
        r.manifoldCase = 1;
    } else {
        const Tri w3z = w3_vanishes(d);
        if (w3z == Tri::Unknown) throw DispatchError("cannot decide whether w3 vanishes");
        if (w3z == Tri::True) {
            r.manifoldCase = 2;
        } else {
            auto stored = [&](Op op, Op fallback) {
                auto ot = d.ops.find(op);
                if (ot != d.ops.end() && ot->second.count(n)) return ot->second.at(n);
                return d.op(fallback, n);
            };
            F2Matrix cw2 = stored(Op::CupW2, Op::Sq2), cw3 = stored(Op::CupW3, Op::Sq2Sq1);
            r.manifoldCase = (cw3 * cw2.kernel()).is_zero() ? 3 : 4;
        }
    }

    r.tower = tower_groups(d, o);
    const KerAlpha3& ka = r.tower.kerAlpha3;
    ThetaInfo theta = theta_info(d, kernel_sq2z_sq4z(d));
    Subgroup Kn = kernel_sq2z(d, n);

    r.group.name = "pi^n(M)";
    r.group.parameters.push_back(eps_sq4z_param(d));
    r.group.parameters.push_back(theta.param);
    if (r.manifoldCase <= 2) r.group.parameters.push_back(phi_param(d, o));
    if (r.manifoldCase == 1) r.group.parameters.push_back(t_param(d, o));
    Parameter e3 = eps3_param(d, o);
    r.group.parameters.push_back(e3);

    const Invariants kerBar = ka.kerSq2Bar.only().group;
    const Invariants kerA3 = ka.group.only().group;
    for (const auto& a : assignment_lattice(r.group.parameters)) {
        const Invariants T = theta.groups.at(a.at("theta"));
        int k = 0;
        Invariants right;
        std::string rightLabel;
        switch (r.manifoldCase) {
            case 1: k = 3 - a.at("eps_sq4z") - a.at("eps_phi") - a.at("eps_T"); break;
            case 2: k = 2 - a.at("eps_sq4z") - a.at("eps_phi"); break;
            case 3: k = 2 - a.at("eps_sq4z"); break;
            default: break;
        }
        if (r.manifoldCase == 4) {
            right = kerA3 + T;
            rightLabel = "ker(alpha3:n) + QH^{n+2}(M;Sq2)/Θ";
        } else {
            right = kerBar + T;
            rightLabel = "ker(Sq2bar:n) + QH^{n+2}(M;Sq2)/Θ";
        }
        const Invariants two = r.manifoldCase == 4 ? Invariants::zero() : cyclic(pow2(k));
        const Invariants q3 = two + right;

        Branch b;
        b.assumptions = a;
        Invariants left = two;
        Verdict v = Verdict::Split;
        std::vector<std::string> notes;
        if (a.at("eps3") == 0) {
            left = left + cyclic(3);
            b.group = q3 + cyclic(3);
            const bool certified = e3.provenance == Provenance::Forced || e3.provenance == Provenance::Computed;
            if (!certified && has_three_torsion(right)) {
                auto crit = three_primary_criterion(d, Kn);
                if (crit && *crit) {
                    notes.emplace_back("3-primary criterion holds on the supplied mod-3 data");
                } else {
                    v = Verdict::Undetermined;
                    b.candidates = extension_candidates(q3, 3, 1, o.enumerateExtensions);
                    notes.emplace_back("3-primary extension not determined; candidates listed");
                }
            }
        } else {
            b.group = q3;
        }
        b.status = v;
        SESReport outer = ses("pi^n", r.manifoldCase == 4 ? "Z/3^(1-eps)" : "Z/2^k + Z/3^(1-eps)", left, "pi^n(M)",
                              b.group, rightLabel, right, v);
        outer.candidates = b.candidates;
        outer.notes = notes;
        b.ses.push_back(outer);
        b.ses.push_back(r.manifoldCase == 4 ? ka.alpha3Ses : ka.sq2BarSes);
        r.group.branches.push_back(std::move(b));
    }
    r.notes = ka.notes;
    return r;
}

ParametricGroup codim3_tower_route(const Datum& d, const Codim3Options& o) {
    require_codim3(d);
    const int n = d.n();
    const bool c3 = !d.op(Op::Sq2, n + 1).is_zero();
    const bool c2 = !d.op(Op::Sq2Sq1, n).is_zero();
    const bool c1 = !(d.op(Op::Sq2Sq1, n) * d.op(Op::Sq2, n).kernel()).is_zero();
    // Every stage term is a quotient of H^{n+3}(F2); the counting formulas
    // assume at most one class there.
    const std::size_t top = d.F2(n + 3);
    if (top > 1) throw HypothesisError("the tower route needs H^{n+3}(X;F2) of rank at most 1");
    if (!d.op(Op::Sq1, n + 2).is_zero()) throw HypothesisError("the tower route needs Sq1 = 0 on H^{n+2}(X;F2)");

    KerAlpha3 ka = ker_alpha3(d, o);
    ThetaInfo theta = theta_info(d, kernel_sq2z_sq4z(d));
    ParametricGroup g;
    g.name = "[X,Q3S^n]";
    g.parameters = {eps_sq4z_param(d), theta.param, phi_param(d, o), t_param(d, o)};
    const Invariants kerBar = ka.kerSq2Bar.only().group;
    const Invariants kerA3 = ka.group.only().group;
    const Verdict base = ka.group.only().status == Verdict::Undetermined ? Verdict::Undetermined : Verdict::Split;

    for (const auto& a : assignment_lattice(g.parameters)) {
        const Invariants T = theta.groups.at(a.at("theta"));
        const int es = a.at("eps_sq4z"), ep = a.at("eps_phi"), et = a.at("eps_T");
        Branch b;
        b.assumptions = a;
        b.status = base;
        if (c1) {
            const Invariants q2 = T + kerA3;
            const std::size_t g3 = top == 0 ? 0 : static_cast<std::size_t>(1 - et);
            if (c3 || g3 == 0) {
                b.group = q2;
            } else {
                b.group = q2 + elementary(g3);
                b.status = Verdict::Undetermined;
                b.candidates = extension_candidates(q2, 2, g3, o.enumerateExtensions);
            }
        } else {
            const int k2 = c2 ? 2 - es : 2 - es - ep;
            const int k = top == 0 ? 0 : c3 ? k2 : 3 - es - ep - et;
            b.group = T + kerBar + cyclic(pow2(k));
        }
        g.branches.push_back(std::move(b));
    }
    return g;
}

ParametricGroup string_fast_path(const Datum& d) {
    require_codim3(d);
    if (d.tag != Structure::String) throw TagError("the string fast path needs a String tag");
    const int n = d.n();
    KerAlpha3 ka = ker_alpha3(d);
    ThetaInfo theta = theta_info(d, kernel_sq2z_sq4z(d));

    // Sq2_Z(H^{n-1}) = Sq2(H^{n-1}(F2)) decides the inner sequence.
    const bool equal_images = d.sq2z(n - 1).rank() == d.op(Op::Sq2, n - 1).rank();
    SESReport inner = ka.sq2BarSes;
    inner.leftLabel = "QH^{n+1}(M;Sq2_Z)";
    inner.rightLabel = "H^n(M;Z)";
    const Verdict criterion = equal_images ? Verdict::Split : Verdict::NonSplit;
    if (criterion != inner.verdict) inner.notes.push_back("image comparison disagrees with the classifier");
    inner.verdict = criterion;

    ParametricGroup g;
    g.name = "pi^n(M)";
    g.parameters.push_back(theta.param);
    const Invariants kerBar = ka.kerSq2Bar.only().group;
    for (const auto& a : assignment_lattice(g.parameters)) {
        const Invariants right = kerBar + theta.groups.at(a.at("theta"));
        const Invariants middle = cyclic(24) + right;
        SESReport outer = ses("pi^n", "Z/24", cyclic(24), "pi^n(M)", middle, "ker(Sq2bar:n) + QH^{n+2}(M;Θ)", right,
                              Verdict::Split);
        g.branches.push_back({a, middle, Verdict::Split, {}, {outer, inner}});
    }
    return g;
}

ParametricGroup spin3_bordism(const Datum& d) {
    require_codim3(d);
    if (d.tag != Structure::Spin && d.tag != Structure::String)
        throw TagError("Omega_3^Spin(M) needs a Spin or String tag");
    const int n = d.n();
    KerAlpha3 ka = ker_alpha3(d);
    ThetaInfo theta = theta_info(d, kernel_sq2z(d, n - 1));
    ParametricGroup g;
    g.name = "Omega_3^Spin(M)";
    g.parameters.push_back(theta.param);
    const Invariants kerBar = ka.kerSq2Bar.only().group;
    for (const auto& a : assignment_lattice(g.parameters)) {
        const Invariants left = theta.groups.at(a.at("theta"));
        SESReport s = ses("Omega_3^Spin(M)", "QH^{n+2}(M;Sq2)/Θ(ker(Sq2_Z:n-1))", left, "Omega_3^Spin(M)", left + kerBar,
                          "ker(Sq2bar:n)", kerBar, Verdict::Split);
        g.branches.push_back({a, left + kerBar, Verdict::Split, {}, {s}});
    }
    return g;
}

}  // namespace coh
