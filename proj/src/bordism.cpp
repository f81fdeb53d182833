#include "cohomotopy/bordism.hpp"

#include "cohomotopy/codim3.hpp"
#include "cohomotopy/errors.hpp"

namespace coh {

namespace {

// π_k^S, k = 0..7.
const Int kStems[8] = {0, 2, 2, 24, 1, 1, 2, 240};

Invariants stem(int k) { return kStems[k] == 1 ? Invariants::zero() : cyclic(kStems[k]); }

const HomologyData& homology_of(const Datum& d) {
    if (!d.homology) throw MissingDataError("homology block is required for the bordism report");
    return *d.homology;
}

void require_tag(const Datum& d, std::initializer_list<Structure> ok, const std::string& what) {
    for (auto s : ok)
        if (d.tag == s) return;
    throw TagError(what + " does not apply to a " + to_string(d.tag) + " datum");
}

Branch single(const SESReport& s, Verdict v = Verdict::Split) { return {{}, s.middle, v, {}, {s}}; }

Tri tri_and(std::initializer_list<Tri> xs) {
    bool unknown = false;
    for (Tri t : xs) {
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::True;
}

}  // namespace

std::string to_string(Theory t) {
    switch (t) {
        case Theory::Framed: return "fr";
        case Theory::Spin: return "Spin";
        case Theory::SO: return "SO";
        case Theory::String: return "String";
    }
    return "?";
}

std::optional<Invariants> coefficient(Theory t, int k) {
    if (k < 0) return Invariants::zero();
    switch (t) {
        case Theory::Framed:
            if (k <= 7) return stem(k);
            break;
        case Theory::Spin: {
            static const Int spin[4] = {0, 2, 2, 1};
            if (k <= 3) return spin[k] == 1 ? Invariants::zero() : cyclic(spin[k]);
            break;
        }
        case Theory::SO:
            if (k == 0) return cyclic(0);
            if (k <= 3) return Invariants::zero();
            break;
        case Theory::String:
            if (k <= 6) return stem(k);
            if (k == 7) return Invariants::zero();
            break;
    }
    return std::nullopt;
}

bool coefficient_table_coherent() {
    for (int k = 0; k <= 2; ++k)
        if (coefficient(Theory::Framed, k) != coefficient(Theory::Spin, k)) return false;
    for (int k = 0; k <= 6; ++k)
        if (coefficient(Theory::Framed, k) != coefficient(Theory::String, k)) return false;
    return true;
}

ParametricGroup g_to_h_ses(const Datum& d, int k) {
    ParametricGroup g;
    g.name = "Omega_" + std::to_string(k) + "^fr(M)";
    SESReport s;
    s.name = g.name;
    s.middleLabel = g.name;
    switch (k) {
        case 1: {
            require_tag(d, {Structure::Spin, Structure::String}, "the k=1 sequence");
            const HomologyData& h = homology_of(d);
            if (!h.H1) throw MissingDataError("homology block lacks H1");
            s.leftLabel = "Omega_1^fr";
            s.rightLabel = "H1(M;Z)";
            s.left = *coefficient(Theory::Framed, 1);
            s.right = h.H1->invariants();
            break;
        }
        case 2: {
            require_tag(d, {Structure::Spin, Structure::String}, "the k=2 sequence");
            const HomologyData& h = homology_of(d);
            if (!h.H2) throw MissingDataError("homology block lacks H2");
            if (!h.h1Mod2) throw MissingDataError("homology block lacks h1Mod2");
            // Ω₂^Spin(M) = Ω₂^Spin ⊕ H₁(M;F₂) is carried on the left with the coefficient group.
            s.leftLabel = "Omega_2^fr + H1(M;F2)";
            s.rightLabel = "H2(M;Z)";
            s.left = *coefficient(Theory::Framed, 2) + elementary(*h.h1Mod2);
            s.right = h.H2->invariants();
            break;
        }
        case 3: {
            require_tag(d, {Structure::String}, "the k=3 sequence");
            ParametricGroup spin = spin3_bordism(d);
            g.parameters = spin.parameters;
            for (const auto& b : spin.branches) {
                SESReport t = s;
                t.leftLabel = "Omega_3^fr";
                t.rightLabel = "Omega_3^Spin(M)";
                t.left = *coefficient(Theory::Framed, 3);
                t.right = b.group;
                t.middle = t.left + t.right;
                g.branches.push_back({b.assumptions, t.middle, Verdict::Split, {}, {t}});
            }
            return g;
        }
        case 7: {
            s.leftLabel = "Omega_7^Fivebrane";
            s.rightLabel = "Omega_7^H(M)";
            s.verdict = Verdict::Undetermined;
            s.notes.push_back("left term unknown: no Fivebrane coefficient group is available");
            g.branches.push_back(single(s, Verdict::Undetermined));
            return g;
        }
        default: throw RangeError("no structure-group sequence for k = " + std::to_string(k));
    }
    s.middle = s.left + s.right;
    g.branches.push_back(single(s));
    return g;
}

std::string to_string(SectionVerdict v) {
    switch (v) {
        case SectionVerdict::Exists: return "Exists";
        case SectionVerdict::NotExists: return "NotExists";
        case SectionVerdict::Insufficient: return "Insufficient";
    }
    return "?";
}

SectionResult section_existence(const EulerData& e) {
    if (e.k != 1 && e.k != 2 && e.k != 3) throw RangeError("section check needs k in {1,2,3}");
    Tri delta = e.deltaZero;
    if (e.k != 2) {
        if (delta == Tri::False) throw InconsistentInputError("the defect class vanishes by definition for k = 1, 3");
        delta = Tri::True;
    }
    const Tri cond3 = tri_and({e.kappaZero, e.eHZero, delta});
    if (e.eGZero != Tri::Unknown && cond3 != Tri::Unknown && e.eGZero != cond3)
        throw InconsistentInputError("e_G(E) = 0 must hold exactly when kappa, e_H and delta all vanish");

    SectionResult r;
    const std::pair<const char*, Tri> conds[] = {
        {"e_G(E) = 0", e.eGZero}, {"kappa_G(E) = 0", e.kappaZero}, {"e_H(E) = 0", e.eHZero}, {"delta_G(E) = 0", delta}};
    for (const auto& [name, t] : conds) {
        if (t == Tri::False) r.failing.emplace_back(name);
        if (t == Tri::Unknown) r.unknown.emplace_back(name);
    }
    if (e.eGZero == Tri::True || cond3 == Tri::True) r.verdict = SectionVerdict::Exists;
    else if (e.eGZero == Tri::False || cond3 == Tri::False) r.verdict = SectionVerdict::NotExists;
    return r;
}

Invariants wedge_oracle(const std::vector<int>& sphere_dims, int n) {
    if (n < 5) throw PreconditionError("the wedge oracle needs n >= 5");
    Invariants out;
    for (int d : sphere_dims) {
        if (d - n > 7) throw RangeError("stem " + std::to_string(d - n) + " is outside the table");
        if (d >= n) out = out + stem(d - n);
    }
    return out;
}

}  // namespace coh
