#include "cohomotopy/validate.hpp"

#include "cohomotopy/errors.hpp"

#include <optional>

namespace coh {

bool ValidationReport::failed(const std::string& id) const {
    for (const auto& f : failures)
        if (f.id == id) return true;
    return false;
}

const char* relation_name(const std::string& id) {
    if (id == "a") return "Sq¹∘Sq¹ = 0";
    if (id == "b") return "Sq¹ = ρ₂∘δ";
    if (id == "c") return "δ∘ρ₂ = 0 and Bockstein exactness";
    if (id == "d") return "Sq²∘Sq²∘ρ₂ = 0";
    if (id == "e") return "Sq¹∘Sq⁴∘ρ₂ = Sq²∘Sq¹∘Sq²∘ρ₂";
    if (id == "f") return "Wu formula near the top degree";
    if (id == "g") return "Sq¹(w₂) = w₃";
    return "structure";
}

namespace {

std::vector<long> unit(std::size_t n, std::size_t j) {
    std::vector<long> v(n, 0);
    if (j < n) v[j] = 1;
    return v;
}

std::vector<long> to_long(const IntVec& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

std::vector<long> to_long(const FVec& v) {
    return std::vector<long>(v.begin(), v.end());
}

// First column where two maps differ.
std::optional<std::size_t> first_difference(const F2Matrix& a, const F2Matrix& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.column(j) != b.column(j)) return j;
    return std::nullopt;
}

class Validator {
public:
    explicit Validator(const Datum& d) : d_(d) {}

    ValidationReport run() {
        for (int i = -1; i <= d_.dimension; ++i) {
            attempt("a", i, [&] { check_a(i); });
            attempt("b", i, [&] { check_b(i); });
            attempt("c", i, [&] { check_c(i); });
            attempt("d", i, [&] { check_d(i); });
            attempt("e", i, [&] { check_e(i); });
        }
        if (d_.is_manifold()) check_f();
        attempt("g", 2, [&] { check_g(); });
        check_structure();
        report_.warnings = d_.warnings;
        return std::move(report_);
    }

private:
    const Datum& d_;
    ValidationReport report_;

    template <class F>
    void attempt(const std::string& id, int deg, F f) {
        try {
            f();
            report_.checked.push_back(id + "@" + std::to_string(deg));
        } catch (const DegreeError&) {
        } catch (const MissingDataError&) {
        } catch (const WellDefinednessError& e) {
            fail(id, deg, {}, e.what());
        }
    }

    void fail(const std::string& id, int deg, std::vector<long> witness, std::string detail) {
        report_.failures.push_back({id, relation_name(id), deg, std::move(witness), std::move(detail)});
    }

    void compare(const std::string& id, int deg, const F2Matrix& lhs, const F2Matrix& rhs, const char* what) {
        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
            fail(id, deg, {}, std::string(what) + ": shape mismatch");
            return;
        }
        if (auto j = first_difference(lhs, rhs)) fail(id, deg, unit(lhs.cols(), *j), what);
    }

    void check_a(int i) {
        F2Matrix s = d_.op(Op::Sq1, i + 1) * d_.op(Op::Sq1, i);
        compare("a", i, s, F2Matrix(s.rows(), s.cols()), "Sq¹Sq¹ is nonzero on a basis class");
    }

    void check_b(int i) {
        F2Matrix lhs = d_.op(Op::Sq1, i);
        F2Matrix rhs = d_.rho2_at(i + 1) * F2Matrix::from_int(d_.bockstein_at(i));
        compare("b", i, lhs, rhs, "Sq¹ differs from ρ₂∘δ on a basis class");
    }

    void check_c(int i) {
        AbelianGroup Hi = d_.H(i), Hn = d_.H(i + 1);
        AbelianGroup Fi = AbelianGroup::elementary_two(d_.F2(i));
        AbHom rho(Hi, Fi, d_.rho2_at(i).to_int());
        AbHom delta(Fi, Hn, d_.bockstein_at(i));

        AbHom dr = delta.compose(rho);
        for (std::size_t j = 0; j < Hi.num_generators(); ++j)
            if (!Hn.is_zero_element(dr.matrix().column(j))) {
                fail("c", i, unit(Hi.num_generators(), j), "δ∘ρ₂ is nonzero on a generator");
                return;
            }
        // ker ρ₂ = 2·H^i
        Subgroup twice(Hi, Matrix::identity(Hi.num_generators()).scaled(2));
        Subgroup kr = hom_kernel(rho);
        for (std::size_t j = 0; j < kr.count(); ++j)
            if (!twice.contains(kr.generators().column(j))) {
                fail("c", i, to_long(kr.generators().column(j)), "ker ρ₂ is larger than 2·H^i(ℤ)");
                return;
            }
        // ker δ = im ρ₂
        F2Matrix rho2 = d_.rho2_at(i);
        Subgroup kd = hom_kernel(delta);
        for (std::size_t j = 0; j < kd.count(); ++j) {
            FVec v = fvec_from_int(kd.generators().column(j));
            if (!rho2.in_image(v)) {
                fail("c", i, to_long(v), "ker δ is larger than im ρ₂");
                return;
            }
        }
        // ker(×2 on H^{i+1}) = im δ
        Subgroup tt = two_torsion(Hn);
        Subgroup im(Hn, delta.matrix());
        for (std::size_t j = 0; j < tt.count(); ++j)
            if (!im.contains(tt.generators().column(j))) {
                fail("c", i + 1, to_long(tt.generators().column(j)), "2-torsion is not in the image of δ");
                return;
            }
    }

    void check_d(int i) {
        F2Matrix s = d_.op(Op::Sq2, i + 2) * d_.op(Op::Sq2, i) * d_.rho2_at(i);
        compare("d", i, s, F2Matrix(s.rows(), s.cols()), "Sq²Sq²ρ₂ is nonzero on a generator");
    }

    void check_e(int i) {
        F2Matrix lhs = d_.op(Op::Sq1, i + 4) * d_.op(Op::Sq4, i) * d_.rho2_at(i);
        F2Matrix rhs = d_.op(Op::Sq2, i + 3) * d_.op(Op::Sq1, i + 2) * d_.op(Op::Sq2, i) * d_.rho2_at(i);
        compare("e", i, lhs, rhs, "Sq¹Sq⁴ρ₂ and Sq²Sq¹Sq²ρ₂ differ on a generator");
    }

    std::optional<F2Matrix> stored(Op o, int i) const {
        auto ot = d_.ops.find(o);
        if (ot == d_.ops.end()) return std::nullopt;
        auto it = ot->second.find(i);
        if (it == ot->second.end()) return std::nullopt;
        return it->second;
    }

    void check_f() {
        const int D = d_.dimension;
        attempt("f", D, [&] {
            if (d_.F2(D) != 1) fail("f", D, {}, "top mod-2 cohomology must have rank 1");
        });
        for (int deg : {D - 3, D - 2}) {
            auto cup = stored(Op::CupW2, deg);
            if (!cup) continue;
            attempt("f", deg, [&] { compare("f", deg, d_.op(Op::Sq2, deg), *cup, "Sq² differs from w₂⌣"); });
        }
        if (auto cup = stored(Op::CupW3, D - 3)) {
            attempt("f", D - 3, [&] {
                F2Matrix s = stored(Op::Sq2Sq1, D - 3).value_or(d_.op(Op::Sq2, D - 2) * d_.op(Op::Sq1, D - 3));
                compare("f", D - 3, s, *cup, "Sq²Sq¹ differs from w₃⌣");
            });
        }
        if (d_.tag == Structure::String) {
            attempt("f", D - 4, [&] {
                F2Matrix s = d_.op(Op::Sq4, D - 4);
                compare("f", D - 4, s, F2Matrix(s.rows(), s.cols()), "Sq⁴ into the top degree must vanish");
            });
        }
    }

    void check_g() {
        if (!d_.w2 || !d_.w3) throw MissingDataError("w2/w3 classes");
        F2Matrix s1 = d_.op(Op::Sq1, 2);
        if (s1.cols() != d_.w2->size() || s1.rows() != d_.w3->size()) {
            fail("g", 2, {}, "w₂/w₃ vectors do not match the mod-2 ranks");
            return;
        }
        FVec lhs = s1.apply(*d_.w2);
        if (lhs != *d_.w3) fail("g", 2, to_long(*d_.w2), "Sq¹w₂ differs from w₃");
    }

    void check_structure() {
        if ((d_.tag == Structure::Spin || d_.tag == Structure::String)) {
            bool nonzero = d_.w2 && !fvec_is_zero(*d_.w2);
            if (auto c = stored(Op::CupW2, d_.dimension - 2); c && !c->is_zero()) nonzero = true;
            if (nonzero) fail("structure", 2, d_.w2 ? to_long(*d_.w2) : std::vector<long>{}, "spin structure requires w₂ = 0");
        }
        if (!d_.homology || !d_.is_manifold()) return;
        const HomologyData& h = *d_.homology;
        const std::optional<AbelianGroup>* groups[] = {&h.H1, &h.H2, &h.H3};
        for (int j = 1; j <= 3; ++j) {
            if (!*groups[j - 1]) continue;
            try {
                if ((*groups[j - 1])->invariants() != d_.H(d_.dimension - j).invariants())
                    fail("structure", d_.dimension - j, {},
                         "H_" + std::to_string(j) + " does not match H^" + std::to_string(d_.dimension - j) +
                             " under Poincaré duality");
            } catch (const DegreeError&) {
            } catch (const MissingDataError&) {
            }
        }
        auto rank_check = [&](const std::optional<std::size_t>& r, int j) {
            if (!r) return;
            try {
                if (*r != d_.F2(d_.dimension - j))
                    fail("structure", d_.dimension - j, {},
                         "mod-2 homology rank in degree " + std::to_string(j) + " does not match cohomology");
            } catch (const DegreeError&) {
            } catch (const MissingDataError&) {
            }
        };
        rank_check(h.h1Mod2, 1);
        rank_check(h.h3Mod2, 3);
    }
};

}  // namespace

ValidationReport validate_datum(const Datum& d) { return Validator(d).run(); }

}  // namespace coh
