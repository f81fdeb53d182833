#include "oracles.hpp"

#include "cohomotopy/extension.hpp"
#include "cohomotopy/operations.hpp"
#include "cohomotopy/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace coh;

namespace {

std::vector<long> primary_of(const Invariants& inv) {
    std::vector<long> out;
    for (const auto& q : inv.primary_orders()) out.push_back(q.get_si());
    return out;
}

// A = ⊕ Z/a_i on its standard generators; the p-torsion subgroup is spanned
// by (a_i / p) e_i for every a_i divisible by p.
struct Standard {
    AbelianGroup A;
    Subgroup pA;
    std::vector<std::size_t> divisible;  // factor index of each pA generator
};

Standard standard(const std::vector<long>& a, long p) {
    std::vector<Int> orders(a.begin(), a.end());
    Matrix rel(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rel(i, i) = a[i];
    AbelianGroup A(a.size(), rel);
    Matrix gens(a.size(), 0);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] % p == 0) {
            IntVec v(a.size());
            v[i] = a[i] / p;
            gens.append_column(v);
            idx.push_back(i);
        }
    return {A, Subgroup(A, gens), idx};
}

// Visits every classifier matrix with entries in 0..p-1.
template <class F>
void each_phi(std::size_t rows, std::size_t cols, long p, F&& f) {
    const std::size_t cells = rows * cols;
    std::vector<long> digit(cells, 0);
    for (;;) {
        Matrix phi(rows, cols);
        for (std::size_t c = 0; c < cells; ++c) phi(c / cols, c % cols) = digit[c];
        f(phi);
        std::size_t c = 0;
        while (c < cells && ++digit[c] == p) digit[c++] = 0;
        if (c == cells) return;
    }
}

void check_against_oracle(const std::vector<long>& a, std::size_t r, long p) {
    Standard s = standard(a, p);
    AbelianGroup V = elementary_group(r, p);
    each_phi(r, s.pA.count(), p, [&](const Matrix& phi) {
        std::vector<std::vector<long>> lifts(a.size(), std::vector<long>(r, 0));
        for (std::size_t j = 0; j < s.divisible.size(); ++j)
            for (std::size_t k = 0; k < r; ++k) lifts[s.divisible[j]][k] = phi(k, j).get_si();
        ExtensionResult e = classify_elementary_extension(s.pA, V, phi, p);
        CHECK(primary_of(e.middle.invariants()) == oracle::extension_type(a, p, r, lifts));
        CHECK((e.verdict == Verdict::Split) == phi.is_zero());
        CHECK(e.projection.compose(e.inclusion).is_zero());
    });
}

}  // namespace

TEST_CASE("extension: every (A, V, phi) with |A| <= 16 matches the element-level oracle") {
    std::size_t cases = 0;
    for (const auto& a : oracle::finite_groups_up_to(16))
        for (std::size_t r : {1, 2}) {
            check_against_oracle(a, r, 2);
            ++cases;
        }
    CHECK(cases == 2 * oracle::finite_groups_up_to(16).size());
}

TEST_CASE("extension: zero classifier gives A ⊕ V") {
    for (const auto& a : oracle::finite_groups_up_to(16))
        for (std::size_t r : {1, 2}) {
            Standard s = standard(a, 2);
            AbelianGroup V = elementary_group(r, 2);
            ExtensionResult e = classify_elementary_extension(s.pA, V, Matrix(r, s.pA.count()), 2);
            CHECK(e.middle.invariants() == s.A.invariants() + V.invariants());
            CHECK(e.verdict == Verdict::Split);
        }
}

TEST_CASE("extension: odd prime and non-diagonal presentations") {
    check_against_oracle({3, 9}, 1, 3);
    check_against_oracle({9}, 2, 3);

    // Z/4 presented as <x, y | 2x - y, 2y> with 2-torsion spanned by y.
    AbelianGroup A(2, Matrix{{2, 0}, {-1, 2}});
    REQUIRE(A.invariants().render() == "ℤ/4");
    Subgroup t(A, Matrix{{0}, {1}});
    ExtensionResult e = classify_elementary_extension(t, elementary_group(1, 2), Matrix{{1}}, 2);
    CHECK(e.middle.invariants().render() == "ℤ/8");
    e = classify_elementary_extension(t, elementary_group(1, 2), Matrix{{0}}, 2);
    CHECK(e.middle.invariants().render() == "ℤ/2 ⊕ ℤ/4");

    // free summands carry no 2-torsion
    AbelianGroup F = AbelianGroup::from_invariants(Invariants::from_cyclic_orders(1, {Int(2)}));
    Subgroup tf = two_torsion(F);
    e = classify_elementary_extension(tf, elementary_group(1, 2), Matrix{{1}}, 2);
    CHECK(e.middle.invariants().render() == "ℤ^1 ⊕ ℤ/4");
}

TEST_CASE("extension: preconditions") {
    Standard s = standard({4}, 2);
    CHECK_THROWS(classify_elementary_extension(s.pA, AbelianGroup::cyclic(4), Matrix{{1}}, 2));
    // a generator of order 4 is not a valid classifier domain
    Subgroup bad(s.A, Matrix{{1}});
    CHECK_THROWS(classify_elementary_extension(bad, elementary_group(1, 2), Matrix{{1}}, 2));
}

TEST_CASE("enumeration and bounds") {
    auto mids = enumerate_middles(AbelianGroup::cyclic(2), 2, 1);
    std::set<std::string> names;
    for (const auto& m : mids) names.insert(m.render());
    CHECK(names == std::set<std::string>{"ℤ/2 ⊕ ℤ/2", "ℤ/4"});

    // the enumeration equals the oracle's set of middles
    for (const auto& a : oracle::finite_groups_up_to(16)) {
        Standard s = standard(a, 2);
        std::set<std::vector<long>> want, got;
        each_phi(1, s.pA.count(), 2, [&](const Matrix& phi) {
            std::vector<std::vector<long>> lifts(a.size(), std::vector<long>(1, 0));
            for (std::size_t j = 0; j < s.divisible.size(); ++j) lifts[s.divisible[j]][0] = phi(0, j).get_si();
            want.insert(oracle::extension_type(a, 2, 1, lifts));
        });
        for (const auto& m : enumerate_middles(s.A, 2, 1)) got.insert(primary_of(m));
        CHECK(got == want);
    }

    CHECK(max_fusion(Invariants::from_cyclic_orders(0, {Int(2), Int(4)}), 2, 1).render() == "ℤ/2 ⊕ ℤ/8");
    CHECK(max_fusion(Invariants::from_cyclic_orders(1, {}), 2, 2).render() == "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2");

    auto c = extension_candidates(Invariants::from_cyclic_orders(0, {Int(2)}), 2, 1, false);
    CHECK(c.size() == 2);
}
