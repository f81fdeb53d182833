#include "oracles.hpp"

#include "cohomotopy/bordism.hpp"
#include "cohomotopy/codim3.hpp"
#include "cohomotopy/errors.hpp"
#include "cohomotopy/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace coh;

namespace {

Datum load(const char* f) { return io::load_datum(support::corpus(f)); }

const char* const kManifolds3[] = {"string-sphere.json", "snxt3.json", "dold-m0.json", "dold-m1.json",
                                   "dold-m3.json"};

Invariants two_primary(const Invariants& g) {
    std::vector<Int> keep;
    for (const auto& q : g.primary_orders())
        if (mpz_divisible_ui_p(q.get_mpz_t(), 2)) keep.push_back(q);
    return Invariants::from_cyclic_orders(g.free_rank, keep);
}

std::set<std::string> renders(const ParametricGroup& g) {
    std::set<std::string> out;
    for (const auto& b : g.branches) out.insert(b.group.render());
    return out;
}

// Codimension-3 CW datum on degrees 8..13 (n = 10) from mod-2 ranks, integral
// groups and extra map entries.
Datum synthetic(const std::string& degrees, const std::string& maps, const std::string& extra = "") {
    return io::parse_datum(R"({"schemaVersion": 1, "name": "synthetic", "dimension": 13, "codimension": 3,
        "structure": "CWOnly", "degrees": )" + degrees + R"(, "maps": )" + maps + extra + "}");
}

const char* const kWedge912 =
    R"({"8": {"integral": {"free": 0}, "mod2": 0}, "9": {"integral": {"free": 1}, "mod2": 1},
        "10": {"integral": {"free": 0}, "mod2": 0}, "11": {"integral": {"free": 0}, "mod2": 0},
        "12": {"integral": {"free": 1}, "mod2": 1}, "13": {"integral": {"free": 0}, "mod2": 0}})";
const char* const kWedge912Maps = R"({"rho2": {"9": [[1]], "12": [[1]]}})";

}  // namespace

TEST_CASE("codim3: string manifolds") {
    Codim3Result s = assemble_codim3(load("string-sphere.json"));
    REQUIRE(s.group.determined());
    CHECK(s.group.only().group.render() == "ℤ/24");

    Datum t3 = load("snxt3.json");
    Codim3Result r = assemble_codim3(t3);
    REQUIRE(r.group.determined());
    const std::vector<int> cells{10, 11, 11, 11, 12, 12, 12, 13, 1, 1, 1, 2, 2, 2, 3};
    CHECK(r.group.only().group == wedge_oracle(cells, t3.n()));
    CHECK(r.group.only().group.render() == "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/24");

    ParametricGroup spin = spin3_bordism(t3);
    REQUIRE(spin.determined());
    CHECK(spin.only().group.render() == "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2");
    CHECK(spin3_bordism(load("string-sphere.json")).only().group.is_zero());
}

TEST_CASE("codim3: string fast path equals the general assembly on its branch") {
    for (const char* f : {"string-sphere.json", "snxt3.json"}) {
        CAPTURE(f);
        Datum d = load(f);
        ParametricGroup fast = string_fast_path(d);
        Codim3Result full = assemble_codim3(d);
        CHECK(full.manifoldCase == 1);
        for (const auto& b : full.group.branches) {
            if (b.assumptions.at("eps_phi") != 0 || b.assumptions.at("eps_T") != 0) continue;
            bool matched = false;
            for (const auto& fb : fast.branches)
                if (fb.assumptions.at("theta") == b.assumptions.at("theta")) matched = fb.group == b.group;
            CHECK(matched);
        }
    }
    CHECK_THROWS_AS(string_fast_path(load("dold-m1.json")), TagError);
}

TEST_CASE("codim3: Dold manifolds dispatch to cases 2, 3, 4") {
    Codim3Result m0 = assemble_codim3(load("dold-m0.json"));
    Codim3Result m1 = assemble_codim3(load("dold-m1.json"));
    Codim3Result m3 = assemble_codim3(load("dold-m3.json"));
    CHECK(m0.manifoldCase == 2);
    CHECK(m1.manifoldCase == 3);
    CHECK(m3.manifoldCase == 4);

    REQUIRE(m1.group.determined());
    CHECK(m1.group.only().group.render() == "ℤ/12");
    CHECK(renders(m0.group) == std::set<std::string>{"ℤ/12", "ℤ/4", "ℤ/6", "ℤ/2"});
    CHECK(renders(m3.group) == std::set<std::string>{"ℤ^1 ⊕ ℤ/6", "ℤ^1 ⊕ ℤ/2"});

    const Parameter* es = m3.group.parameter("eps_sq4z");
    REQUIRE(es);
    CHECK(es->provenance == Provenance::Computed);
    CHECK(es->value == 0);
    const Parameter* e3 = m3.group.parameter("eps3");
    REQUIRE(e3);
    CHECK(e3->provenance == Provenance::Unknown);
}

TEST_CASE("codim3: flags settle open parameters") {
    Codim3Options o;
    o.assumePhiTrivial = true;
    o.assumeEps3Zero = true;
    Codim3Result m0 = assemble_codim3(load("dold-m0.json"), o);
    REQUIRE(m0.group.determined());
    CHECK(m0.group.only().group.render() == "ℤ/12");
    CHECK(m0.group.parameter("eps_phi")->provenance == Provenance::Override);
}

TEST_CASE("codim3: every manifold falls in exactly one case and every sequence is exact") {
    for (const char* f : kManifolds3) {
        CAPTURE(f);
        Codim3Result r = assemble_codim3(load(f));
        CHECK(r.manifoldCase >= 1);
        CHECK(r.manifoldCase <= 4);
        CHECK(r.group.branches.size() == assignment_lattice(r.group.parameters).size());
        for (const auto& b : r.group.branches)
            for (const auto& s : b.ses) {
                CAPTURE(s.name);
                CHECK(exactness_holds(s));
            }
    }
}

TEST_CASE("codim3: the tower route matches the 2-primary part of the assembly") {
    for (const char* f : kManifolds3) {
        CAPTURE(f);
        Datum d = load(f);
        Codim3Result r = assemble_codim3(d);
        ParametricGroup t = codim3_tower_route(d);
        std::size_t compared = 0;
        for (const auto& b : r.group.branches)
            for (const auto& tb : t.branches) {
                bool same = true;
                for (const auto& [k, v] : tb.assumptions)
                    if (b.assumptions.count(k) && b.assumptions.at(k) != v) same = false;
                if (!same || tb.status == Verdict::Undetermined) continue;
                CHECK(two_primary(b.group) == tb.group);
                ++compared;
            }
        CHECK(compared > 0);
    }
}

TEST_CASE("codim3: Z/4 fusion of G1 and G2 on a suspended CP^2") {
    // cells in degrees 11 and 13 attached by eta; Sq2 is nonzero on H^11
    Datum d = synthetic(R"({"8": {"integral": {"free": 0}, "mod2": 0}, "9": {"integral": {"free": 0}, "mod2": 0},
        "10": {"integral": {"free": 0}, "mod2": 0}, "11": {"integral": {"free": 1}, "mod2": 1},
        "12": {"integral": {"free": 0}, "mod2": 0}, "13": {"integral": {"free": 1}, "mod2": 1}})",
                        R"({"rho2": {"11": [[1]], "13": [[1]]}, "sq2": {"11": [[1]]}})");
    ParametricGroup t = codim3_tower_route(d);
    REQUIRE(t.determined());
    CHECK(t.only().group.render() == "ℤ/4");
    TowerGroups g = tower_groups(d);
    CHECK(g.g1.render() == "ℤ/2");

    // the enumeration oracle lists Z/4 as the nonsplit extension of Z/2 by Z/2
    std::set<std::vector<long>> mids;
    mids.insert(oracle::extension_type({2}, 2, 1, {{0}}));
    mids.insert(oracle::extension_type({2}, 2, 1, {{1}}));
    CHECK(mids == std::set<std::vector<long>>{{2, 2}, {4}});
    CHECK(oracle::primary_type({4}) == std::vector<long>{4});
}

TEST_CASE("codim3: enlarging a declared Θ image never increases a branch") {
    Datum open = synthetic(kWedge912, kWedge912Maps);
    Datum zero = synthetic(kWedge912, kWedge912Maps, R"(, "overrides": {"thetaImage": {"9": []}})");
    Datum full = synthetic(kWedge912, kWedge912Maps, R"(, "overrides": {"thetaImage": {"9": [[1]]}})");
    ParametricGroup a = codim3_tower_route(open);
    ParametricGroup b = codim3_tower_route(zero);
    ParametricGroup c = codim3_tower_route(full);
    CHECK(a.branches.size() == 2);
    REQUIRE(b.determined());
    REQUIRE(c.determined());
    CHECK(b.only().group.render() == "ℤ/2");
    CHECK(c.only().group.is_zero());
    CHECK(c.only().group.torsion_order() <= b.only().group.torsion_order());
}

TEST_CASE("codim3: tower route hypotheses") {
    // Moore space: Sq1 hits the top class
    Datum moore = synthetic(R"({"8": {"integral": {"free": 0}, "mod2": 0}, "9": {"integral": {"free": 0}, "mod2": 0},
        "10": {"integral": {"free": 0}, "mod2": 0}, "11": {"integral": {"free": 0}, "mod2": 0},
        "12": {"integral": {"free": 0}, "mod2": 1}, "13": {"integral": {"torsion": [2]}, "mod2": 1}})",
                            R"({"rho2": {"13": [[1]]}, "bockstein": {"12": [[1]]}, "sq1": {"12": [[1]]}})");
    CHECK_THROWS_AS(codim3_tower_route(moore), HypothesisError);
    CHECK_THROWS_AS(assemble_codim3(synthetic(kWedge912, kWedge912Maps)), TagError);
    CHECK_THROWS_AS(assemble_codim3(load("t2xsn.json")), HypothesisError);
}
