#include "oracles.hpp"

#include "cohomotopy/bordism.hpp"
#include "cohomotopy/codim2.hpp"
#include "cohomotopy/codim3.hpp"
#include "cohomotopy/errors.hpp"
#include "cohomotopy/json_io.hpp"

#include <doctest.h>

using namespace coh;

namespace {

Datum load(const char* f) { return io::load_datum(support::corpus(f)); }

Invariants from_orders(const std::vector<long>& orders) {
    std::size_t free = 0;
    std::vector<Int> t;
    for (long o : orders) {
        if (o == 0) ++free;
        else t.push_back(o);
    }
    return Invariants::from_cyclic_orders(free, t);
}

}  // namespace

TEST_CASE("coefficients: framed table matches the stems and the table is coherent") {
    for (int k = 0; k <= 7; ++k) {
        CAPTURE(k);
        REQUIRE(coefficient(Theory::Framed, k));
        CHECK(*coefficient(Theory::Framed, k) == from_orders(oracle::stem(k)));
    }
    CHECK(coefficient_table_coherent());
    CHECK(coefficient(Theory::Spin, 3)->is_zero());
    CHECK(coefficient(Theory::SO, 2)->is_zero());
    CHECK(coefficient(Theory::String, 3)->render() == "ℤ/24");
    CHECK(coefficient(Theory::String, 7)->is_zero());
    CHECK_FALSE(coefficient(Theory::Spin, 4));
}

TEST_CASE("g_to_h: middles agree with the cohomotopy engines") {
    for (const char* f : {"t2xsn.json", "s2xsn.json", "sphere-n2.json"}) {
        CAPTURE(f);
        Datum d = load(f);
        ParametricGroup b = g_to_h_ses(d, 2);
        REQUIRE(b.determined());
        CHECK(b.only().group == codim2_group(d).group.only().group);
        CHECK(exactness_holds(b.only().ses.at(0)));
    }
    for (const char* f : {"string-sphere.json", "snxt3.json"}) {
        CAPTURE(f);
        Datum d = load(f);
        ParametricGroup b = g_to_h_ses(d, 3);
        REQUIRE(b.determined());
        CHECK(b.only().group == assemble_codim3(d).group.only().group);
        CHECK(b.only().ses.at(0).left.render() == "ℤ/24");
    }
    CHECK(g_to_h_ses(load("string-sphere.json"), 3).only().ses.at(0).right.is_zero());
}

TEST_CASE("g_to_h: k = 1 gives Z/2 plus H1") {
    ParametricGroup b = g_to_h_ses(load("t2xsn.json"), 1);
    CHECK(b.only().group.render() == "ℤ^2 ⊕ ℤ/2");
}

TEST_CASE("g_to_h: tags and ranges") {
    CHECK_THROWS_AS(g_to_h_ses(load("cp2xs.json"), 2), TagError);
    CHECK_THROWS_AS(g_to_h_ses(load("t2xsn.json"), 3), TagError);
    CHECK_THROWS_AS(g_to_h_ses(load("t2xsn.json"), 4), RangeError);
    ParametricGroup seven = g_to_h_ses(load("snxt3.json"), 7);
    CHECK(seven.only().status == Verdict::Undetermined);
}

TEST_CASE("section existence: verdicts and the biconditional") {
    EulerData e;
    e.eGZero = Tri::True;
    CHECK(section_existence(e).verdict == SectionVerdict::Exists);

    e = {};
    e.kappaZero = Tri::False;
    SectionResult r = section_existence(e);
    CHECK(r.verdict == SectionVerdict::NotExists);
    CHECK(r.failing == std::vector<std::string>{"kappa_G(E) = 0"});

    e = {};
    e.kappaZero = e.eHZero = e.deltaZero = Tri::True;
    CHECK(section_existence(e).verdict == SectionVerdict::Exists);

    e = {};
    e.k = 3;
    e.kappaZero = e.eHZero = Tri::True;
    CHECK(section_existence(e).verdict == SectionVerdict::Exists);

    e = {};
    CHECK(section_existence(e).verdict == SectionVerdict::Insufficient);
    CHECK(section_existence(e).unknown.size() == 4);

    e = {};
    e.eGZero = Tri::True;
    e.kappaZero = Tri::False;
    CHECK_THROWS_AS(section_existence(e), InconsistentInputError);

    e = {};
    e.k = 1;
    e.deltaZero = Tri::False;
    CHECK_THROWS_AS(section_existence(e), InconsistentInputError);

    e = {};
    e.k = 5;
    CHECK_THROWS_AS(section_existence(e), RangeError);
}

TEST_CASE("section existence is total on consistent inputs") {
    const Tri all[] = {Tri::Unknown, Tri::False, Tri::True};
    int consistent = 0;
    for (Tri g : all)
        for (Tri k : all)
            for (Tri h : all)
                for (Tri dl : all) {
                    EulerData e{2, g, k, h, dl};
                    const bool cond3_true = k == Tri::True && h == Tri::True && dl == Tri::True;
                    const bool cond3_false = k == Tri::False || h == Tri::False || dl == Tri::False;
                    const bool clash = (g == Tri::True && cond3_false) || (g == Tri::False && cond3_true);
                    if (clash) {
                        CHECK_THROWS_AS(section_existence(e), InconsistentInputError);
                        continue;
                    }
                    ++consistent;
                    SectionResult r = section_existence(e);
                    if (g == Tri::True || cond3_true) CHECK(r.verdict == SectionVerdict::Exists);
                    else if (g == Tri::False || cond3_false) CHECK(r.verdict == SectionVerdict::NotExists);
                    else CHECK(r.verdict == SectionVerdict::Insufficient);
                }
    CHECK(consistent > 0);
}

TEST_CASE("wedge oracle") {
    CHECK(wedge_oracle({10}, 10).render() == "ℤ^1");
    CHECK(wedge_oracle({11, 11}, 10).render() == "ℤ/2 ⊕ ℤ/2");
    CHECK(wedge_oracle({13}, 10).render() == "ℤ/24");
    CHECK(wedge_oracle({10, 13}, 10).render() == "ℤ^1 ⊕ ℤ/24");
    CHECK(wedge_oracle({3, 9}, 10).is_zero());
    CHECK_THROWS_AS(wedge_oracle({18}, 10), RangeError);
    CHECK_THROWS_AS(wedge_oracle({4}, 4), PreconditionError);
}
