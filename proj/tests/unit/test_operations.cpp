#include "oracles.hpp"

#include "cohomotopy/errors.hpp"
#include "cohomotopy/json_io.hpp"
#include "cohomotopy/operations.hpp"

#include <doctest.h>

using namespace coh;

TEST_CASE("datum access rules") {
    Datum d = io::load_datum(support::corpus("sphere-n2.json"));
    CHECK(d.H(-1).is_trivial());
    CHECK(d.H(d.dimension + 1).is_trivial());
    CHECK(d.H(d.dimension).invariants().render() == "ℤ^1");
    CHECK(d.op(Op::Sq2, d.dimension).rows() == 0);
    CHECK_THROWS_AS(d.H(2), DegreeError);
}

TEST_CASE("operations on CP^2 x S^8") {
    Datum d = io::load_datum(support::corpus("cp2xs.json"));
    const int n = d.n();
    // Sq2_Z(c s) = c^2 s
    AbHom sq2z = op_hom(d, OpName::Sq2Z, n);
    CHECK_FALSE(sq2z.is_zero());
    CHECK(op_kernel(d, OpName::Sq2Z, n).group().invariants().render() == "ℤ^1");
    CHECK(op_quotient(d, OpName::Sq2Z, n).is_trivial());
    CHECK(w2_vanishes(d) == Tri::False);
    CHECK(w3_vanishes(d) == Tri::True);
}

TEST_CASE("spin data: w2 vanishes and Sq2 is cup with zero on the top") {
    Datum d = io::load_datum(support::corpus("t2xsn.json"));
    CHECK(w2_vanishes(d) == Tri::True);
    CHECK(d.op(Op::Sq2, d.dimension - 2).is_zero());
    CHECK(parse_op_name("Sq2Z") == OpName::Sq2Z);
    CHECK(std::string(to_string(OpName::Sq2Sq1)) == "Sq2Sq1");
}

TEST_CASE("Wu derivation is idempotent") {
    Datum d = io::load_datum(support::corpus("dold-m1.json"));
    Datum e = derive_wu_actions(d);
    Datum f = derive_wu_actions(e);
    CHECK(io::dump(io::datum_to_json(e)) == io::dump(io::datum_to_json(f)));
}

TEST_CASE("elementary groups") {
    CHECK(elementary_group(3, 2).invariants().render() == "ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2");
    CHECK(elementary_group(0, 3).is_trivial());
}
