#pragma once

#include "cohomotopy/abelian.hpp"
#include "cohomotopy/fp_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coh {

enum class Structure { Oriented, Spin, String, CWOnly };
enum class Tri { Unknown, False, True };

std::string to_string(Structure s);
std::string to_string(Tri t);
Structure parse_structure(const std::string& s);

// Mod-2 operations stored per source degree, with their degree shift.
enum class Op { Sq1, Sq2, Sq4, Sq2Sq1, CupW2, CupW3 };
int op_shift(Op op);
const char* op_name(Op op);

struct Overrides {
    // degree -> vectors spanning the declared image of Θ in the stated codomain
    std::map<int, std::vector<FVec>> thetaImage;
    Tri phiTrivial = Tri::Unknown;
    Tri tTrivial = Tri::Unknown;
    std::optional<int> threePrimaryEpsilon;
};

// Homology side used by the bordism dual. Mod-2 maps are 0/1 integer matrices.
struct HomologyData {
    std::optional<AbelianGroup> H1, H2, H3;
    std::optional<std::size_t> h1Mod2, h3Mod2;
    std::optional<F2Matrix> rho2;        // H3(Z) -> H3(F2)
    std::optional<F2Matrix> capW2Mod2;   // H3(F2) -> H1(F2)
    std::optional<Matrix> bockstein;     // H3(F2) -> H2(Z)
    std::optional<F2Matrix> pairingW2;   // H2(Z) -> Z/2, one row
};

// Graded cohomology of an (n+k)-dimensional space on a degree window.
//
// Access rule for every degree-indexed field: degrees below 0 or above the
// dimension are zero; supplied data is returned wherever it lives; missing
// data is a MissingDataError inside the window and a DegreeError outside it.
// A map whose source or target is zero is the zero map.
class Datum {
public:
    std::string name;
    int dimension = 0;
    int codimension = 2;
    Structure tag = Structure::Oriented;

    std::map<int, AbelianGroup> integral;
    std::map<int, std::size_t> mod2;
    std::map<int, std::size_t> mod3;

    std::map<Op, std::map<int, F2Matrix>> ops;
    std::map<int, F2Matrix> rho2;       // H^i(Z) -> H^i(F2)
    std::map<int, Matrix> bockstein;    // H^i(F2) -> H^{i+1}(Z)
    std::map<int, F3Matrix> rho3;       // H^i(Z) -> H^i(F3)
    std::map<int, Matrix> bockstein3;   // H^i(F3) -> H^{i+1}(Z)
    std::map<int, F3Matrix> p1Cup3;     // H^i(F3) -> H^{i+4}(F3)

    std::optional<FVec> w2, w3;
    Tri p1Mod3Trivial = Tri::Unknown;
    std::optional<HomologyData> homology;
    Overrides overrides;
    std::vector<std::string> warnings;

    int n() const { return dimension - codimension; }
    int window_lo() const { return n() - (codimension == 2 ? 1 : 2); }
    int window_hi() const { return dimension; }
    bool in_window(int i) const { return i >= window_lo() && i <= window_hi(); }
    bool is_manifold() const { return tag != Structure::CWOnly; }

    AbelianGroup H(int i) const;
    std::size_t F2(int i) const;
    std::size_t F3(int i) const;

    F2Matrix op(Op o, int i) const;
    F2Matrix rho2_at(int i) const;
    Matrix bockstein_at(int i) const;
    F3Matrix rho3_at(int i) const;
    Matrix bockstein3_at(int i) const;
    F3Matrix p1cup3_at(int i) const;

    // Sq^k composed with reduction mod 2, as a map H^i(Z) -> H^{i+k}(F2).
    F2Matrix sq2z(int i) const { return op(Op::Sq2, i) * rho2_at(i); }
    F2Matrix sq4z(int i) const { return op(Op::Sq4, i) * rho2_at(i); }

    // Whether w2 / w3 vanish, from the tag, the class vectors, or by
    // Poincaré duality from cupW2 / cupW3 into the top degree.
    Tri w2_zero() const;
    Tri w3_zero() const;

    [[noreturn]] void missing(const std::string& what, int degree) const;
};

// Fill Wu-determined actions: Sq² at dimension-3 and dimension-2 from cupW2,
// Sq²Sq¹ at dimension-3 from cupW3, and P¹₃ = 0 at n-1 when p1 vanishes mod 3.
// Supplied maps are kept, so the result is idempotent.
Datum derive_wu_actions(const Datum& d);

}  // namespace coh
