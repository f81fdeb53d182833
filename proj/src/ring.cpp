#include "cohomotopy/ring.hpp"

#include "cohomotopy/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace coh {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

void toggle(Poly& p, const Monomial& m) {
    auto [it, inserted] = p.insert(m);
    if (!inserted) p.erase(it);
}

}  // namespace

// Total square of a generator g of degree d, as components Sq^0..Sq^4:
//
//   i = 0          g
//   0 < i < d      supplied value (Sq^1, Sq^2, Sq^4), zero when absent
//   i = 3 < d      Sq^1 Sq^2 g   (Adem: Sq^3 = Sq^1 Sq^2 on every class)
//   i = d          g^2
//   i > d          0
//
// Products expand through the Cartan formula on these totals.
TruncatedRing::TruncatedRing(RingPresentation p, int max_degree) : p_(std::move(p)), max_degree_(max_degree) {
    const std::size_t r = p_.generators.size();
    for (const auto& g : p_.generators)
        if (g.degree <= 0) throw DegreeError("ring generator '" + g.name + "' must have positive degree");

    basis_.assign(std::max(max_degree_ + 1, 0), {});
    index_.assign(basis_.size(), {});
    Monomial m(r, 0);
    // Odometer over exponent vectors bounded by truncation and total degree.
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int deg) {
        if (k == r) {
            basis_[deg].push_back(m);
            return;
        }
        const auto& g = p_.generators[k];
        for (int e = 0;; ++e) {
            if (g.truncation > 0 && e >= g.truncation) break;
            if (deg + e * g.degree > max_degree_) break;
            m[k] = e;
            rec(k + 1, deg + e * g.degree);
        }
        m[k] = 0;
    };
    if (max_degree_ >= 0) rec(0, 0);
    for (std::size_t d = 0; d < basis_.size(); ++d) {
        std::sort(basis_[d].begin(), basis_[d].end());
        for (std::size_t i = 0; i < basis_[d].size(); ++i) index_[d][basis_[d][i]] = i;
    }

    gen_total_.assign(r, std::vector<Poly>(5));
    for (std::size_t k = 0; k < r; ++k) {
        const auto& g = p_.generators[k];
        Monomial x(r, 0);
        x[k] = 1;
        if (valid(x)) gen_total_[k][0].insert(x);
        Monomial x2(r, 0);
        x2[k] = 2;
        if (g.degree <= 4 && valid(x2)) gen_total_[k][g.degree].insert(x2);

        auto it = p_.sq.find(g.name);
        if (it == p_.sq.end()) continue;
        for (const auto& [i, terms] : it->second) {
            if (i == 3) throw ParseError("Sq^3 of '" + g.name + "' is derived as Sq^1 Sq^2 and must not be supplied");
            if (i != 1 && i != 2 && i != 4) throw ParseError("only Sq^1, Sq^2, Sq^4 may be supplied on generators");
            Poly val;
            for (const auto& t : terms)
                for (const auto& mono : parse(t)) toggle(val, mono);
            for (const auto& mono : val)
                if (degree(mono) != g.degree + i)
                    throw DegreeError("Sq^" + std::to_string(i) + "(" + g.name + ") has a term of degree " +
                                      std::to_string(degree(mono)) + ", expected " +
                                      std::to_string(g.degree + i));
            if (i > g.degree && !val.empty())
                throw DegreeError("Sq^" + std::to_string(i) + " vanishes on the degree-" +
                                  std::to_string(g.degree) + " generator '" + g.name + "'");
            if (i == g.degree && val != gen_total_[k][i])
                throw DegreeError("Sq^" + std::to_string(i) + "(" + g.name + ") must equal its square");
            if (i < g.degree) gen_total_[k][i] = val;
        }
    }
    for (std::size_t k = 0; k < r; ++k)
        if (p_.generators[k].degree > 3) gen_total_[k][3] = sq(1, gen_total_[k][2]);
}

bool TruncatedRing::valid(const Monomial& m) const {
    for (std::size_t k = 0; k < m.size(); ++k) {
        const int t = p_.generators[k].truncation;
        if (m[k] < 0 || (t > 0 && m[k] >= t)) return false;
    }
    return true;
}

int TruncatedRing::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t k = 0; k < m.size(); ++k) d += m[k] * p_.generators[k].degree;
    return d;
}

const std::vector<Monomial>& TruncatedRing::basis(int deg) const {
    static const std::vector<Monomial> empty;
    if (deg < 0 || deg >= static_cast<int>(basis_.size())) return empty;
    return basis_[deg];
}

FVec TruncatedRing::vector(const Poly& p, int deg) const {
    FVec v(basis(deg).size(), 0);
    for (const auto& m : p) {
        if (degree(m) != deg) throw DegreeError("polynomial term '" + format({m}) + "' is not of degree " + std::to_string(deg));
        auto it = index_.at(deg).find(m);
        if (it == index_.at(deg).end()) throw RangeError("monomial outside the enumerated basis");
        v[it->second] ^= 1;
    }
    return v;
}

Poly TruncatedRing::poly(const FVec& v, int deg) const {
    Poly p;
    const auto& b = basis(deg);
    for (std::size_t i = 0; i < v.size() && i < b.size(); ++i)
        if (v[i] & 1u) p.insert(b[i]);
    return p;
}

Poly TruncatedRing::parse(const std::string& expr) const {
    Poly out;
    const std::string e = trim(expr);
    if (e.empty()) throw ParseError("empty polynomial expression");
    for (const auto& term : split(e, '+')) {
        if (term == "0") continue;
        Monomial m(p_.generators.size(), 0);
        for (const auto& f : split(term, '*')) {
            if (f == "1") continue;
            std::string name = f;
            int e = 1;
            if (auto c = f.find('^'); c != std::string::npos) {
                name = trim(f.substr(0, c));
                try {
                    e = std::stoi(f.substr(c + 1));
                } catch (const std::exception&) {
                    throw ParseError("bad exponent in '" + f + "'");
                }
            }
            auto it = std::find_if(p_.generators.begin(), p_.generators.end(),
                                   [&](const RingGenerator& g) { return g.name == name; });
            if (it == p_.generators.end()) throw ParseError("unknown ring generator '" + name + "'");
            m[it - p_.generators.begin()] += e;
        }
        if (valid(m)) toggle(out, m);
    }
    return out;
}

std::string TruncatedRing::format(const Poly& p) const {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        os << (first_term ? "" : " + ");
        first_term = false;
        bool first = true;
        for (std::size_t k = 0; k < it->size(); ++k) {
            if ((*it)[k] == 0) continue;
            os << (first ? "" : "*") << p_.generators[k].name;
            if ((*it)[k] > 1) os << '^' << (*it)[k];
            first = false;
        }
        if (first) os << '1';
    }
    return os.str();
}

Poly TruncatedRing::multiply(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Monomial m(x.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = x[k] + y[k];
            if (valid(m)) toggle(out, m);
        }
    return out;
}

Poly TruncatedRing::monomial_sq(int k, const Monomial& m) const {
    // Components 0..k of the total square, built factor by factor.
    std::vector<Poly> total(k + 1);
    total[0].insert(Monomial(m.size(), 0));
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int e = 0; e < m[g]; ++e) {
            std::vector<Poly> next(k + 1);
            for (int i = 0; i <= k; ++i)
                for (int j = 0; i + j <= k && j <= 4; ++j)
                    for (const auto& mono : multiply(total[i], gen_total_[g][j])) toggle(next[i + j], mono);
            total = std::move(next);
        }
    return total[k];
}

Poly TruncatedRing::sq(int k, const Poly& p) const {
    if (k < 0 || k > 4) throw RangeError("only Sq^0..Sq^4 are modelled");
    Poly out;
    for (const auto& m : p)
        for (const auto& mono : monomial_sq(k, m)) toggle(out, mono);
    return out;
}

F2Matrix TruncatedRing::sq_matrix(int k, int deg) const {
    const auto& src = basis(deg);
    F2Matrix out(basis(deg + k).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        FVec v = vector(sq(k, Poly{src[j]}), deg + k);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) out.set(i, j, true);
    }
    return out;
}

F2Matrix TruncatedRing::mult_matrix(const Poly& c, int cdeg, int deg) const {
    const auto& src = basis(deg);
    F2Matrix out(basis(deg + cdeg).size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        FVec v = vector(multiply(c, Poly{src[j]}), deg + cdeg);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) out.set(i, j, true);
    }
    return out;
}

namespace {

// Greedily extend `basis` by vectors from `candidates` that raise the rank.
void extend_basis(std::vector<FVec>& basis, const std::vector<FVec>& candidates, std::size_t dim) {
    for (const auto& c : candidates) {
        std::vector<FVec> trial = basis;
        trial.push_back(c);
        if (F2Matrix::from_columns(dim, trial).rank() == trial.size()) basis = std::move(trial);
    }
}

// Integral cohomology under the assumption that all torsion has order 2, so
// that H^q(F2) = B ⊕ W ⊕ C with B = im Sq^1, B ⊕ W = ker Sq^1:
// H^q(Z) = Z^W ⊕ (Z/2)^B, with δ sending C onto the torsion of degree q+1.
void lift_integral(const TruncatedRing& ring, int top, RingData& out) {
    std::vector<std::vector<FVec>> B(top + 2), W(top + 1), C(top + 1);
    for (int q = 0; q <= top; ++q) {
        const std::size_t dim = ring.basis(q).size();
        F2Matrix s1 = q + 1 <= top ? ring.sq_matrix(1, q) : F2Matrix(0, dim);
        std::vector<FVec> kernel;
        F2Matrix k = s1.kernel();
        for (std::size_t j = 0; j < k.cols(); ++j) kernel.push_back(k.column(j));
        std::vector<FVec> zb = B[q];
        extend_basis(zb, kernel, dim);
        W[q].assign(zb.begin() + B[q].size(), zb.end());
        std::vector<FVec> units;
        for (std::size_t i = 0; i < dim; ++i) {
            FVec u(dim, 0);
            u[i] = 1;
            units.push_back(u);
        }
        std::vector<FVec> full = zb;
        extend_basis(full, units, dim);
        C[q].assign(full.begin() + zb.size(), full.end());
        for (const auto& c : C[q]) B[q + 1].push_back(s1.apply(c));
    }
    for (int q = 0; q <= top; ++q) {
        const std::size_t dim = ring.basis(q).size();
        const std::size_t w = W[q].size(), b = B[q].size();
        Matrix rel(w + b, b);
        for (std::size_t i = 0; i < b; ++i) rel(w + i, i) = 2;
        out.integral.emplace(q, AbelianGroup(w + b, rel));

        std::vector<FVec> rho_cols = W[q];
        rho_cols.insert(rho_cols.end(), B[q].begin(), B[q].end());
        out.rho2[q] = F2Matrix::from_columns(dim, rho_cols);

        if (q + 1 > top) continue;
        // δ in the adapted basis [B | W | C], then back to the monomial basis.
        std::vector<FVec> adapted = B[q];
        adapted.insert(adapted.end(), W[q].begin(), W[q].end());
        adapted.insert(adapted.end(), C[q].begin(), C[q].end());
        F2Matrix P = F2Matrix::from_columns(dim, adapted);
        const std::size_t next_w = W[q + 1].size(), next_gens = next_w + B[q + 1].size();
        Matrix delta(next_gens, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            FVec e(dim, 0);
            e[j] = 1;
            FVec coords = *P.solve(e);
            for (std::size_t c = 0; c < C[q].size(); ++c)
                if (coords[B[q].size() + w + c]) delta(next_w + c, j) += 1;
        }
        out.bockstein[q] = delta;
    }
}

}  // namespace

RingData ingest_ring(const RingPresentation& p, int top) {
    TruncatedRing ring(p, top);
    RingData out;
    for (int q = 0; q <= top; ++q) out.mod2[q] = ring.basis(q).size();
    const std::pair<Op, int> squares[] = {{Op::Sq1, 1}, {Op::Sq2, 2}, {Op::Sq4, 4}};
    for (int q = 0; q <= top; ++q)
        for (auto [op, k] : squares)
            if (q + k <= top) out.ops[op][q] = ring.sq_matrix(k, q);
    if (p.w2) {
        Poly w = ring.parse(*p.w2);
        out.w2 = ring.vector(w, 2);
        for (int q = 0; q + 2 <= top; ++q) out.ops[Op::CupW2][q] = ring.mult_matrix(w, 2, q);
    }
    if (p.w3) {
        Poly w = ring.parse(*p.w3);
        out.w3 = ring.vector(w, 3);
        for (int q = 0; q + 3 <= top; ++q) out.ops[Op::CupW3][q] = ring.mult_matrix(w, 3, q);
    }
    if (p.sq1_lift) lift_integral(ring, top, out);
    return out;
}

void merge_ring_data(Datum& d, const RingData& r) {
    auto warn = [&](const std::string& what, int deg) {
        d.warnings.push_back("supplied " + what + " at degree " + std::to_string(deg) +
                             " disagrees with the ring expansion; the supplied value is used");
    };
    for (const auto& [q, rank] : r.mod2) {
        auto [it, inserted] = d.mod2.emplace(q, rank);
        if (!inserted && it->second != rank) warn("mod-2 rank", q);
    }
    auto shape_ok = [&](const F2Matrix& m, int src, int dst) {
        auto a = d.mod2.find(src), b = d.mod2.find(dst);
        return a != d.mod2.end() && b != d.mod2.end() && m.cols() == a->second && m.rows() == b->second;
    };
    for (const auto& [op, byDeg] : r.ops)
        for (const auto& [q, m] : byDeg) {
            if (!shape_ok(m, q, q + op_shift(op))) continue;
            auto [it, inserted] = d.ops[op].emplace(q, m);
            if (!inserted && it->second != m) warn(op_name(op), q);
        }
    if (r.w2 && !d.w2) d.w2 = r.w2;
    else if (r.w2 && d.w2 && *d.w2 != *r.w2) warn("w2", 2);
    if (r.w3 && !d.w3) d.w3 = r.w3;
    else if (r.w3 && d.w3 && *d.w3 != *r.w3) warn("w3", 3);

    std::set<int> from_ring;
    for (const auto& [q, g] : r.integral) {
        auto [it, inserted] = d.integral.emplace(q, g);
        if (inserted) from_ring.insert(q);
        else if (it->second.invariants() != g.invariants()) warn("integral group", q);
    }
    for (const auto& [q, m] : r.rho2)
        if (from_ring.count(q) && d.mod2.count(q) && m.rows() == d.mod2.at(q)) {
            auto [it, inserted] = d.rho2.emplace(q, m);
            if (!inserted && it->second != m) warn("rho2", q);
        }
    for (const auto& [q, m] : r.bockstein)
        if (from_ring.count(q + 1)) {
            auto [it, inserted] = d.bockstein.emplace(q, m);
            if (!inserted && it->second != m) warn("bockstein", q);
        }
}

}  // namespace coh
