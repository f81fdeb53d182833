#include "cohomotopy/datum.hpp"

#include "cohomotopy/errors.hpp"

namespace coh {

std::string to_string(Structure s) {
    switch (s) {
        case Structure::Oriented: return "Oriented";
        case Structure::Spin: return "Spin";
        case Structure::String: return "String";
        case Structure::CWOnly: return "CWOnly";
    }
    return "?";
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::Unknown: return "unknown";
        case Tri::False: return "false";
        case Tri::True: return "true";
    }
    return "?";
}

Structure parse_structure(const std::string& s) {
    if (s == "Oriented") return Structure::Oriented;
    if (s == "Spin") return Structure::Spin;
    if (s == "String") return Structure::String;
    if (s == "CWOnly") return Structure::CWOnly;
    throw ParseError("unknown structure tag '" + s + "'");
}

int op_shift(Op op) {
    switch (op) {
        case Op::Sq1: return 1;
        case Op::Sq2: return 2;
        case Op::Sq4: return 4;
        case Op::Sq2Sq1: return 3;
        case Op::CupW2: return 2;
        case Op::CupW3: return 3;
    }
    return 0;
}

const char* op_name(Op op) {
    switch (op) {
        case Op::Sq1: return "sq1";
        case Op::Sq2: return "sq2";
        case Op::Sq4: return "sq4";
        case Op::Sq2Sq1: return "sq2sq1";
        case Op::CupW2: return "cupW2";
        case Op::CupW3: return "cupW3";
    }
    return "?";
}

void Datum::missing(const std::string& what, int degree) const {
    const std::string msg = what + " at degree " + std::to_string(degree);
    if (in_window(degree)) throw MissingDataError("missing " + msg);
    throw DegreeError(msg + " lies outside the window [" + std::to_string(window_lo()) + ", " +
                      std::to_string(window_hi()) + "] and was not supplied");
}

AbelianGroup Datum::H(int i) const {
    if (i < 0 || i > dimension) return AbelianGroup();
    auto it = integral.find(i);
    if (it == integral.end()) missing("integral cohomology", i);
    return it->second;
}

std::size_t Datum::F2(int i) const {
    if (i < 0 || i > dimension) return 0;
    auto it = mod2.find(i);
    if (it == mod2.end()) missing("mod-2 cohomology rank", i);
    return it->second;
}

std::size_t Datum::F3(int i) const {
    if (i < 0 || i > dimension) return 0;
    auto it = mod3.find(i);
    if (it != mod3.end()) return it->second;
    // Universal coefficients from the integral groups, when both are known.
    auto a = integral.find(i), b = integral.find(i + 1);
    if (a != integral.end() && (b != integral.end() || i + 1 > dimension)) {
        std::size_t r = a->second.invariants().free_rank;
        for (const auto& t : a->second.invariants().torsion)
            if (mpz_divisible_ui_p(t.get_mpz_t(), 3)) ++r;
        if (b != integral.end())
            for (const auto& t : b->second.invariants().torsion)
                if (mpz_divisible_ui_p(t.get_mpz_t(), 3)) ++r;
        return r;
    }
    missing("mod-3 cohomology rank", i);
}

F2Matrix Datum::op(Op o, int i) const {
    auto ot = ops.find(o);
    if (ot != ops.end()) {
        auto it = ot->second.find(i);
        if (it != ot->second.end()) return it->second;
    }
    const int j = i + op_shift(o);
    if (o == Op::Sq2Sq1 && F2(i) && F2(j)) return op(Op::Sq2, i + 1) * op(Op::Sq1, i);
    const std::size_t src = F2(i), dst = F2(j);
    if (src == 0 || dst == 0) return F2Matrix(dst, src);
    missing(op_name(o), i);
}

F2Matrix Datum::rho2_at(int i) const {
    auto it = rho2.find(i);
    if (it != rho2.end()) return it->second;
    const std::size_t g = H(i).num_generators(), m = F2(i);
    if (g == 0 || m == 0) return F2Matrix(m, g);
    missing("rho2", i);
}

Matrix Datum::bockstein_at(int i) const {
    auto it = bockstein.find(i);
    if (it != bockstein.end()) return it->second;
    const std::size_t m = F2(i), g = H(i + 1).num_generators();
    if (g == 0 || m == 0) return Matrix(g, m);
    missing("bockstein", i);
}

F3Matrix Datum::rho3_at(int i) const {
    auto it = rho3.find(i);
    if (it != rho3.end()) return it->second;
    const std::size_t g = H(i).num_generators(), m = F3(i);
    if (g == 0 || m == 0) return F3Matrix(m, g);
    missing("rho3", i);
}

Matrix Datum::bockstein3_at(int i) const {
    auto it = bockstein3.find(i);
    if (it != bockstein3.end()) return it->second;
    const std::size_t m = F3(i), g = H(i + 1).num_generators();
    if (g == 0 || m == 0) return Matrix(g, m);
    missing("bockstein3", i);
}

F3Matrix Datum::p1cup3_at(int i) const {
    auto it = p1Cup3.find(i);
    if (it != p1Cup3.end()) return it->second;
    const std::size_t src = F3(i), dst = F3(i + 4);
    if (src == 0 || dst == 0) return F3Matrix(dst, src);
    missing("p1Cup3", i);
}

namespace {

std::optional<F2Matrix> stored(const Datum& d, Op o, int i) {
    auto ot = d.ops.find(o);
    if (ot == d.ops.end()) return std::nullopt;
    auto it = ot->second.find(i);
    if (it == ot->second.end()) return std::nullopt;
    return it->second;
}

}  // namespace

Tri Datum::w2_zero() const {
    if (tag == Structure::Spin || tag == Structure::String) return Tri::True;
    if (w2) return fvec_is_zero(*w2) ? Tri::True : Tri::False;
    if (auto c = stored(*this, Op::CupW2, dimension - 2)) return c->is_zero() ? Tri::True : Tri::False;
    return Tri::Unknown;
}

Tri Datum::w3_zero() const {
    if (w2_zero() == Tri::True) return Tri::True;
    if (w3) return fvec_is_zero(*w3) ? Tri::True : Tri::False;
    if (auto c = stored(*this, Op::CupW3, dimension - 3)) return c->is_zero() ? Tri::True : Tri::False;
    return Tri::Unknown;
}

Datum derive_wu_actions(const Datum& d) {
    Datum out = d;
    if (!d.is_manifold()) return out;
    const int D = d.dimension;
    auto fill = [&](Op target, Op source, int deg) {
        if (stored(out, target, deg)) return;
        if (auto c = stored(out, source, deg)) {
            out.ops[target][deg] = *c;
            return;
        }
        const int top = deg + op_shift(target);
        if (!out.in_window(deg) && (!out.mod2.count(deg) || !out.mod2.count(top))) return;
        if (target == Op::Sq2Sq1) {
            try {
                out.ops[target][deg] = out.op(Op::Sq2, deg + 1) * out.op(Op::Sq1, deg);
                return;
            } catch (const Error&) {
                out.ops[target].erase(deg);
            }
        }
        // Spin and string manifolds have w2 = 0, hence w3 = 0.
        const std::size_t src = out.F2(deg), dst = out.F2(top);
        if (src == 0 || dst == 0 || out.w2_zero() == Tri::True ||
            (source == Op::CupW3 && out.w3_zero() == Tri::True)) {
            out.ops[target][deg] = F2Matrix(dst, src);
            return;
        }
        throw MissingDataError(std::string(op_name(source)) + " at degree " + std::to_string(deg) +
                               " is needed to derive " + op_name(target));
    };
    fill(Op::Sq2, Op::CupW2, D - 3);
    fill(Op::Sq2, Op::CupW2, D - 2);
    fill(Op::Sq2Sq1, Op::CupW3, D - 3);
    const int n1 = d.n() - 1;
    if (d.p1Mod3Trivial == Tri::True && !out.p1Cup3.count(n1)) {
        try {
            out.p1Cup3[n1] = F3Matrix(out.F3(n1 + 4), out.F3(n1));
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace coh
