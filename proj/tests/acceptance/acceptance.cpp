// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "cohomotopy/bordism.hpp"
#include "cohomotopy/cli_app.hpp"
#include "cohomotopy/codim2.hpp"
#include "cohomotopy/codim3.hpp"
#include "cohomotopy/errors.hpp"
#include "cohomotopy/json_io.hpp"
#include "cohomotopy/ring.hpp"
#include "cohomotopy/smith.hpp"
#include "cohomotopy/validate.hpp"

#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace coh;

namespace {

// Collects failed expectations inside one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;

    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 8) failures.push_back(what);
        else if (!ok) failures.back() = "... and more";
    }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++failed_criteria;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << c.count << " checks)\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
}

Datum load(const std::string& f) { return io::load_datum(support::corpus(f)); }

const std::vector<std::string> kClean = {"t2xsn.json",  "s2xsn.json",   "sphere-n2.json", "cp2xs.json",
                                         "cp2xs1xs.json", "cw-classifier.json", "string-sphere.json",
                                         "snxt3.json",  "dold-m0.json", "dold-m1.json",   "dold-m3.json"};

std::vector<long> primary_of(const Invariants& inv) {
    std::vector<long> out;
    for (const auto& q : inv.primary_orders()) out.push_back(q.get_si());
    return out;
}

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows out(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

void smith_oracle(Check& c) {
    std::mt19937 rng(1729);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 1000; ++t) {
        Matrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        const SmithForm s = smith_normal_form(m);
        c.expect(s.U * m * s.V == s.D, "D != U m V for " + m.to_string());
        c.expect(s.diagonal == oracle::invariant_factors(rows_of(m)), "invariant factors differ for " + m.to_string());
    }
}

void extension_oracle(Check& c) {
    for (const auto& a : oracle::finite_groups_up_to(16)) {
        Matrix rel(a.size(), a.size());
        for (std::size_t i = 0; i < a.size(); ++i) rel(i, i) = a[i];
        AbelianGroup A(a.size(), rel);
        Matrix gens(a.size(), 0);
        std::vector<std::size_t> even;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] % 2 == 0) {
                IntVec v(a.size());
                v[i] = a[i] / 2;
                gens.append_column(v);
                even.push_back(i);
            }
        Subgroup twoA(A, gens);
        for (std::size_t r : {1, 2}) {
            AbelianGroup V = elementary_group(r, 2);
            const std::size_t cells = r * even.size();
            for (std::size_t mask = 0; mask < (std::size_t(1) << cells); ++mask) {
                Matrix phi(r, even.size());
                std::vector<std::vector<long>> lifts(a.size(), std::vector<long>(r, 0));
                for (std::size_t cell = 0; cell < cells; ++cell) {
                    const long bit = (mask >> cell) & 1;
                    phi(cell / even.size(), cell % even.size()) = bit;
                    lifts[even[cell % even.size()]][cell / even.size()] = bit;
                }
                ExtensionResult e = classify_elementary_two_extension(twoA, V, phi);
                std::ostringstream tag;
                tag << "A = " << A.invariants().render() << ", V rank " << r << ", phi " << phi.to_string();
                c.expect(primary_of(e.middle.invariants()) == oracle::extension_type(a, 2, r, lifts), tag.str());
                if (mask == 0) c.expect(e.middle.invariants() == A.invariants() + V.invariants(), "phi = 0: " + tag.str());
            }
        }
    }
}

void dold_regression(Check& c) {
    auto ring = [](const std::string& f) {
        const io::Json doc = io::Json::parse(io::read_file(support::corpus(f)));
        return TruncatedRing(io::parse_ring(doc["ring"]), doc["dimension"].get<int>());
    };
    TruncatedRing m1 = ring("dold-m1.json");
    c.expect(m1.sq(2, m1.parse("d*a")) == m1.parse("d^2*a"), "Sq2(da) = d^2 a");
    c.expect(m1.sq(2, m1.sq(1, m1.parse("d*a"))) == m1.parse("c*d^2*a"), "Sq2Sq1(da) = c d^2 a");
    TruncatedRing m3 = ring("dold-m3.json");
    const Poly x = m3.parse("d^2*a + c^2*d*a");
    c.expect(m3.sq(2, x).empty(), "Sq2(d^2 a + c^2 d a) = 0");
    c.expect(m3.sq(2, m3.sq(1, x)) == m3.parse("c^3*d^2*a"), "Sq2Sq1(d^2 a + c^2 d a) = c^3 d^2 a");
    c.expect(assemble_codim3(load("dold-m1.json")).manifoldCase == 3, "M1 dispatches to case 3");
    c.expect(assemble_codim3(load("dold-m3.json")).manifoldCase == 4, "M3 dispatches to case 4");
}

void wedge_agreement(Check& c) {
    const std::pair<const char*, std::vector<int>> rows[] = {
        {"t2xsn.json", {1, 1, 2, 10, 11, 11, 12}}, {"s2xsn.json", {2, 10, 12}}, {"sphere-n2.json", {12}}};
    const char* want[] = {"ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2", "ℤ^1 ⊕ ℤ/2", "ℤ/2"};
    for (std::size_t i = 0; i < 3; ++i) {
        Datum d = load(rows[i].first);
        Codim2Result r = codim2_group(d);
        c.expect(r.group.determined(), std::string(rows[i].first) + ": single branch");
        const Invariants g = r.group.branches.front().group;
        c.expect(g.render() == want[i], std::string(rows[i].first) + ": got " + g.render());
        c.expect(g == wedge_oracle(rows[i].second, d.n()), std::string(rows[i].first) + ": differs from the wedge");
    }
}

void nonspin(Check& c) {
    Datum d = load("cp2xs.json");
    c.expect(d.n() >= 7, "n >= 7");
    Codim2Result r = codim2_group(d);
    c.expect(r.group.determined(), "single branch");
    const Parameter* eps = r.group.parameter("epsilon");
    c.expect(eps && eps->value == 1, "epsilon = 1");
    const Invariants g = r.group.branches.front().group;
    c.expect(g.render() == "ℤ^1", "got " + g.render());
    c.expect(g.torsion.empty(), "no Z/2 summand");
}

void string_case(Check& c) {
    Codim3Result s = assemble_codim3(load("string-sphere.json"));
    c.expect(s.group.determined() && s.group.only().group.render() == "ℤ/24", "S^{n+3} gives Z/24");

    Datum t3 = load("snxt3.json");
    Codim3Result r = assemble_codim3(t3);
    const Invariants want = wedge_oracle({1, 1, 1, 2, 2, 2, 3, 10, 11, 11, 11, 12, 12, 12, 13}, t3.n());
    c.expect(want.render() == "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/24", "wedge oracle value");
    c.expect(r.group.determined() && r.group.only().group == want, "S^n x T^3 equals the wedge oracle");

    ParametricGroup spin = spin3_bordism(t3);
    c.expect(spin.determined() && spin.only().group.render() == "ℤ^1 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2 ⊕ ℤ/2",
             "spin bordism of S^n x T^3");

    ParametricGroup ses = g_to_h_ses(t3, 3);
    c.expect(ses.determined(), "structure-group sequence single branch");
    const SESReport& e = ses.only().ses.at(0);
    c.expect(e.left.render() == "ℤ/24", "left = Z/24");
    c.expect(e.right == spin.only().group, "right = spin bordism");
    c.expect(e.left + e.right == r.group.only().group, "left + right reassembles the codim-3 result");
}

void exactness(Check& c) {
    auto group = [&](const ParametricGroup& g, const std::string& where) {
        for (const auto& b : g.branches)
            for (const auto& s : b.ses) c.expect(exactness_holds(s), where + " / " + g.name + " / " + s.name);
    };
    for (const auto& f : kClean) {
        Datum d = load(f);
        if (d.is_manifold()) d = derive_wu_actions(d);
        if (d.codimension == 2) {
            group(codim2_group(d).group, f);
            if (d.homology && d.is_manifold()) {
                group(codim2_bordism_dual(d).group, f);
                FramedSpin2 fs = framed_spin_bordism2(d);
                c.expect(exactness_holds(fs.spin), f + " / framed-spin");
            }
            if (d.tag == Structure::Spin) {
                group(g_to_h_ses(d, 1), f);
                group(g_to_h_ses(d, 2), f);
            }
        } else {
            TowerGroups t = tower_groups(d);
            c.expect(exactness_holds(t.kerAlpha3.alpha3Ses), f + " / ker alpha3");
            c.expect(exactness_holds(t.kerAlpha3.sq2BarSes), f + " / ker Sq2bar");
            group(t.kerAlpha3.group, f);
            group(t.kerAlpha3.kerSq2Bar, f);
            if (d.is_manifold()) group(assemble_codim3(d).group, f);
            if (d.tag == Structure::String) {
                group(string_fast_path(d), f);
                group(spin3_bordism(d), f);
                group(g_to_h_ses(d, 3), f);
            }
        }
    }
}

void fault_injection(Check& c) {
    for (const auto& f : kClean) c.expect(validate_datum(load(f)).ok(), f + " passes");
    const std::tuple<const char*, const char*, int> faults[] = {
        {"cw-corrupt-sq1sq1.json", "a", 9},   {"dold-m1-corrupt-sq1.json", "b", 9}, {"dold-m1-corrupt-h9.json", "c", 9},
        {"dold-m1-corrupt-sq2.json", "d", 9}, {"dold-m3-corrupt-sq4.json", "e", 6}, {"dold-m1-corrupt-wu.json", "f", 10},
        {"dold-m1-corrupt-w3.json", "g", 2}};
    std::set<std::string> caught;
    for (const auto& [file, id, deg] : faults) {
        ValidationReport r = validate_datum(load(file));
        bool located = false;
        for (const auto& x : r.failures) located = located || (x.id == id && x.degree == deg);
        c.expect(located, std::string(file) + ": check " + id + " at degree " + std::to_string(deg));
        if (located) caught.insert(id);
    }
    c.expect(caught.size() == 7, "all seven relation checks exercised");
}

void dual_consistency(Check& c) {
    std::size_t seen = 0;
    for (const auto& f : kClean) {
        Datum d = load(f);
        if (d.codimension != 2 || !d.is_manifold() || !d.homology) continue;
        ++seen;
        Codim2Result a = codim2_group(d);
        Codim2Result b = codim2_bordism_dual(d);
        c.expect(a.group.branches.size() == b.group.branches.size(), f + ": branch count");
        for (std::size_t i = 0; i < std::min(a.group.branches.size(), b.group.branches.size()); ++i)
            c.expect(a.group.branches[i].group == b.group.branches[i].group, f + ": middles differ");
    }
    c.expect(seen >= 5, "at least five manifolds with homology");
}

void determinism(Check& c) {
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::to_string(code) + "\n" + out.str();
    };
    std::vector<std::vector<std::string>> commands;
    std::vector<std::string> all = {"cw-corrupt-sq1sq1.json", "dold-m1-corrupt-sq1.json", "cp2xs-spin-tag.json"};
    all.insert(all.end(), kClean.begin(), kClean.end());
    for (const auto& f : all) {
        const std::string p = support::corpus(f);
        for (const char* cmd : {"validate", "codim2", "codim3", "expand"}) commands.push_back({cmd, p, "--json", "-"});
        for (const char* k : {"1", "2", "3"}) commands.push_back({"bordism", p, "--k", k, "--json", "-"});
        commands.push_back({"codim3", p, "--enumerate-extensions", "--assume-phi-trivial", "--json", "-"});
    }
    commands.push_back({"section-check", "--kappa", "zero", "--euler-h", "zero", "--defect", "unknown", "--json", "-"});
    commands.push_back({"oracle", "--wedge", "n,n+1,n+3", "--target", "10", "--json", "-"});
    std::vector<std::string> batch = {"codim2"};
    for (const auto& f : kClean) batch.push_back(support::corpus(f));
    batch.insert(batch.end(), {"--json", "-", "--quiet"});
    commands.push_back(batch);

    for (const auto& cmd : commands) {
        const std::string a = run(cmd), b = run(cmd);
        std::string joined;
        for (const auto& s : cmd) joined += s + " ";
        c.expect(a == b, "output differs: " + joined);
        const std::string body = a.substr(a.find('\n') + 1);
        c.expect(io::Json::accept(body), "not JSON: " + joined);
    }
}

}  // namespace

int main() {
    std::cout << "corpus: " << support::corpus_dir() << "\n";
    criterion(1, "Smith normal form equals the elimination oracle on 1000 random matrices", smith_oracle);
    criterion(2, "extension classifier equals element-level enumeration for |A| <= 16", extension_oracle);
    criterion(3, "Dold ring squares and case dispatch", dold_regression);
    criterion(4, "codim-2 groups of T^2 x S^n, S^2 x S^n, S^{n+2} equal the wedge oracle", wedge_agreement);
    criterion(5, "CP^2 x S^{n-2} gives Z with epsilon = 1", nonspin);
    criterion(6, "codim-3 string manifolds, spin bordism and reassembly", string_case);
    criterion(7, "exactness accounting on every corpus sequence and branch", exactness);
    criterion(8, "validator fault injection", fault_injection);
    criterion(9, "cohomological and homological codim-2 middles agree", dual_consistency);
    criterion(10, "byte-identical JSON across repeated CLI runs", determinism);
    std::cout << (failed_criteria ? "FAILED " : "ALL PASSED ") << (10 - failed_criteria) << "/10\n";
    return failed_criteria ? 1 : 0;
}
