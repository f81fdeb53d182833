#include "cohomotopy/cli_app.hpp"

#include "cohomotopy/bordism.hpp"
#include "cohomotopy/codim2.hpp"
#include "cohomotopy/errors.hpp"
#include "cohomotopy/validate.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace coh::cli {

namespace {

using io::Json;

std::string render_assumptions(const Assignment& a) {
    if (a.empty()) return "";
    std::string s = "[";
    bool first = true;
    for (const auto& [k, v] : a) {
        s += (first ? "" : ", ") + k + "=" + std::to_string(v);
        first = false;
    }
    return s + "] ";
}

void render_group(std::ostream& os, const ParametricGroup& g, const std::string& indent = "  ") {
    os << indent << g.name << ":\n";
    for (const auto& p : g.parameters)
        os << indent << "  " << p.name << " = " << (p.value ? std::to_string(*p.value) : "?") << " ("
           << to_string(p.provenance) << ": " << p.reason << ")\n";
    for (const auto& b : g.branches) {
        os << indent << "  " << render_assumptions(b.assumptions) << b.group.render() << "  " << to_string(b.status)
           << "\n";
        for (const auto& c : b.candidates) os << indent << "      candidate " << c.render() << "\n";
    }
}

void render_ses(std::ostream& os, const SESReport& s) {
    os << "  0 -> " << s.left.render() << " -> " << s.middle.render() << " -> " << s.right.render() << " -> 0  ("
       << to_string(s.verdict) << ")\n";
}

Invariants two_primary(const Invariants& g) {
    std::vector<Int> orders;
    for (const auto& q : g.primary_orders())
        if (mpz_scan1(q.get_mpz_t(), 0) + 1 == mpz_sizeinbase(q.get_mpz_t(), 2)) orders.push_back(q);
    return Invariants::from_cyclic_orders(g.free_rank, orders);
}

// Datum ready for computation: validated, then Wu actions filled in.
Datum prepared(const std::string& path, Json& doc) {
    Datum raw = io::load_datum(path);
    ValidationReport v = validate_datum(raw);
    doc["validation"] = io::to_json(v);
    if (!v.ok()) {
        const CheckFailure& f = v.failures.front();
        throw ValidationError("relation " + f.relation + " fails at degree " + std::to_string(f.degree));
    }
    Datum d = raw.is_manifold() ? derive_wu_actions(raw) : raw;
    doc["datum"] = io::datum_summary(d);
    return d;
}

void cmd_validate(const std::string& path, Json& doc, std::ostream& os, int& code) {
    Datum d = io::load_datum(path);
    ValidationReport v = validate_datum(d);
    doc["datum"] = io::datum_summary(d);
    doc["validation"] = io::to_json(v);
    os << path << ": " << (v.ok() ? "ok" : "FAILED") << " (" << v.checked.size() << " checks)\n";
    for (const auto& f : v.failures) {
        os << "  [" << f.id << "] " << f.relation << " at degree " << f.degree << ": " << f.detail;
        if (!f.witness.empty()) {
            os << "  witness (";
            for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
            os << ")";
        }
        os << "\n";
    }
    for (const auto& w : v.warnings) os << "  warning: " << w << "\n";
    code = v.ok() ? 0 : static_cast<int>(ExitCode::ValidationFailure);
}

void cmd_codim2(const std::string& path, Json& doc, std::ostream& os) {
    Datum d = prepared(path, doc);
    Codim2Result r = codim2_group(d);
    Json res = {{"codim2", io::to_json(r)}};
    os << d.name << " (dimension " << d.dimension << ", n = " << d.n() << ", " << to_string(d.tag) << ")\n";
    render_group(os, r.group);
    for (const auto& b : r.group.branches)
        for (const auto& s : b.ses) render_ses(os, s);
    if (d.homology && d.is_manifold()) {
        Codim2Result dual = codim2_bordism_dual(d);
        FramedSpin2 fs = framed_spin_bordism2(d);
        res["dual"] = io::to_json(dual);
        res["framedSpin"] = io::to_json(fs);
        os << "  homological dual: " << dual.group.only().group.render() << "\n";
        os << "  Omega_2^{fr,Spin}(M): " << fs.spin.middle.render() << (fs.corollaryHolds ? "" : "  (corollary FAILS)")
           << "\n";
    }
    doc["result"] = res;
}

void cmd_codim3(const std::string& path, const CommandOptions& o, Json& doc, std::ostream& os) {
    Datum d = prepared(path, doc);
    Json res = Json::object();
    os << d.name << " (dimension " << d.dimension << ", n = " << d.n() << ", " << to_string(d.tag) << ")\n";
    ParametricGroup tower = codim3_tower_route(d, o.codim3);
    res["towerRoute"] = io::to_json(tower);
    if (d.is_manifold()) {
        Codim3Result r = assemble_codim3(d, o.codim3);
        // The tower route computes the 2-primary part; match it branch by branch.
        bool agree = true;
        for (const auto& b : r.group.branches)
            for (const auto& t : tower.branches) {
                bool same = true;
                for (const auto& [k, v] : t.assumptions)
                    if (b.assumptions.count(k) && b.assumptions.at(k) != v) same = false;
                if (same && t.status != Verdict::Undetermined && two_primary(b.group) != t.group) agree = false;
            }
        res["codim3"] = io::to_json(r);
        res["towerAgreement"] = agree;
        os << "  manifold case " << r.manifoldCase << "\n";
        render_group(os, r.group);
        if (!agree) os << "  tower route DISAGREES with the four-case assembly\n";
        if (d.tag == Structure::String) {
            ParametricGroup fast = string_fast_path(d), spin = spin3_bordism(d);
            res["stringFastPath"] = io::to_json(fast);
            res["spin3"] = io::to_json(spin);
            render_group(os, fast);
            render_group(os, spin);
        }
    } else {
        render_group(os, tower);
    }
    doc["result"] = res;
}

void cmd_bordism(const std::string& path, const CommandOptions& o, Json& doc, std::ostream& os) {
    Datum d = prepared(path, doc);
    ParametricGroup g = g_to_h_ses(d, o.k);
    doc["result"] = {{"bordism", io::to_json(g)}, {"k", o.k}};
    os << d.name << ", k = " << o.k << "\n";
    for (const auto& b : g.branches) {
        if (!b.assumptions.empty()) {
            std::string a = render_assumptions(b.assumptions);
            a.pop_back();
            os << "  " << a << "\n";
        }
        for (const auto& s : b.ses) {
            os << "  left " << s.leftLabel << " = " << s.left.render() << ", right " << s.rightLabel << " = "
               << s.right.render() << "\n";
            render_ses(os, s);
            for (const auto& n : s.notes) os << "  note: " << n << "\n";
        }
    }
}

void cmd_expand(const std::string& path, Json& doc, std::ostream& os) {
    Datum d = io::load_datum(path);
    if (d.is_manifold()) d = derive_wu_actions(d);
    doc["result"] = {{"datum", io::datum_to_json(d)}};
    os << io::dump(io::datum_to_json(d));
}

Json base_document(const std::string& command) {
    return {{"schemaVersion", io::kSchemaVersion}, {"tool", "cohomotopy"}, {"command", command}};
}

Tri parse_tri_flag(const std::string& v) {
    if (v == "zero") return Tri::True;
    if (v == "nonzero") return Tri::False;
    return Tri::Unknown;
}

struct Output {
    std::string jsonPath;
    bool quiet = false;
};

int emit(const std::vector<FileOutcome>& outs, const std::string& command, const Output& o, std::ostream& out,
         std::ostream& err) {
    int code = 0;
    for (const auto& f : outs) code = std::max(code, f.code);
    if (o.jsonPath != "-" && !o.quiet)
        for (const auto& f : outs)
            if (!f.document.contains("error")) out << f.text;
    if (!o.jsonPath.empty()) {
        Json j;
        if (outs.size() == 1) {
            j = outs.front().document;
        } else {
            j = base_document(command);
            j["documents"] = Json::array();
            for (const auto& f : outs) j["documents"].push_back(f.document);
        }
        if (o.jsonPath == "-") {
            out << io::dump(j);
        } else {
            std::ofstream f(o.jsonPath, std::ios::binary);
            if (!f) {
                err << "cannot write " << o.jsonPath << "\n";
                return static_cast<int>(ExitCode::ParseFailure);
            }
            f << io::dump(j);
        }
    }
    return code;
}

}  // namespace

std::string resolve_input(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    const char* corpus = std::getenv("COHOMOTOPY_CORPUS");
    if (corpus && fs::path(path).is_relative()) {
        fs::path alt = fs::path(corpus) / path;
        if (fs::exists(alt)) return alt.string();
        alt = fs::path(corpus) / fs::path(path).filename();
        if (fs::exists(alt)) return alt.string();
    }
    return path;
}

FileOutcome run_file(const std::string& command, const std::string& path, const CommandOptions& o) {
    FileOutcome r;
    r.document = base_document(command);
    const std::string resolved = resolve_input(path);
    r.document["input"] = {{"path", path}};
    std::ostringstream os;
    try {
        r.document["input"]["sha256"] = io::sha256_hex(io::read_file(resolved));
        if (command == "validate") cmd_validate(resolved, r.document, os, r.code);
        else if (command == "codim2") cmd_codim2(resolved, r.document, os);
        else if (command == "codim3") cmd_codim3(resolved, o, r.document, os);
        else if (command == "bordism") cmd_bordism(resolved, o, r.document, os);
        else if (command == "expand") cmd_expand(resolved, r.document, os);
        else throw ParseError("unknown command '" + command + "'");
    } catch (const Error& e) {
        r.code = static_cast<int>(e.exit_code());
        r.document["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        os << path << ": " << e.kind() << ": " << e.what() << "\n";
    }
    r.text = os.str();
    return r;
}

int parse_dimension_token(const std::string& token, int n) {
    std::string t;
    for (char c : token)
        if (c != ' ') t += c;
    try {
        if (t == "n") return n;
        if (t.size() > 2 && t[0] == 'n' && (t[1] == '+' || t[1] == '-')) {
            std::size_t used = 0;
            const int off = std::stoi(t.substr(2), &used);
            if (used == t.size() - 2) return t[1] == '+' ? n + off : n - off;
        } else {
            std::size_t used = 0;
            const int v = std::stoi(t, &used);
            if (used == t.size()) return v;
        }
    } catch (const std::exception&) {
    }
    throw ParseError("cannot read sphere dimension '" + token + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stable cohomotopy and bordism groups of manifolds in codimensions 2 and 3", "cohomotopy"};
    app.require_subcommand(1);
    Output output;
    CommandOptions opts;
    std::vector<std::string> files;
    int jobs = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("files", files, "input JSON files")->required();
        sub->add_option("--json", output.jsonPath, "write the JSON report to a file, or - for stdout");
        sub->add_flag("--quiet", output.quiet, "suppress the text report");
        sub->add_option("--jobs", jobs, "files processed concurrently (default: one per file)");
    };
    auto* validate = app.add_subcommand("validate", "check the cohomological relations of a datum");
    add_common(validate);
    auto* codim2 = app.add_subcommand("codim2", "pi^n of an (n+2)-dimensional datum");
    add_common(codim2);
    auto* codim3 = app.add_subcommand("codim3", "pi^n of an (n+3)-dimensional datum");
    add_common(codim3);
    codim3->add_flag("--assume-phi-trivial", opts.codim3.assumePhiTrivial, "take eps(Phi) = 0");
    codim3->add_flag("--assume-t-trivial", opts.codim3.assumeTTrivial, "take eps(T) = 0");
    codim3->add_flag("--assume-eps3-zero", opts.codim3.assumeEps3Zero, "take the 3-primary eps = 0");
    codim3->add_flag("--enumerate-extensions", opts.codim3.enumerateExtensions,
                     "list every candidate middle group of order <= 64");
    auto* bordism = app.add_subcommand("bordism", "the split structure-group sequence for Omega_k^fr(M)");
    add_common(bordism);
    bordism->add_option("--k", opts.k, "bordism degree (1, 2, 3 or 7)")->required();
    auto* expand = app.add_subcommand("expand", "print the explicit datum after ring expansion and Wu derivation");
    add_common(expand);

    EulerData euler;
    std::string eg = "unknown", kappa = "unknown", eh = "unknown", delta = "unknown";
    auto* section = app.add_subcommand("section-check", "nowhere-vanishing section decision");
    section->add_option("--k", euler.k, "rank shift k (1, 2 or 3)");
    const std::vector<std::string> states{"zero", "nonzero", "unknown"};
    section->add_option("--euler-g", eg, "G-Euler class")->check(CLI::IsMember(states));
    section->add_option("--kappa", kappa, "G-divisor")->check(CLI::IsMember(states));
    section->add_option("--euler-h", eh, "H-Euler class")->check(CLI::IsMember(states));
    section->add_option("--defect", delta, "G-defect class")->check(CLI::IsMember(states));
    section->add_option("--json", output.jsonPath, "write the JSON report to a file, or - for stdout");

    std::string wedge;
    int target = 0;
    auto* oracle = app.add_subcommand("oracle", "stable homotopy of a wedge of spheres");
    oracle->add_option("--wedge", wedge, "sphere dimensions, e.g. n,n+3")->required();
    oracle->add_option("--target", target, "n")->required();
    oracle->add_option("--json", output.jsonPath, "write the JSON report to a file, or - for stdout");

    std::vector<std::string> argv{"cohomotopy"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargs;
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return static_cast<int>(ExitCode::ParseFailure);
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    if (command == "section-check" || command == "oracle") {
        FileOutcome f;
        f.document = base_document(command);
        std::ostringstream os;
        try {
            if (command == "section-check") {
                euler.eGZero = parse_tri_flag(eg);
                euler.kappaZero = parse_tri_flag(kappa);
                euler.eHZero = parse_tri_flag(eh);
                euler.deltaZero = parse_tri_flag(delta);
                SectionResult r = section_existence(euler);
                f.document["result"] = io::to_json(r);
                os << to_string(r.verdict) << "\n";
                for (const auto& c : r.failing) os << "  fails: " << c << "\n";
                for (const auto& c : r.unknown) os << "  unknown: " << c << "\n";
            } else {
                std::vector<int> dims;
                std::stringstream ss(wedge);
                for (std::string tok; std::getline(ss, tok, ',');) dims.push_back(parse_dimension_token(tok, target));
                Invariants g = wedge_oracle(dims, target);
                f.document["result"] = {{"dimensions", dims}, {"target", target}, {"group", io::to_json(g)}};
                os << g.render() << "\n";
            }
        } catch (const Error& e) {
            f.code = static_cast<int>(e.exit_code());
            f.document["error"] = {{"kind", e.kind()}, {"message", e.what()}};
            os << e.kind() << ": " << e.what() << "\n";
        }
        f.text = f.code ? "" : os.str();
        if (f.code) err << os.str();
        return emit({f}, command, output, out, err);
    }

    std::vector<FileOutcome> outs(files.size());
    const std::size_t width = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max<std::size_t>(files.size(), 1);
    for (std::size_t start = 0; start < files.size(); start += width) {
        std::vector<std::future<FileOutcome>> running;
        for (std::size_t i = start; i < std::min(files.size(), start + width); ++i)
            running.push_back(std::async(std::launch::async, run_file, command, files[i], opts));
        for (std::size_t i = 0; i < running.size(); ++i) outs[start + i] = running[i].get();
    }
    for (const auto& f : outs)
        if (f.code && f.document.contains("error")) err << f.text;
    return emit(outs, command, output, out, err);
}

}  // namespace coh::cli
