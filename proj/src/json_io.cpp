#include "cohomotopy/json_io.hpp"

#include "cohomotopy/errors.hpp"
#include "cohomotopy/ring.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace coh::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError("field '" + path + "': " + msg);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

void allow_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, _] : obj.items()) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) fail(join(path, k), "unknown key");
    }
}

int to_degree(const std::string& key, const std::string& path) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != key.size()) fail(join(path, key), "degree keys must be integers");
    return v;
}

long get_count(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long>() < 0) fail(path, "expected a nonnegative integer");
    return j.get<long>();
}

Int get_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) == 0) return v;
    }
    fail(path, "expected an integer");
}

Matrix get_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    if (j.size() != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols)
            fail(rp, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = get_int(j[i][c], rp + "[" + std::to_string(c) + "]");
    }
    return m;
}

Matrix get_mod_matrix(const Json& j, std::size_t rows, std::size_t cols, long p, const std::string& path) {
    Matrix m = get_matrix(j, rows, cols, path);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (m(i, c) < 0 || m(i, c) >= p)
                fail(path, "entries must lie in 0.." + std::to_string(p - 1));
    return m;
}

FVec get_fvec(const Json& j, std::size_t len, const std::string& path) {
    if (!j.is_array() || j.size() != len) fail(path, "expected a 0/1 vector of length " + std::to_string(len));
    FVec v(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (!j[i].is_number_integer() || (j[i].get<long>() != 0 && j[i].get<long>() != 1))
            fail(path, "entries must be 0 or 1");
        v[i] = static_cast<std::uint8_t>(j[i].get<long>());
    }
    return v;
}

Tri get_tri(const Json& j, const std::string& path) {
    if (j.is_null()) return Tri::Unknown;
    if (j.is_boolean()) return j.get<bool>() ? Tri::True : Tri::False;
    if (j.is_string() && j.get<std::string>() == "unknown") return Tri::Unknown;
    fail(path, "expected true, false, null or \"unknown\"");
}

AbelianGroup get_group(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a group object");
    if (j.contains("generators")) {
        allow_keys(j, path, {"generators", "relations"});
        const auto g = static_cast<std::size_t>(get_count(j["generators"], join(path, "generators")));
        if (!j.contains("relations")) return AbelianGroup::free(g);
        const Json& rel = j["relations"];
        if (rel.is_array() && rel.empty()) return AbelianGroup::free(g);
        const std::size_t r = !rel.is_array() || !rel[0].is_array() ? 0 : rel[0].size();
        return AbelianGroup(g, get_matrix(rel, g, r, join(path, "relations")));
    }
    allow_keys(j, path, {"free", "torsion"});
    Invariants inv;
    const std::size_t free = j.contains("free") ? static_cast<std::size_t>(get_count(j["free"], join(path, "free"))) : 0;
    std::vector<Int> orders;
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) fail(join(path, "torsion"), "expected a list of orders");
        for (std::size_t i = 0; i < j["torsion"].size(); ++i) {
            Int o = get_int(j["torsion"][i], join(path, "torsion") + "[" + std::to_string(i) + "]");
            if (o < 2) fail(join(path, "torsion"), "cyclic orders must be at least 2");
            orders.push_back(o);
        }
    }
    return AbelianGroup::from_invariants(Invariants::from_cyclic_orders(free, orders));
}

std::vector<std::string> get_terms(const Json& j, const std::string& path) {
    if (j.is_string()) return {j.get<std::string>()};
    if (!j.is_array()) fail(path, "expected a polynomial string or a list of them");
    std::vector<std::string> out;
    for (const auto& t : j) {
        if (!t.is_string()) fail(path, "expected polynomial strings");
        out.push_back(t.get<std::string>());
    }
    return out;
}

RingPresentation get_ring(const Json& j, const std::string& path) {
    allow_keys(j, path, {"generators", "sq", "w2", "w3", "integralLift"});
    RingPresentation p;
    if (!j.contains("generators") || !j["generators"].is_array()) fail(join(path, "generators"), "expected a list");
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
        const std::string gp = join(path, "generators") + "[" + std::to_string(i) + "]";
        const Json& g = j["generators"][i];
        allow_keys(g, gp, {"name", "degree", "truncation"});
        if (!g.contains("name") || !g["name"].is_string()) fail(join(gp, "name"), "expected a string");
        RingGenerator r;
        r.name = g["name"].get<std::string>();
        r.degree = static_cast<int>(get_count(g.value("degree", Json()), join(gp, "degree")));
        if (r.degree < 1) fail(join(gp, "degree"), "generator degrees must be positive");
        if (g.contains("truncation")) r.truncation = static_cast<int>(get_count(g["truncation"], join(gp, "truncation")));
        p.generators.push_back(r);
    }
    if (j.contains("sq")) {
        if (!j["sq"].is_object()) fail(join(path, "sq"), "expected an object");
        for (const auto& [gen, byK] : j["sq"].items()) {
            const std::string sp = join(join(path, "sq"), gen);
            if (!byK.is_object()) fail(sp, "expected an object keyed by square index");
            for (const auto& [k, val] : byK.items()) p.sq[gen][to_degree(k, sp)] = get_terms(val, join(sp, k));
        }
    }
    for (const char* w : {"w2", "w3"})
        if (j.contains(w)) {
            if (!j[w].is_string()) fail(join(path, w), "expected a polynomial string");
            (std::string(w) == "w2" ? p.w2 : p.w3) = j[w].get<std::string>();
        }
    if (j.contains("integralLift")) {
        if (!j["integralLift"].is_boolean()) fail(join(path, "integralLift"), "expected a boolean");
        p.sq1_lift = j["integralLift"].get<bool>();
    }
    return p;
}

const std::pair<const char*, Op> kOpKeys[] = {{"sq1", Op::Sq1},       {"sq2", Op::Sq2},     {"sq4", Op::Sq4},
                                              {"sq2sq1", Op::Sq2Sq1}, {"cupW2", Op::CupW2}, {"cupW3", Op::CupW3}};

// Ranks and generator counts for shape checks, supplied data first, then ring data.
struct Shapes {
    const Datum& d;
    const RingData* ring;

    std::size_t mod2(int i, const std::string& path) const {
        if (i < 0 || i > d.dimension) return 0;
        if (auto it = d.mod2.find(i); it != d.mod2.end()) return it->second;
        if (ring)
            if (auto it = ring->mod2.find(i); it != ring->mod2.end()) return it->second;
        fail(path, "needs the mod-2 rank at degree " + std::to_string(i));
    }
    std::size_t mod3(int i, const std::string& path) const {
        if (i < 0 || i > d.dimension) return 0;
        if (auto it = d.mod3.find(i); it != d.mod3.end()) return it->second;
        fail(path, "needs the mod-3 rank at degree " + std::to_string(i));
    }
    std::size_t gens(int i, const std::string& path) const {
        if (i < 0 || i > d.dimension) return 0;
        if (auto it = d.integral.find(i); it != d.integral.end()) return it->second.num_generators();
        if (ring)
            if (auto it = ring->integral.find(i); it != ring->integral.end()) return it->second.num_generators();
        fail(path, "needs the integral group at degree " + std::to_string(i));
    }
};

void read_degrees(const Json& j, Datum& d) {
    if (!j.is_object()) fail("degrees", "expected an object keyed by degree");
    for (const auto& [k, v] : j.items()) {
        const std::string path = join("degrees", k);
        const int i = to_degree(k, "degrees");
        if (i < 0 || i > d.dimension) fail(path, "degree outside 0..dimension");
        allow_keys(v, path, {"integral", "mod2", "mod3"});
        if (v.contains("integral")) d.integral.emplace(i, get_group(v["integral"], join(path, "integral")));
        if (v.contains("mod2")) d.mod2[i] = static_cast<std::size_t>(get_count(v["mod2"], join(path, "mod2")));
        if (v.contains("mod3")) d.mod3[i] = static_cast<std::size_t>(get_count(v["mod3"], join(path, "mod3")));
    }
}

template <class F>
void for_degrees(const Json& j, const std::string& path, F&& f) {
    if (!j.is_object()) fail(path, "expected an object keyed by degree");
    for (const auto& [k, v] : j.items()) f(to_degree(k, path), v, join(path, k));
}

void read_maps(const Json& j, Datum& d, const Shapes& s) {
    std::vector<const char*> keys;
    for (const auto& [k, _] : kOpKeys) keys.push_back(k);
    for (const char* k : {"rho2", "bockstein", "rho3", "bockstein3", "p1Cup3"}) keys.push_back(k);
    if (!j.is_object()) fail("maps", "expected an object");
    for (const auto& [k, _] : j.items())
        if (std::find_if(keys.begin(), keys.end(), [&](const char* a) { return k == a; }) == keys.end())
            fail(join("maps", k), "unknown map");

    for (const auto& [key, op] : kOpKeys) {
        if (!j.contains(key)) continue;
        for_degrees(j[key], join("maps", key), [&](int i, const Json& v, const std::string& p) {
            const std::size_t r = s.mod2(i + op_shift(op), p), c = s.mod2(i, p);
            d.ops[op][i] = F2Matrix::from_int(get_mod_matrix(v, r, c, 2, p));
        });
    }
    if (j.contains("rho2"))
        for_degrees(j["rho2"], "maps.rho2", [&](int i, const Json& v, const std::string& p) {
            d.rho2[i] = F2Matrix::from_int(get_mod_matrix(v, s.mod2(i, p), s.gens(i, p), 2, p));
        });
    if (j.contains("bockstein"))
        for_degrees(j["bockstein"], "maps.bockstein", [&](int i, const Json& v, const std::string& p) {
            d.bockstein[i] = get_matrix(v, s.gens(i + 1, p), s.mod2(i, p), p);
        });
    if (j.contains("rho3"))
        for_degrees(j["rho3"], "maps.rho3", [&](int i, const Json& v, const std::string& p) {
            d.rho3[i] = F3Matrix::from_int(get_mod_matrix(v, s.mod3(i, p), s.gens(i, p), 3, p));
        });
    if (j.contains("bockstein3"))
        for_degrees(j["bockstein3"], "maps.bockstein3", [&](int i, const Json& v, const std::string& p) {
            d.bockstein3[i] = get_matrix(v, s.gens(i + 1, p), s.mod3(i, p), p);
        });
    if (j.contains("p1Cup3"))
        for_degrees(j["p1Cup3"], "maps.p1Cup3", [&](int i, const Json& v, const std::string& p) {
            d.p1Cup3[i] = F3Matrix::from_int(get_mod_matrix(v, s.mod3(i + 4, p), s.mod3(i, p), 3, p));
        });
}

HomologyData read_homology(const Json& j) {
    const std::string path = "homology";
    allow_keys(j, path,
               {"H1", "H2", "H3", "h1Mod2", "h3Mod2", "rho2", "capW2Mod2", "bockstein", "pairingW2"});
    HomologyData h;
    for (const char* k : {"H1", "H2", "H3"})
        if (j.contains(k)) {
            AbelianGroup g = get_group(j[k], join(path, k));
            (k[1] == '1' ? h.H1 : k[1] == '2' ? h.H2 : h.H3) = g;
        }
    if (j.contains("h1Mod2")) h.h1Mod2 = static_cast<std::size_t>(get_count(j["h1Mod2"], "homology.h1Mod2"));
    if (j.contains("h3Mod2")) h.h3Mod2 = static_cast<std::size_t>(get_count(j["h3Mod2"], "homology.h3Mod2"));
    auto need = [&](bool ok, const std::string& field, const char* what) {
        if (!ok) fail(join(path, field), std::string("needs ") + what);
    };
    const std::size_t g2 = h.H2 ? h.H2->num_generators() : 0, g3 = h.H3 ? h.H3->num_generators() : 0;
    if (j.contains("rho2")) {
        need(h.H3 && h.h3Mod2, "rho2", "H3 and h3Mod2");
        h.rho2 = F2Matrix::from_int(get_mod_matrix(j["rho2"], *h.h3Mod2, g3, 2, "homology.rho2"));
    }
    if (j.contains("capW2Mod2")) {
        need(h.h1Mod2 && h.h3Mod2, "capW2Mod2", "h1Mod2 and h3Mod2");
        h.capW2Mod2 = F2Matrix::from_int(get_mod_matrix(j["capW2Mod2"], *h.h1Mod2, *h.h3Mod2, 2, "homology.capW2Mod2"));
    }
    if (j.contains("bockstein")) {
        need(h.H2 && h.h3Mod2, "bockstein", "H2 and h3Mod2");
        h.bockstein = get_matrix(j["bockstein"], g2, *h.h3Mod2, "homology.bockstein");
    }
    if (j.contains("pairingW2")) {
        need(h.H2.has_value(), "pairingW2", "H2");
        h.pairingW2 = F2Matrix::from_int(get_mod_matrix(j["pairingW2"], 1, g2, 2, "homology.pairingW2"));
    }
    return h;
}

void read_overrides(const Json& j, Datum& d, const Shapes& s) {
    allow_keys(j, "overrides", {"thetaImage", "phiTrivial", "tTrivial", "threePrimaryEpsilon"});
    Overrides& o = d.overrides;
    if (j.contains("thetaImage"))
        for_degrees(j["thetaImage"], "overrides.thetaImage", [&](int i, const Json& v, const std::string& p) {
            // Θ on degree n-1 lands in degree n+2; on degree n in degree n+3.
            const int target = i == d.n() - 1 ? d.n() + 2 : i == d.n() ? d.n() + 3 : -1;
            if (target < 0) fail(p, "Θ images are declared on degrees n-1 and n only");
            if (!v.is_array()) fail(p, "expected a list of vectors");
            auto& list = o.thetaImage[i];
            for (std::size_t q = 0; q < v.size(); ++q)
                list.push_back(get_fvec(v[q], s.mod2(target, p), p + "[" + std::to_string(q) + "]"));
        });
    if (j.contains("phiTrivial")) o.phiTrivial = get_tri(j["phiTrivial"], "overrides.phiTrivial");
    if (j.contains("tTrivial")) o.tTrivial = get_tri(j["tTrivial"], "overrides.tTrivial");
    if (j.contains("threePrimaryEpsilon") && !j["threePrimaryEpsilon"].is_null()) {
        const Json& e = j["threePrimaryEpsilon"];
        if (!e.is_number_integer() || (e.get<long>() != 0 && e.get<long>() != 1))
            fail("overrides.threePrimaryEpsilon", "expected 0, 1 or null");
        o.threePrimaryEpsilon = static_cast<int>(e.get<long>());
    }
}

}  // namespace

Datum parse_datum(const Json& doc) {
    allow_keys(doc, "", {"schemaVersion", "name", "description", "dimension", "codimension", "structure", "degrees",
                           "maps", "classes", "p1Mod3Trivial", "ring", "homology", "overrides"});
    if (!doc.contains("schemaVersion")) fail("schemaVersion", "required");
    if (!doc["schemaVersion"].is_number_integer() || doc["schemaVersion"].get<long>() != kSchemaVersion)
        fail("schemaVersion", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");

    Datum d;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail("name", "expected a string");
        d.name = doc["name"].get<std::string>();
    }
    for (const char* k : {"dimension", "codimension", "structure"})
        if (!doc.contains(k)) fail(k, "required");
    d.dimension = static_cast<int>(get_count(doc["dimension"], "dimension"));
    d.codimension = static_cast<int>(get_count(doc["codimension"], "codimension"));
    if (d.codimension != 2 && d.codimension != 3) fail("codimension", "must be 2 or 3");
    if (d.dimension <= 2 * d.codimension) fail("dimension", "too small for the stable range");
    if (!doc["structure"].is_string()) fail("structure", "expected a string");
    try {
        d.tag = parse_structure(doc["structure"].get<std::string>());
    } catch (const ParseError& e) {
        fail("structure", e.what());
    }

    if (doc.contains("degrees")) read_degrees(doc["degrees"], d);

    std::optional<RingData> ring;
    if (doc.contains("ring")) ring = ingest_ring(get_ring(doc["ring"], "ring"), d.dimension);
    const Shapes shapes{d, ring ? &*ring : nullptr};

    if (doc.contains("maps")) read_maps(doc["maps"], d, shapes);
    if (doc.contains("classes")) {
        const Json& c = doc["classes"];
        allow_keys(c, "classes", {"w2", "w3"});
        if (c.contains("w2")) d.w2 = get_fvec(c["w2"], shapes.mod2(2, "classes.w2"), "classes.w2");
        if (c.contains("w3")) d.w3 = get_fvec(c["w3"], shapes.mod2(3, "classes.w3"), "classes.w3");
    }
    if (doc.contains("p1Mod3Trivial")) d.p1Mod3Trivial = get_tri(doc["p1Mod3Trivial"], "p1Mod3Trivial");
    if (doc.contains("homology")) d.homology = read_homology(doc["homology"]);
    if (doc.contains("overrides")) read_overrides(doc["overrides"], d, shapes);
    if (ring) merge_ring_data(d, *ring);
    return d;
}

RingPresentation parse_ring(const Json& j) { return get_ring(j, "ring"); }

Datum parse_datum(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return parse_datum(doc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Datum load_datum(const std::string& path) { return parse_datum(read_file(path)); }

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

Json to_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const F2Matrix& m) { return to_json(m.to_int()); }

Json to_json(const Invariants& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(to_json(d));
    return {{"freeRank", g.free_rank}, {"invariantFactors", t}, {"render", g.render()}};
}

Json to_json(const SESReport& r) {
    Json cands = Json::array();
    for (const auto& c : r.candidates) cands.push_back(to_json(c));
    return {{"name", r.name},
            {"left", {{"label", r.leftLabel}, {"group", to_json(r.left)}}},
            {"middle", {{"label", r.middleLabel}, {"group", to_json(r.middle)}}},
            {"right", {{"label", r.rightLabel}, {"group", to_json(r.right)}}},
            {"verdict", to_string(r.verdict)},
            {"classifier", r.classifier ? to_json(*r.classifier) : Json()},
            {"candidates", cands},
            {"exact", exactness_holds(r)},
            {"notes", r.notes}};
}

Json to_json(const Parameter& p) {
    return {{"name", p.name},
            {"provenance", to_string(p.provenance)},
            {"value", p.value ? Json(*p.value) : Json()},
            {"reason", p.reason}};
}

Json to_json(const ParametricGroup& g) {
    Json params = Json::array(), branches = Json::array();
    for (const auto& p : g.parameters) params.push_back(to_json(p));
    for (const auto& b : g.branches) {
        Json cands = Json::array(), ses = Json::array();
        for (const auto& c : b.candidates) cands.push_back(to_json(c));
        for (const auto& s : b.ses) ses.push_back(to_json(s));
        Json inv = to_json(b.group);
        branches.push_back({{"assumptions", Json(b.assumptions)},
                            {"freeRank", inv["freeRank"]},
                            {"invariantFactors", inv["invariantFactors"]},
                            {"render", inv["render"]},
                            {"extensionStatus", to_string(b.status)},
                            {"candidates", cands},
                            {"ses", ses}});
    }
    return {{"name", g.name}, {"determined", g.determined()}, {"parameters", params}, {"branches", branches}};
}

Json to_json(const ValidationReport& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"id", f.id},
                         {"relation", f.relation},
                         {"degree", f.degree},
                         {"witness", f.witness},
                         {"detail", f.detail}});
    return {{"ok", r.ok()}, {"failures", fails}, {"checked", r.checked.size()}, {"warnings", r.warnings}};
}

Json to_json(const Codim2Result& r) {
    return {{"route", r.route},
            {"kernelTerm", to_json(r.kernelTerm)},
            {"quotientTerm", to_json(r.quotientTerm)},
            {"framedSummandPresent", r.framedSummandPresent ? Json(*r.framedSummandPresent) : Json()},
            {"classifier", to_json(r.classifier)},
            {"splitting", to_string(r.splitting)},
            {"group", to_json(r.group)},
            {"notes", r.notes}};
}

Json to_json(const FramedSpin2& r) {
    return {{"spin", to_json(r.spin)}, {"framed", to_json(r.framed)}, {"corollaryHolds", r.corollaryHolds}};
}

Json to_json(const KerAlpha3& k) {
    return {{"kerAlpha3", to_json(k.group)},
            {"kerSq2Bar", to_json(k.kerSq2Bar)},
            {"qhComponent", to_string(k.qhComponent)},
            {"g1Component", to_string(k.g1Component)},
            {"g1Summand", k.g1Summand},
            {"g1Criterion", k.g1Criterion},
            {"notes", k.notes}};
}

Json to_json(const TowerGroups& t) {
    return {{"epsSq4Z", t.epsSq4Z},
            {"G1", to_json(t.g1)},
            {"G2", to_json(t.g2)},
            {"kernels", to_json(t.kerAlpha3)},
            {"thetaQuotient", to_json(t.thetaQuotient)}};
}

Json to_json(const Codim3Result& r) {
    return {{"case", r.manifoldCase}, {"group", to_json(r.group)}, {"tower", to_json(r.tower)}, {"notes", r.notes}};
}

Json to_json(const SectionResult& r) {
    return {{"verdict", to_string(r.verdict)}, {"failing", r.failing}, {"unknown", r.unknown}};
}

Json datum_summary(const Datum& d) {
    Json degs = Json::array();
    for (int i = d.window_lo(); i <= d.window_hi(); ++i) {
        Json e = {{"degree", i}};
        if (auto it = d.integral.find(i); it != d.integral.end()) e["integral"] = it->second.invariants().render();
        if (auto it = d.mod2.find(i); it != d.mod2.end()) e["mod2"] = it->second;
        degs.push_back(e);
    }
    return {{"name", d.name},
            {"dimension", d.dimension},
            {"codimension", d.codimension},
            {"n", d.n()},
            {"structure", to_string(d.tag)},
            {"window", {d.window_lo(), d.window_hi()}},
            {"degrees", degs},
            {"warnings", d.warnings}};
}

namespace {

Json group_json(const AbelianGroup& g) {
    return {{"generators", g.num_generators()}, {"relations", to_json(g.relations())}};
}

Json tri_json(Tri t) { return t == Tri::Unknown ? Json() : Json(t == Tri::True); }

template <class M, class F>
Json by_degree(const std::map<int, M>& m, F&& f) {
    Json out = Json::object();
    for (const auto& [i, x] : m) out[std::to_string(i)] = f(x);
    return out;
}

}  // namespace

Json datum_to_json(const Datum& d) {
    Json doc = {{"schemaVersion", kSchemaVersion},
                {"name", d.name},
                {"dimension", d.dimension},
                {"codimension", d.codimension},
                {"structure", to_string(d.tag)}};
    Json degs = Json::object();
    for (const auto& [i, g] : d.integral) degs[std::to_string(i)]["integral"] = group_json(g);
    for (const auto& [i, r] : d.mod2) degs[std::to_string(i)]["mod2"] = r;
    for (const auto& [i, r] : d.mod3) degs[std::to_string(i)]["mod3"] = r;
    doc["degrees"] = degs;

    Json maps = Json::object();
    for (const auto& [op, byDeg] : d.ops)
        if (!byDeg.empty()) maps[op_name(op)] = by_degree(byDeg, [](const F2Matrix& m) { return to_json(m); });
    auto mat = [](const Matrix& m) { return to_json(m); };
    auto f3 = [](const F3Matrix& m) { return to_json(m.to_int()); };
    if (!d.rho2.empty()) maps["rho2"] = by_degree(d.rho2, [](const F2Matrix& m) { return to_json(m); });
    if (!d.bockstein.empty()) maps["bockstein"] = by_degree(d.bockstein, mat);
    if (!d.rho3.empty()) maps["rho3"] = by_degree(d.rho3, f3);
    if (!d.bockstein3.empty()) maps["bockstein3"] = by_degree(d.bockstein3, mat);
    if (!d.p1Cup3.empty()) maps["p1Cup3"] = by_degree(d.p1Cup3, f3);
    doc["maps"] = maps;

    Json classes = Json::object();
    if (d.w2) classes["w2"] = *d.w2;
    if (d.w3) classes["w3"] = *d.w3;
    if (!classes.empty()) doc["classes"] = classes;
    if (d.p1Mod3Trivial != Tri::Unknown) doc["p1Mod3Trivial"] = tri_json(d.p1Mod3Trivial);

    if (d.homology) {
        const HomologyData& h = *d.homology;
        Json hj = Json::object();
        if (h.H1) hj["H1"] = group_json(*h.H1);
        if (h.H2) hj["H2"] = group_json(*h.H2);
        if (h.H3) hj["H3"] = group_json(*h.H3);
        if (h.h1Mod2) hj["h1Mod2"] = *h.h1Mod2;
        if (h.h3Mod2) hj["h3Mod2"] = *h.h3Mod2;
        if (h.rho2) hj["rho2"] = to_json(*h.rho2);
        if (h.capW2Mod2) hj["capW2Mod2"] = to_json(*h.capW2Mod2);
        if (h.bockstein) hj["bockstein"] = to_json(*h.bockstein);
        if (h.pairingW2) hj["pairingW2"] = to_json(*h.pairingW2);
        doc["homology"] = hj;
    }

    const Overrides& o = d.overrides;
    Json ov = Json::object();
    if (!o.thetaImage.empty()) ov["thetaImage"] = by_degree(o.thetaImage, [](const std::vector<FVec>& v) { return Json(v); });
    if (o.phiTrivial != Tri::Unknown) ov["phiTrivial"] = tri_json(o.phiTrivial);
    if (o.tTrivial != Tri::Unknown) ov["tTrivial"] = tri_json(o.tTrivial);
    if (o.threePrimaryEpsilon) ov["threePrimaryEpsilon"] = *o.threePrimaryEpsilon;
    if (!ov.empty()) doc["overrides"] = ov;
    return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coh::io
