#pragma once

#include "cohomotopy/bordism.hpp"
#include "cohomotopy/codim2.hpp"
#include "cohomotopy/codim3.hpp"
#include "cohomotopy/datum.hpp"
#include "cohomotopy/report.hpp"
#include "cohomotopy/ring.hpp"
#include "cohomotopy/validate.hpp"

#include <json.hpp>

#include <string>

namespace coh::io {

using Json = nlohmann::json;

// Input and report documents carry this in "schemaVersion".
inline constexpr int kSchemaVersion = 1;

// Parse an input document. Errors are ParseError naming the offending field
// (or line and column for malformed JSON); ring data is expanded and merged.
Datum parse_datum(const std::string& text);
Datum parse_datum(const Json& doc);
std::string read_file(const std::string& path);
// The "ring" block alone.
RingPresentation parse_ring(const Json& j);
Datum load_datum(const std::string& path);

std::string sha256_hex(const std::string& bytes);

// Explicit form of a datum: every stored group and map, no ring block.
Json datum_to_json(const Datum& d);
Json datum_summary(const Datum& d);

Json to_json(const Int& x);
Json to_json(const Matrix& m);
Json to_json(const F2Matrix& m);
Json to_json(const Invariants& g);
Json to_json(const SESReport& r);
Json to_json(const Parameter& p);
Json to_json(const ParametricGroup& g);
Json to_json(const ValidationReport& r);
Json to_json(const Codim2Result& r);
Json to_json(const FramedSpin2& r);
Json to_json(const KerAlpha3& k);
Json to_json(const TowerGroups& t);
Json to_json(const Codim3Result& r);
Json to_json(const SectionResult& r);

// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace coh::io
