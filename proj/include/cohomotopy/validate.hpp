#pragma once

#include "cohomotopy/datum.hpp"

#include <string>
#include <vector>

namespace coh {

struct CheckFailure {
    std::string id;        // "a".."g", or "structure"
    std::string relation;  // human-readable relation name
    int degree = 0;
    std::vector<long> witness;  // source-coordinate vector exhibiting the failure
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckFailure> failures;
    std::vector<std::string> checked;  // "<id>@<degree>" for every evaluated instance
    std::vector<std::string> warnings;
    bool ok() const { return failures.empty(); }
    bool failed(const std::string& id) const;
};

const char* relation_name(const std::string& id);

ValidationReport validate_datum(const Datum& d);

}  // namespace coh
