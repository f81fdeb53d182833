#pragma once

#include "cohomotopy/codim3.hpp"
#include "cohomotopy/json_io.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace coh::cli {

struct CommandOptions {
    Codim3Options codim3;
    int k = 2;  // bordism
};

// One input file through one command. `code` follows the exit-code contract.
struct FileOutcome {
    io::Json document;
    std::string text;
    int code = 0;
};

FileOutcome run_file(const std::string& command, const std::string& path, const CommandOptions& o);

// Resolves a relative path against COHOMOTOPY_CORPUS when it does not exist as given.
std::string resolve_input(const std::string& path);

// Parses "n", "n+3", "12" against the target n.
int parse_dimension_token(const std::string& token, int n);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coh::cli
