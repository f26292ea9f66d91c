#ifndef MATHER_CLI_HPP
#define MATHER_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mather/chow.hpp"

namespace mather::cli {

// A class as it appears on the command line: either "n:c0,c1,...,cn"
// (dimension-ascending, whitespace-insensitive) or a JSON object
// {"ambient": n, "coeffs": [...]} with integer or decimal-string entries.
struct ClassSpec {
    int ambient = 0;
    std::vector<Int> coeffs;
    std::optional<int> dim;
    bool is_signed = false;

    ChowClass to_class() const { return ChowClass(ambient, coeffs); }
};

ClassSpec parse_class(const std::string& text);

// Runs one invocation. JSON result on `out` (unless --no-json), human summary
// on `err` (unless --quiet). Returns 0 on success, 2 on parse/validation
// problems, 3 on domain errors; error documents carry a stable "code".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mather::cli

#endif
