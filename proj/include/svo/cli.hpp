#ifndef SVO_CLI_HPP
#define SVO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "svo/graph.hpp"
#include "svo/vertex_set.hpp"

namespace svo::cli {

enum exit_code : int {
    success = 0,
    input_failure = 1,
    internal_failure = 2,
    verification_mismatch = 3,
};

/// Runs one command line (without the program name). The result document
/// goes to `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "all" -> every vertex, "" -> empty, otherwise comma-separated indices.
vertex_set parse_vertex_list(const std::string& text, int n);

}  // namespace svo::cli

#endif  // SVO_CLI_HPP
