#pragma once

#include "avoidable/graph.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace avoidable::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_absent = 3;

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-validates every path, cycle and extension claimed in a single-graph
/// result document against `g`. Returns one message per problem found.
std::vector<std::string> recheck_document(const nlohmann::json& doc, const Graph& g);

} // namespace avoidable::cli
