#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netfig {

// Runs the command-line tool: reads vertex and edge tables, applies settings,
// and writes TeX or SVG. Returns 0 on success, 1 for input errors (message
// names the file, row, and column), 2 for usage errors. Called without
// arguments it prints usage and returns 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netfig
