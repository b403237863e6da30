#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eds/graph.hpp"

namespace eds {

// Input errors carry the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Edge-list text format: first data line "n m", then m lines "u v" with
// 0-based endpoints. '#' starts a comment; blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6, bit-exact per the standard encoding (McKay). Accepts an optional
// ">>graph6<<" prefix on input; writes the bare form.
Graph read_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Loads either format. ".g6" extension forces graph6; otherwise the first
// data line decides (two integers = edge list, anything else = graph6).
Graph load_graph(const std::string& path);

}  // namespace eds
