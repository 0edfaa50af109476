#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boxicity/boxrep.hpp"
#include "boxicity/graph.hpp"

namespace boxicity {

/// Malformed input. line() is 1-based; 0 when the problem is not tied to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr std::string_view kRepresentationHeader = "boxrep 1";

/// Edge list: "n m" header then m lines "u v", 0-based. Blank lines are
/// skipped. Rejects self-loops, repeated edges and out-of-range vertices.
Graph parse_edge_list(std::string_view text);

/// DIMACS graph: "c" comment lines, "p edge n m", then "e u v" 1-based.
/// Repeated edges (including both orientations) collapse into one.
Graph parse_dimacs(std::string_view text);

/// Dispatches on the first non-blank line: "c" or "p" means DIMACS.
Graph parse_graph(std::string_view text);

/// Canonical edge list: single spaces, LF endings, edges sorted with u < v.
std::string format_edge_list(const Graph& g);

/// "boxrep 1", then "n d", then one line per vertex holding d "lo hi" pairs.
std::string format_representation(const BoxRepresentation& b);
BoxRepresentation parse_representation(std::string_view text);

/// Rectangles (d = 2) or bars (d = 1) labeled by vertex. Throws
/// std::invalid_argument for d > 2.
std::string render_svg(const BoxRepresentation& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace boxicity
