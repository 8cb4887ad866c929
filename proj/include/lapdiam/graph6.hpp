#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapdiam/graph.hpp"

namespace lapdiam {

/// graph6 decode failure. position() is the 0-based byte offset of the fault
/// within the line (after any ">>graph6<<" header has been stripped).
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t position, const std::string& what)
        : std::runtime_error("graph6 byte " + std::to_string(position) + ": " + what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Encodes g with the shortest size header. No trailing newline.
std::string write_graph6(const Graph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" and a trailing "\r" are tolerated.
Graph parse_graph6(std::string_view line);

struct Graph6Record {
    std::size_t line_number;  // 1-based
    std::string text;
};

struct Graph6ReadError {
    std::size_t line_number;
    std::string message;
};

/// Reads a graph6 stream: one graph per line, blank lines and a ">>graph6<<"
/// header skipped. Malformed lines are collected in `errors` and skipped.
std::vector<Graph> read_graph6_stream(std::istream& in, std::vector<Graph6ReadError>& errors);

}  // namespace lapdiam
