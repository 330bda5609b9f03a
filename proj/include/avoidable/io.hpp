#pragma once

#include "avoidable/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace avoidable::io {

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// Edge-list document: a header line "n m", then m lines "u v" with 0-based
/// ids. Lines starting with '#' and blank lines are skipped. Duplicate edges
/// are collapsed with a warning; the header count includes them.
ParsedGraph parse_edge_list(std::string_view text);

// Canonical form: header, then edges u < v ascending, LF-terminated.
std::string serialize_edge_list(const Graph& g);

// One graph6 line (optional ">>graph6<<" prefix, trailing newline tolerated).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

enum class Format { automatic, edge_list, graph6 };

/// Reads one edge-list document or a stream of graph6 lines. Auto-detection
/// treats the input as graph6 unless its first meaningful line starts with a
/// digit (graph6 bytes are all >= 63).
std::vector<ParsedGraph> read_graphs(std::string_view text, Format format = Format::automatic);

// "sha256:" followed by the lower-case hex SHA-256 of serialize_edge_list(g).
std::string digest(const Graph& g);

} // namespace avoidable::io
