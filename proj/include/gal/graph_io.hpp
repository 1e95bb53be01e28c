#pragma once

#include "gal/graph.hpp"

#include <string>
#include <string_view>

namespace gal {

struct WeightedGraph
{
    Graph graph;
    Weights weights;
};

/// Reads the line-oriented `p gal <n>` format:
///
///     # comment
///     p gal 5
///     e 0 1
///     w 3 3/2
///
/// Vertices default to weight 1. Loops, duplicate edges, duplicate weight lines,
/// out-of-range vertices and malformed lines raise ParseError with the line number.
WeightedGraph parse_graph(std::string_view text);

/// Canonical text: header, edges sorted lexicographically with u < v, then `w`
/// lines in vertex order unless every weight equals 1. Real weights are written
/// as the exact binary fraction of the stored double.
std::string write_graph(const Graph& g, const Weights& w);
std::string write_graph(const Graph& g);

WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g, const Weights& w);

} // namespace gal
