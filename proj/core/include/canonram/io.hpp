#pragma once

#include <canonram/colouring.hpp>
#include <canonram/cutnorm.hpp>
#include <canonram/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <memory>

namespace canonram {

// Text formats, whitespace separated, '#' starts a comment line.
//   graph:      "n m" then m lines "u v" (written in lexicographic order)
//   colouring:  "n m" then m lines "u v c", covering every host edge once
//   weighted:   "n" then n(n-1)/2 lines "u v w" in lexicographic pair order
// Malformed input raises ParseError with the first offending line.

OrderedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const OrderedGraph& g);

/// Colours must cover exactly the edges of `host`.
EdgeColouring read_colouring(std::istream& in, std::shared_ptr<const OrderedGraph> host);
/// Builds the host from the listed edges.
EdgeColouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const EdgeColouring& phi);

WeightedGraph read_weighted(std::istream& in);
void write_weighted(std::ostream& out, const WeightedGraph& f);

OrderedGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const OrderedGraph& g);
EdgeColouring load_colouring(const std::filesystem::path& path, std::shared_ptr<const OrderedGraph> host);
EdgeColouring load_colouring(const std::filesystem::path& path);
void save_colouring(const std::filesystem::path& path, const EdgeColouring& phi);
WeightedGraph load_weighted(const std::filesystem::path& path);
void save_weighted(const std::filesystem::path& path, const WeightedGraph& f);

}  // namespace canonram
