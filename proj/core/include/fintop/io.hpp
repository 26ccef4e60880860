#pragma once

// Text formats. All are line based, UTF-8, with '#' comment lines.
//
// Space file:
//   points: a b c d
//   le: a c            # a <= c; generators of the preorder
// or, instead of le: lines, the topology given by all of its open sets:
//   open:
//   open: a
//   open: a b
// The two styles cannot be mixed in one file.
//
// Complex file: one simplex per line as space-separated vertex indices.
//
// Map file:
//   map: stage1.space -> stage0.space
//   send: <point> <point>
//
// Sequence manifest: `space: <file>` lines coarse-first, then `bond: <file>`
// lines, bond n mapping space n + 1 to space n. Paths are relative to the
// manifest's directory.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/homology.hpp"
#include "fintop/invsys.hpp"

namespace fintop::io {

FiniteSpace parse_space(std::string_view text, std::string_view source = "<input>");
/// Covering pairs for T0 spaces, every strict pair otherwise.
std::string format_space(const FiniteSpace& space);

SimplicialComplex parse_complex(std::string_view text, std::string_view source = "<input>");
std::string format_complex(const SimplicialComplex& complex);

/// True when the first content line is a `points:` line.
bool looks_like_space(std::string_view text);

struct MapHeader {
  std::string dom_file;
  std::string cod_file;
};

MapHeader parse_map_header(std::string_view text, std::string_view source = "<input>");
/// Every point of dom must be sent exactly once.
PointMap parse_map(std::string_view text, const FiniteSpace& dom, const FiniteSpace& cod,
                   std::string_view source = "<input>");
std::string format_map(const PointMap& map, std::string_view dom_file, std::string_view cod_file);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

FiniteSpace read_space(const std::filesystem::path& path);
SimplicialComplex read_complex(const std::filesystem::path& path);

InverseSequence read_sequence(const std::filesystem::path& manifest);
/// Files named by a manifest, resolved against its directory, in listing order.
std::vector<std::filesystem::path> sequence_files(const std::filesystem::path& manifest);

struct WrittenSequence {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> files;
};

/// Writes stage<i>.space, bond<i>.map and `manifest` into dir.
WrittenSequence write_sequence(const InverseSequence& seq, const std::filesystem::path& dir);

}  // namespace fintop::io
