#pragma once

#include <iosfwd>
#include <string>

#include "hyperind/hypergraph.hpp"

namespace hyperind {

/// ".hg" text format.
/// Line 1: `<uniformity> <n> <m>`; then m lines, each a space-separated
/// strictly ascending edge, edges in canonical ascending order.
/// Parse failures throw ParseError with the offending line number.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

std::string to_hg_string(const Hypergraph& h);

/// Writes via a temporary file that is renamed into place, so a failed run
/// never leaves a partial output file.
void write_file_atomic(const std::string& path, const std::string& contents);
void write_hg_file(const Hypergraph& h, const std::string& path);

} // namespace hyperind
