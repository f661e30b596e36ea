#pragma once

#include "multicover/hypergraph.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace multicover {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text instance format (1-based):
//   line 1: n m
//   line 2: b_1 ... b_n
//   lines 3..m+2: one edge per line, space-separated vertex indices
// Lines starting with '#' are ignored.
Hypergraph parse_instance_text(std::istream& in);
void write_instance_text(std::ostream& out, const Hypergraph& h);

// JSON equivalent: {"n": ..., "demands": [...], "edges": [[...], ...]},
// vertex indices 1-based. Accepted interchangeably with the text format.
Hypergraph parse_instance_json(std::istream& in);
void write_instance_json(std::ostream& out, const Hypergraph& h);

// Dispatches on extension: ".json" -> JSON, anything else -> text.
Hypergraph read_instance(const std::filesystem::path& path);

// Writers emit both formats: <base>.txt and <base>.json.
void write_instance_files(const std::filesystem::path& base, const Hypergraph& h);

}  // namespace multicover
