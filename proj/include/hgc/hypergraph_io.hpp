#pragma once

#include "hgc/hypergraph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace hgc {

// Text format:
//   <vertex_count> <edge_count>
//   one edge per line, space-separated ascending vertex indices
// Lines starting with '#' are comments. LF line endings, ASCII decimal.

/// Throws parse_error naming the offending line.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph load_hypergraph(const std::string& path);

void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string format_hypergraph(const Hypergraph& h);
void save_hypergraph(const std::string& path, const Hypergraph& h);

} // namespace hgc
