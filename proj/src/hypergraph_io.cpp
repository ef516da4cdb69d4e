#include "hgc/hypergraph_io.hpp"

#include "hgc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hgc {
namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        if (line[i] == '\r') throw parse_error("carriage return (expected LF line endings)", lineno);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const auto used = static_cast<std::size_t>(ptr - (line.data() + i));
        if (ec != std::errc{} || used == 0 ||
            (i + used < line.size() && line[i + used] != ' ' && line[i + used] != '\t')) {
            throw parse_error("expected a non-negative decimal integer near '" +
                                  std::string(line.substr(i, 16)) + "'",
                              lineno);
        }
        out.push_back(value);
        i += used;
    }
    return out;
}

} // namespace

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::vector<std::vector<Vertex>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto nums = parse_numbers(line, lineno);
        if (!have_header) {
            if (nums.size() != 2) throw parse_error("header must be '<vertex_count> <edge_count>'", lineno);
            vertex_count = nums[0];
            edge_count = nums[1];
            if (vertex_count > std::numeric_limits<Vertex>::max()) {
                throw parse_error("vertex count too large", lineno);
            }
            have_header = true;
            edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(edge_count, 1u << 20)));
            continue;
        }
        if (nums.empty()) throw parse_error("empty edge line", lineno);
        if (edges.size() == edge_count) throw parse_error("more edges than declared in header", lineno);
        std::vector<Vertex> edge;
        edge.reserve(nums.size());
        for (std::size_t j = 0; j < nums.size(); ++j) {
            if (nums[j] >= vertex_count) {
                throw parse_error("vertex " + std::to_string(nums[j]) + " index out of range", lineno);
            }
            if (j > 0 && nums[j] <= nums[j - 1]) {
                throw parse_error("edge vertices must be strictly ascending", lineno);
            }
            edge.push_back(static_cast<Vertex>(nums[j]));
        }
        edges.push_back(std::move(edge));
    }
    if (!have_header) throw parse_error("missing header line", lineno + 1);
    if (edges.size() != edge_count) {
        throw parse_error("expected " + std::to_string(edge_count) + " edges, found " +
                              std::to_string(edges.size()),
                          lineno + 1);
    }
    return Hypergraph(static_cast<std::size_t>(vertex_count), edges);
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_hypergraph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto f = h.edge(e);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << '\n';
    }
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    write_hypergraph(out, h);
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

} // namespace hgc
