#include "hyperind/io.hpp"

#include <cerrno>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hyperind/errors.hpp"

namespace hyperind {

namespace {

std::vector<std::uint64_t> parse_fields(const std::string& line, std::size_t line_no) {
    std::vector<std::uint64_t> fields;
    std::istringstream ss(line);
    std::string token;
    while (ss >> token) {
        std::uint64_t value = 0;
        std::size_t consumed = 0;
        try {
            value = std::stoull(token, &consumed);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected a nonnegative integer, got '" + token + "'");
        }
        if (consumed != token.size()) {
            throw ParseError(line_no, "trailing characters in field '" + token + "'");
        }
        fields.push_back(value);
    }
    return fields;
}

} // namespace

Hypergraph read_hg(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // Header.
    if (!std::getline(in, line)) throw ParseError(1, "empty input, expected '<uniformity> <n> <m>' header");
    ++line_no;
    auto header = parse_fields(line, line_no);
    if (header.size() != 3) throw ParseError(line_no, "header must be '<uniformity> <n> <m>'");
    const std::uint64_t uniformity = header[0];
    const std::uint64_t n = header[1];
    const std::uint64_t m = header[2];
    if (uniformity < 2) throw ParseError(line_no, "uniformity must be at least 2");
    if (n > 0xffffffffULL) throw ParseError(line_no, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        if (!std::getline(in, line)) {
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                              std::to_string(edges.size()));
        }
        ++line_no;
        auto fields = parse_fields(line, line_no);
        if (fields.empty()) continue; // tolerate blank lines between edges
        if (fields.size() != uniformity) {
            throw ParseError(line_no, "edge has " + std::to_string(fields.size()) +
                                          " vertices, expected " + std::to_string(uniformity));
        }
        Edge e;
        e.reserve(uniformity);
        for (std::uint64_t v : fields) {
            if (v >= n) {
                throw ParseError(line_no, "vertex " + std::to_string(v) + " outside [0, " +
                                              std::to_string(n) + ")");
            }
            e.push_back(static_cast<VertexId>(v));
        }
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (e[i - 1] >= e[i]) throw ParseError(line_no, "edge is not strictly ascending");
        }
        if (!edges.empty()) {
            if (edges.back() == e) throw ParseError(line_no, "duplicate edge");
            if (edges.back() > e) throw ParseError(line_no, "edges not in canonical ascending order");
        }
        edges.push_back(std::move(e));
    }
    // Anything but whitespace after the last edge is an error.
    while (std::getline(in, line)) {
        ++line_no;
        if (!parse_fields(line, line_no).empty()) {
            throw ParseError(line_no, "unexpected content after last edge");
        }
    }
    return Hypergraph::create(static_cast<unsigned>(uniformity), static_cast<VertexId>(n),
                              std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
    return read_hg(in);
}

std::string to_hg_string(const Hypergraph& h) {
    std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) +
                      " " + std::to_string(h.edge_count()) + "\n";
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.good()) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out.good()) throw std::runtime_error("write to '" + tmp + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("rename to '" + path + "' failed: " + ec.message());
    }
}

void write_hg_file(const Hypergraph& h, const std::string& path) {
    write_file_atomic(path, to_hg_string(h));
}

} // namespace hyperind
