// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dfwalk {

enum class GraphFormat { edge_list, graph6, matrix_market };

struct LoadOptions {
    /// Edge-list node ids start at 1 instead of 0.
    bool one_indexed = false;
    /// Edge-list tokens are arbitrary names, numbered in order of first
    /// appearance; the names become the NodeLabelMap.
    bool relabel = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

/// Whitespace-separated tokens with their 1-based byte columns.
inline std::vector<std::pair<std::string_view, std::size_t>> tokenize(std::string_view line) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.emplace_back(line.substr(start, i - start), start + 1);
        }
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, std::size_t col) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line, col);
    }
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Edge list
// ---------------------------------------------------------------------------

/// Reads "u v" lines. '#' starts a comment line, blank lines are skipped.
/// A comment of the form "# nodes N" fixes the node count (so isolated
/// trailing nodes survive a save/load cycle); otherwise n = max id + 1.
inline LabeledGraph read_edge_list(std::istream& in, const LoadOptions& opt = {}) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> name_index;
    std::size_t declared_nodes = 0;
    std::size_t max_id_plus_one = 0;

    auto resolve = [&](std::string_view tok, std::size_t line, std::size_t col) -> NodeId {
        if (opt.relabel) {
            auto [it, inserted] = name_index.emplace(std::string(tok), names.size());
            if (inserted) {
                names.emplace_back(tok);
            }
            return it->second;
        }
        std::uint64_t id = detail::parse_uint(tok, line, col);
        if (opt.one_indexed) {
            if (id == 0) {
                throw ParseError("node id 0 in a one-indexed edge list", line, col);
            }
            --id;
        }
        return static_cast<NodeId>(id);
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            auto toks = detail::tokenize(line.substr(1));
            if (toks.size() == 2 && toks[0].first == "nodes") {
                declared_nodes = detail::parse_uint(toks[1].first, line_no, toks[1].second + 1);
            }
            continue;
        }
        auto toks = detail::tokenize(raw);
        if (toks.size() != 2) {
            throw ParseError("expected two node ids, found " + std::to_string(toks.size()) + " tokens",
                             line_no, toks.empty() ? 1 : toks.front().second);
        }
        const NodeId a = resolve(toks[0].first, line_no, toks[0].second);
        const NodeId b = resolve(toks[1].first, line_no, toks[1].second);
        if (a == b) {
            throw GraphError("line " + std::to_string(line_no) + ": self-loop on node " +
                             std::string(toks[0].first));
        }
        pairs.emplace_back(a, b);
        max_id_plus_one = std::max({max_id_plus_one, a + 1, b + 1});
    }

    LabeledGraph out;
    if (opt.relabel) {
        out.graph = Graph(names.size(), pairs);
        out.labels = NodeLabelMap(std::move(names));
        return out;
    }
    if (declared_nodes != 0 && max_id_plus_one > declared_nodes) {
        throw GraphError("node id " + std::to_string(max_id_plus_one - 1) +
                         " is out of range for declared node count " + std::to_string(declared_nodes));
    }
    const std::size_t n = std::max(declared_nodes, max_id_plus_one);
    out.graph = Graph(n, pairs);
    if (opt.one_indexed) {
        std::vector<std::string> labels(n);
        for (NodeId i = 0; i < n; ++i) {
            labels[i] = std::to_string(i + 1);
        }
        out.labels = NodeLabelMap(std::move(labels));
    }
    return out;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Standard dense graph6 encoding, without the optional ">>graph6<<" header.
inline std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = g.node_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    } else if (n <= 68719476735ULL) {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
        }
    } else {
        throw DomainError("graph6 supports at most 2^36 - 1 nodes");
    }

    int acc = 0;
    int nbits = 0;
    for (NodeId j = 1; j < n; ++j) {
        for (NodeId i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) {
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    }
    return out;
}

/// Decodes one graph6 record. `line` is only used for error positions.
inline Graph decode_graph6(std::string_view s, std::size_t line = 1) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t offset = 0;
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
        offset = header.size();
    }
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) {
            throw ParseError("graph6 record is truncated", line, offset + pos + 1);
        }
        const int c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126) {
            throw ParseError("byte outside the graph6 range 63..126", line, offset + pos + 1);
        }
        ++pos;
        return c - 63;
    };

    std::uint64_t n = 0;
    if (s.empty()) {
        throw ParseError("empty graph6 record", line, offset + 1);
    }
    if (s[0] != '~') {
        n = static_cast<std::uint64_t>(next());
    } else if (s.size() > 1 && s[1] == '~') {
        pos = 2;
        for (int i = 0; i < 6; ++i) {
            n = (n << 6) | static_cast<std::uint64_t>(next());
        }
    } else {
        pos = 1;
        for (int i = 0; i < 3; ++i) {
            n = (n << 6) | static_cast<std::uint64_t>(next());
        }
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (s.size() - pos != bytes) {
        throw ParseError("graph6 record for n=" + std::to_string(n) + " needs " + std::to_string(bytes) +
                             " data bytes, found " + std::to_string(s.size() - pos),
                         line, offset + pos + 1);
    }
    std::vector<std::pair<NodeId, NodeId>> pairs;
    int group = 0;
    int left = 0;
    for (NodeId j = 1; j < n; ++j) {
        for (NodeId i = 0; i < j; ++i) {
            if (left == 0) {
                group = next();
                left = 6;
            }
            --left;
            if ((group >> left) & 1) {
                pairs.emplace_back(i, j);
            }
        }
    }
    if (left > 0 && (group & ((1 << left) - 1)) != 0) {
        throw ParseError("non-zero padding bits in graph6 record", line, offset + pos);
    }
    return Graph(static_cast<std::size_t>(n), pairs);
}

/// Line-oriented graph6 stream: one record per line, blank lines skipped.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    /// Next graph in file order, or nullopt at end of stream.
    std::optional<Graph> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            std::string_view rec = detail::trim(raw);
            if (rec.empty()) {
                continue;
            }
            Graph g = decode_graph6(rec, line_);
            ++count_;
            return g;
        }
        return std::nullopt;
    }

    std::size_t count() const noexcept { return count_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
    std::size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// MatrixMarket (coordinate, 1-based)
// ---------------------------------------------------------------------------

inline Graph read_matrix_market(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    if (!std::getline(in, raw)) {
        throw ParseError("missing MatrixMarket banner", 1);
    }
    ++line_no;
    std::string banner = raw;
    std::transform(banner.begin(), banner.end(), banner.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    auto head = detail::tokenize(banner);
    if (head.size() != 5 || head[0].first != "%%matrixmarket" || head[1].first != "matrix" ||
        head[2].first != "coordinate") {
        throw ParseError("expected '%%MatrixMarket matrix coordinate <field> <symmetry>'", 1);
    }
    const std::string_view field = head[3].first;
    const std::string_view symmetry = head[4].first;
    if (field != "pattern" && field != "integer" && field != "real") {
        throw ParseError("unsupported MatrixMarket field '" + std::string(field) + "'", 1, head[3].second);
    }
    if (symmetry != "symmetric" && symmetry != "general") {
        throw ParseError("unsupported MatrixMarket symmetry '" + std::string(symmetry) + "'", 1,
                         head[4].second);
    }
    const bool has_value = field != "pattern";

    std::optional<std::uint64_t> n;
    std::uint64_t expected = 0;
    std::uint64_t seen = 0;
    std::vector<std::pair<NodeId, NodeId>> pairs;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '%') {
            continue;
        }
        auto toks = detail::tokenize(raw);
        if (!n) {
            if (toks.size() != 3) {
                throw ParseError("expected size line 'rows cols entries'", line_no);
            }
            const auto rows = detail::parse_uint(toks[0].first, line_no, toks[0].second);
            const auto cols = detail::parse_uint(toks[1].first, line_no, toks[1].second);
            if (rows != cols) {
                throw ParseError("adjacency matrix must be square", line_no, toks[1].second);
            }
            n = rows;
            expected = detail::parse_uint(toks[2].first, line_no, toks[2].second);
            continue;
        }
        if (toks.size() != (has_value ? 3u : 2u)) {
            throw ParseError("wrong number of fields in entry", line_no, toks.empty() ? 1 : toks[0].second);
        }
        const auto i = detail::parse_uint(toks[0].first, line_no, toks[0].second);
        const auto j = detail::parse_uint(toks[1].first, line_no, toks[1].second);
        if (i == 0 || j == 0 || i > *n || j > *n) {
            throw GraphError("line " + std::to_string(line_no) + ": index out of range 1.." +
                             std::to_string(*n));
        }
        ++seen;
        if (has_value) {
            double v = 0.0;
            std::istringstream(std::string(toks[2].first)) >> v;
            if (v == 0.0) {
                continue;
            }
        }
        if (i == j) {
            throw GraphError("line " + std::to_string(line_no) + ": self-loop on node " + std::to_string(i));
        }
        pairs.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(j - 1));
    }
    if (!n) {
        throw ParseError("missing size line", line_no + 1);
    }
    if (seen != expected) {
        throw ParseError("expected " + std::to_string(expected) + " entries, found " + std::to_string(seen),
                         line_no);
    }
    return Graph(static_cast<std::size_t>(*n), pairs);
}

/// Writes the lower triangle (row > column), as the symmetric format requires.
inline void write_matrix_market(std::ostream& out, const Graph& g) {
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << g.node_count() << ' ' << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.v + 1 << ' ' << e.u + 1 << '\n';
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline LabeledGraph load_labeled_graph(std::istream& in, GraphFormat format, const LoadOptions& opt = {}) {
    switch (format) {
    case GraphFormat::edge_list:
        return read_edge_list(in, opt);
    case GraphFormat::graph6: {
        Graph6Reader reader(in);
        auto g = reader.next();
        if (!g) {
            throw ParseError("no graph6 record in input", reader.line() + 1);
        }
        return {std::move(*g), {}};
    }
    case GraphFormat::matrix_market:
        return {read_matrix_market(in), {}};
    }
    throw DomainError("unknown graph format");
}

inline Graph load_graph(std::istream& in, GraphFormat format, const LoadOptions& opt = {}) {
    return load_labeled_graph(in, format, opt).graph;
}

inline void save_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    switch (format) {
    case GraphFormat::edge_list:
        write_edge_list(out, g);
        return;
    case GraphFormat::graph6:
        out << encode_graph6(g) << '\n';
        return;
    case GraphFormat::matrix_market:
        write_matrix_market(out, g);
        return;
    }
}

// ---------------------------------------------------------------------------
// Binary node labels ("node_id<TAB>0|1")
// ---------------------------------------------------------------------------

/// Reads a node classification file. Node ids are resolved through `labels`
/// when it is non-empty, otherwise parsed as indices (honouring
/// `one_indexed`). Nodes absent from the file get label 0.
inline std::vector<int> read_node_labels(std::istream& in, std::size_t n, const NodeLabelMap& labels = {},
                                         bool one_indexed = false) {
    std::vector<int> out(n, 0);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto toks = detail::tokenize(raw);
        if (toks.size() != 2) {
            throw ParseError("expected 'node_id<TAB>0|1'", line_no, toks.empty() ? 1 : toks[0].second);
        }
        NodeId node = 0;
        if (!labels.empty()) {
            auto found = labels.find(std::string(toks[0].first));
            if (!found) {
                throw ParseError("unknown node '" + std::string(toks[0].first) + "'", line_no, toks[0].second);
            }
            node = *found;
        } else {
            auto id = detail::parse_uint(toks[0].first, line_no, toks[0].second);
            if (one_indexed) {
                if (id == 0) {
                    throw ParseError("node id 0 in a one-indexed file", line_no, toks[0].second);
                }
                --id;
            }
            if (id >= n) {
                throw ParseError("node id out of range", line_no, toks[0].second);
            }
            node = static_cast<NodeId>(id);
        }
        if (toks[1].first == "0") {
            out[node] = 0;
        } else if (toks[1].first == "1") {
            out[node] = 1;
        } else {
            throw ParseError("label must be 0 or 1", line_no, toks[1].second);
        }
    }
    return out;
}

} // namespace dfwalk
