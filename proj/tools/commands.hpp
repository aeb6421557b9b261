// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <dfwalk/dfwalk.hpp>

namespace dfwalk::cli {

using json = nlohmann::json;

enum class OutputFormat { csv, json };

/// Exit codes of the dfwalk binary.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kOverflow = 2,
    kInvalidConfig = 3,
    kInternal = 4,
};

struct InputConfig {
    std::string path = "-";
    std::string format;  // empty: by extension, else edge-list
    bool one_indexed = false;
    bool relabel = false;
    std::string generate;  // kind:args, overrides path
};

struct CommonConfig {
    InputConfig input;
    OutputFormat output = OutputFormat::csv;
    std::string scheme = "df";
    double beta = 1.0;
    bool log_domain = false;
    bool exact_erf = false;

    DfForm form() const { return exact_erf ? DfForm::erf : DfForm::tanh; }
};

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

/// Shortest representation that reads back to the same double.
inline std::string fmt(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                out_ << ',';
            }
            out_ << csv_field(fields[i]);
        }
        out_ << "\r\n";
    }

private:
    std::ostream& out_;
};

inline std::string linear_field(const SignedLogValue& v) {
    return v.is_finite_as_double() ? fmt(v.to_double()) : std::string();
}

inline std::string log_field(const SignedLogValue& v) {
    return v.is_zero() ? std::string("-inf") : fmt(v.log_magnitude());
}

inline json linear_json(const SignedLogValue& v) {
    return v.is_finite_as_double() ? json(v.to_double()) : json(nullptr);
}

inline json log_json(const SignedLogValue& v) {
    return v.is_zero() ? json(nullptr) : json(v.log_magnitude());
}

inline json number_json(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

// ---------------------------------------------------------------------------
// Input
// ---------------------------------------------------------------------------

inline GraphFormat parse_format(const std::string& name, const std::string& path) {
    if (name == "edge-list" || name == "edges") {
        return GraphFormat::edge_list;
    }
    if (name == "graph6" || name == "g6") {
        return GraphFormat::graph6;
    }
    if (name == "matrix-market" || name == "mtx") {
        return GraphFormat::matrix_market;
    }
    if (!name.empty()) {
        throw DomainError("unknown format '" + name + "' (edge-list, graph6, matrix-market)");
    }
    auto ends_with = [&](const char* ext) {
        const std::string e(ext);
        return path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
    };
    if (ends_with(".g6") || ends_with(".graph6")) {
        return GraphFormat::graph6;
    }
    if (ends_with(".mtx")) {
        return GraphFormat::matrix_market;
    }
    return GraphFormat::edge_list;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

inline std::uint64_t to_uint(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DomainError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

inline double to_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v)) {
        throw DomainError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

/// path:n, complete:n, cycle:n, star:n, trilattice:r:c, er:n:p:seed.
inline Graph generate_graph(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts.empty() ? spec : parts[0];
    auto want = [&](std::size_t count) {
        if (parts.size() != count + 1) {
            throw DomainError("generator '" + kind + "' takes " + std::to_string(count) + " argument(s)");
        }
    };
    if (kind == "path" || kind == "complete" || kind == "cycle" || kind == "star") {
        want(1);
        const auto n = static_cast<std::size_t>(to_uint(parts[1], "node count"));
        if (kind == "path") {
            return path_graph(n);
        }
        if (kind == "complete") {
            return complete_graph(n);
        }
        if (kind == "cycle") {
            return cycle_graph(n);
        }
        return star_graph(n);
    }
    if (kind == "trilattice") {
        want(2);
        return triangular_lattice(static_cast<std::size_t>(to_uint(parts[1], "rows")),
                                  static_cast<std::size_t>(to_uint(parts[2], "columns")));
    }
    if (kind == "er") {
        want(3);
        return erdos_renyi(static_cast<std::size_t>(to_uint(parts[1], "node count")),
                           to_double(parts[2], "edge probability"), to_uint(parts[3], "seed"));
    }
    throw DomainError("unknown generator '" + kind + "' (path, complete, cycle, star, trilattice, er)");
}

inline LabeledGraph load_input(const InputConfig& cfg) {
    if (!cfg.generate.empty()) {
        return {generate_graph(cfg.generate), {}};
    }
    const GraphFormat format = parse_format(cfg.format, cfg.path);
    LoadOptions opt;
    opt.one_indexed = cfg.one_indexed;
    opt.relabel = cfg.relabel;
    if (cfg.path == "-") {
        return load_labeled_graph(std::cin, format, opt);
    }
    std::ifstream in(cfg.path);
    if (!in) {
        throw DomainError("cannot open input '" + cfg.path + "'");
    }
    return load_labeled_graph(in, format, opt);
}

inline std::vector<int> load_labels(const std::string& path, const LabeledGraph& lg, bool one_indexed) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open labels file '" + path + "'");
    }
    // Edge lists read with --one-indexed or --relabel carry names; match on them.
    return read_node_labels(in, lg.graph.node_count(), lg.labels, one_indexed && lg.labels.empty());
}

inline void warn_if_disconnected(const Graph& g, std::ostream& err) {
    if (g.node_count() > 0 && !is_connected(g)) {
        err << "warning: graph is disconnected (" << connected_components(g)
            << " components); indices are computed on the whole graph\n";
    }
}

/// Spectrally computed per-node values; DomainError for schemes that need a
/// parameter range.
inline CentralityVector centrality_for(const EigenDecomposition& eig, const WeightScheme& scheme, double beta,
                                       bool log_domain, DfForm form) {
    return subgraph_centrality(eig, scheme, beta, log_domain ? Domain::log : Domain::linear, form);
}

// ---------------------------------------------------------------------------
// centrality
// ---------------------------------------------------------------------------

inline int cmd_centrality(const CommonConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto lg = load_input(cfg.input);
    warn_if_disconnected(lg.graph, err);
    const WeightScheme scheme = parse_scheme(cfg.scheme);
    const auto eig = eigendecompose(lg.graph);
    const auto c = centrality_for(eig, scheme, cfg.beta, cfg.log_domain, cfg.form());
    const std::string name = to_string(scheme);
    if (cfg.output == OutputFormat::csv) {
        CsvWriter w(out);
        w.row({"node", "scheme", "beta", "sign", "value", "log_value"});
        for (NodeId i = 0; i < c.size(); ++i) {
            w.row({lg.labels.label(i), name, fmt(cfg.beta), std::to_string(c.values[i].sign()),
                   linear_field(c.values[i]), log_field(c.values[i])});
        }
    } else {
        for (NodeId i = 0; i < c.size(); ++i) {
            json row{{"node", lg.labels.label(i)},
                     {"scheme", name},
                     {"beta", cfg.beta},
                     {"sign", c.values[i].sign()},
                     {"value", linear_json(c.values[i])},
                     {"log_value", log_json(c.values[i])}};
            out << row.dump() << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

inline int cmd_index(const CommonConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto lg = load_input(cfg.input);
    const Graph& g = lg.graph;
    warn_if_disconnected(g, err);
    const auto eig = eigendecompose(g);
    const SignedLogValue ee = estrada_index(eig, Factorial{}, cfg.beta);
    const SignedLogValue gamma = estrada_index(eig, DoubleFactorial{}, cfg.beta, cfg.form());
    if (!cfg.log_domain && (!ee.is_finite_as_double() || !gamma.is_finite_as_double())) {
        throw OverflowError("index exceeds double range; rerun with --log-domain");
    }
    const long n = static_cast<long>(g.node_count());
    const SignedLogValue upper = gamma_upper_bound(n);
    const double lower = gamma_lower_bound_asymptotic(n);
    const double dens = g.node_count() >= 2 ? density(g) : std::numeric_limits<double>::quiet_NaN();
    const auto cl = clustering(g);

    if (cfg.output == OutputFormat::csv) {
        CsvWriter w(out);
        w.row({"n", "m", "beta", "form", "ee", "log_ee", "gamma", "log_gamma", "gamma_upper_bound",
               "log_gamma_upper_bound", "gamma_lower_asymptotic", "spectral_radius", "density", "triangles",
               "transitivity", "watts_strogatz"});
        w.row({std::to_string(n), std::to_string(g.edge_count()), fmt(cfg.beta), cfg.exact_erf ? "erf" : "tanh",
               linear_field(ee), log_field(ee), linear_field(gamma), log_field(gamma), linear_field(upper),
               log_field(upper), fmt(lower), fmt(eig.spectral_radius()), std::isnan(dens) ? std::string() : fmt(dens),
               std::to_string(cl.triangle_count), fmt(cl.transitivity), fmt(cl.watts_strogatz_avg)});
    } else {
        json row{{"n", n},
                 {"m", g.edge_count()},
                 {"beta", cfg.beta},
                 {"form", cfg.exact_erf ? "erf" : "tanh"},
                 {"ee", linear_json(ee)},
                 {"log_ee", log_json(ee)},
                 {"gamma", linear_json(gamma)},
                 {"log_gamma", log_json(gamma)},
                 {"gamma_upper_bound", linear_json(upper)},
                 {"log_gamma_upper_bound", log_json(upper)},
                 {"gamma_lower_asymptotic", lower},
                 {"spectral_radius", eig.spectral_radius()},
                 {"density", number_json(dens)},
                 {"triangles", cl.triangle_count},
                 {"transitivity", cl.transitivity},
                 {"watts_strogatz", cl.watts_strogatz_avg}};
        out << row.dump() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareConfig {
    CommonConfig common;
    std::string scheme_a = "exp";
    std::string scheme_b = "df";
    bool nodes = false;
    std::string pair;  // "A,B"
};

inline NodeId resolve_node(const LabeledGraph& lg, const std::string& name) {
    if (!lg.labels.empty()) {
        if (auto id = lg.labels.find(name)) {
            return *id;
        }
        throw DomainError("unknown node '" + name + "'");
    }
    const auto id = to_uint(name, "node id");
    if (id >= lg.graph.node_count()) {
        throw DomainError("node id out of range: " + name);
    }
    return static_cast<NodeId>(id);
}

inline const char* order_symbol(const SignedLogValue& a, const SignedLogValue& b) {
    const auto c = a <=> b;
    return c < 0 ? "<" : (c > 0 ? ">" : "=");
}

inline int cmd_compare(const CompareConfig& cfg, std::ostream& out, std::ostream& err) {
    const CommonConfig& common = cfg.common;
    const auto lg = load_input(common.input);
    warn_if_disconnected(lg.graph, err);
    const WeightScheme sa = parse_scheme(cfg.scheme_a);
    const WeightScheme sb = parse_scheme(cfg.scheme_b);
    const auto eig = eigendecompose(lg.graph);
    const auto ca = subgraph_centrality(eig, sa, common.beta, Domain::log, common.form());
    const auto cb = subgraph_centrality(eig, sb, common.beta, Domain::log, common.form());
    const auto ka = rank_keys(ca.values);
    const auto kb = rank_keys(cb.values);

    if (cfg.nodes) {
        const auto ra = average_ranks(ka);
        const auto rb = average_ranks(kb);
        if (common.output == OutputFormat::csv) {
            CsvWriter w(out);
            w.row({"node", "value_a", "log_value_a", "rank_a", "value_b", "log_value_b", "rank_b"});
            for (NodeId i = 0; i < ca.size(); ++i) {
                w.row({lg.labels.label(i), linear_field(ca.values[i]), log_field(ca.values[i]), fmt(ra[i]),
                       linear_field(cb.values[i]), log_field(cb.values[i]), fmt(rb[i])});
            }
        } else {
            for (NodeId i = 0; i < ca.size(); ++i) {
                json row{{"node", lg.labels.label(i)},
                         {"value_a", linear_json(ca.values[i])},
                         {"log_value_a", log_json(ca.values[i])},
                         {"rank_a", ra[i]},
                         {"value_b", linear_json(cb.values[i])},
                         {"log_value_b", log_json(cb.values[i])},
                         {"rank_b", rb[i]}};
                out << row.dump() << '\n';
            }
        }
        return kOk;
    }

    std::optional<double> rho;
    std::optional<double> r;
    std::string status = "ok";
    try {
        rho = spearman(ka, kb);
    } catch (const DegenerateError& e) {
        status = std::string("degenerate: ") + e.what();
    } catch (const DomainError& e) {
        status = std::string("degenerate: ") + e.what();
    }
    bool all_finite = true;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        all_finite = all_finite && ca.values[i].is_finite_as_double() && cb.values[i].is_finite_as_double();
    }
    if (rho && all_finite) {
        try {
            r = pearson(ca.linear(), cb.linear());
        } catch (const DegenerateError&) {
        }
    }

    std::string pair_name;
    std::string order_a;
    std::string order_b;
    if (!cfg.pair.empty()) {
        const auto names = split(cfg.pair, ',');
        if (names.size() != 2) {
            throw DomainError("--pair expects two nodes 'A,B'");
        }
        const NodeId p = resolve_node(lg, names[0]);
        const NodeId q = resolve_node(lg, names[1]);
        pair_name = names[0] + "," + names[1];
        order_a = order_symbol(ca.values[p], ca.values[q]);
        order_b = order_symbol(cb.values[p], cb.values[q]);
    }
    const bool reversed = !order_a.empty() && order_a != "=" && order_b != "=" && order_a != order_b;

    if (common.output == OutputFormat::csv) {
        CsvWriter w(out);
        std::vector<std::string> head{"scheme_a", "scheme_b", "beta", "n", "spearman", "pearson", "status"};
        std::vector<std::string> row{to_string(sa),
                                     to_string(sb),
                                     fmt(common.beta),
                                     std::to_string(lg.graph.node_count()),
                                     rho ? fmt(*rho) : std::string(),
                                     r ? fmt(*r) : std::string(),
                                     status};
        if (!pair_name.empty()) {
            head.insert(head.end(), {"pair", "order_a", "order_b", "reversed"});
            row.insert(row.end(), {pair_name, order_a, order_b, reversed ? "1" : "0"});
        }
        w.row(head);
        w.row(row);
    } else {
        json obj{{"scheme_a", to_string(sa)},
                 {"scheme_b", to_string(sb)},
                 {"beta", common.beta},
                 {"n", lg.graph.node_count()},
                 {"spearman", rho ? json(*rho) : json(nullptr)},
                 {"pearson", r ? json(*r) : json(nullptr)},
                 {"status", status}};
        if (!pair_name.empty()) {
            obj["pair"] = pair_name;
            obj["order_a"] = order_a;
            obj["order_b"] = order_b;
            obj["reversed"] = reversed;
        }
        out << obj.dump() << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// profile
// ---------------------------------------------------------------------------

struct ProfileConfig {
    CommonConfig common;
    long k_max = 300;
    std::vector<std::string> schemes{"df", "exp", "katz:0.1"};
};

inline int cmd_profile(const ProfileConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto lg = load_input(cfg.common.input);
    warn_if_disconnected(lg.graph, err);
    std::vector<WeightScheme> schemes;
    for (const auto& s : cfg.schemes) {
        schemes.push_back(parse_scheme(s));
    }
    const auto eig = eigendecompose(lg.graph);
    CsvWriter w(out);
    if (cfg.common.output == OutputFormat::csv) {
        w.row({"k", "scheme", "sign", "log10_value", "value"});
    }
    for (const auto& scheme : schemes) {
        const std::string name = to_string(scheme);
        for (const auto& pt : walk_decay_profile(eig, scheme, cfg.k_max)) {
            const std::string log10 = pt.value.is_zero() ? std::string("-inf") : fmt(pt.value.log10_magnitude());
            if (cfg.common.output == OutputFormat::csv) {
                w.row({std::to_string(pt.k), name, std::to_string(pt.value.sign()), log10, linear_field(pt.value)});
            } else {
                json row{{"k", pt.k},
                         {"scheme", name},
                         {"sign", pt.value.sign()},
                         {"log10_value", pt.value.is_zero() ? json(nullptr) : json(pt.value.log10_magnitude())},
                         {"value", linear_json(pt.value)}};
                out << row.dump() << '\n';
            }
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

struct EnumerateConfig {
    std::size_t n = 0;
    std::string from;  // graph6 catalog
    std::string emit = "stats";
    double beta = 1.0;
    bool exact_erf = false;
    OutputFormat output = OutputFormat::csv;
};

inline int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.emit != "stats" && cfg.emit != "graph6") {
        throw DomainError("--emit must be stats or graph6");
    }
    if (cfg.from.empty() && cfg.n == 0) {
        throw DomainError("enumerate needs -n or --from");
    }
    const DfForm form = cfg.exact_erf ? DfForm::erf : DfForm::tanh;
    CsvWriter w(out);
    const bool stats = cfg.emit == "stats";
    if (stats && cfg.output == OutputFormat::csv) {
        w.row({"graph6", "n", "m", "ee", "log_ee", "gamma", "log_gamma", "spectral_radius", "triangles",
               "transitivity", "watts_strogatz"});
    }
    std::size_t skipped = 0;
    auto emit = [&](const Graph& g) {
        if (!cfg.from.empty() && cfg.n != 0 && g.node_count() != cfg.n) {
            ++skipped;
            return;
        }
        const std::string code = encode_graph6(g);
        if (!stats) {
            if (cfg.output == OutputFormat::csv) {
                out << code << '\n';
            } else {
                out << json{{"graph6", code}}.dump() << '\n';
            }
            return;
        }
        const auto eig = eigendecompose(g);
        const auto ee = estrada_index(eig, Factorial{}, cfg.beta);
        const auto gamma = estrada_index(eig, DoubleFactorial{}, cfg.beta, form);
        const auto cl = clustering(g);
        if (cfg.output == OutputFormat::csv) {
            w.row({code, std::to_string(g.node_count()), std::to_string(g.edge_count()), linear_field(ee),
                   log_field(ee), linear_field(gamma), log_field(gamma), fmt(eig.spectral_radius()),
                   std::to_string(cl.triangle_count), fmt(cl.transitivity), fmt(cl.watts_strogatz_avg)});
        } else {
            json row{{"graph6", code},
                     {"n", g.node_count()},
                     {"m", g.edge_count()},
                     {"ee", linear_json(ee)},
                     {"log_ee", log_json(ee)},
                     {"gamma", linear_json(gamma)},
                     {"log_gamma", log_json(gamma)},
                     {"spectral_radius", eig.spectral_radius()},
                     {"triangles", cl.triangle_count},
                     {"transitivity", cl.transitivity},
                     {"watts_strogatz", cl.watts_strogatz_avg}};
            out << row.dump() << '\n';
        }
    };

    std::size_t count = 0;
    if (!cfg.from.empty()) {
        std::ifstream in;
        std::istream* src = &std::cin;
        if (cfg.from != "-") {
            in.open(cfg.from);
            if (!in) {
                throw DomainError("cannot open catalog '" + cfg.from + "'");
            }
            src = &in;
        }
        count = ingest_graph6_stream(*src, emit) - skipped;
    } else {
        count = enumerate_connected(cfg.n, emit);
    }
    err << "graphs: " << count;
    if (skipped > 0) {
        err << " (skipped " << skipped << " with n != " << cfg.n << ")";
    }
    err << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// scan-beta
// ---------------------------------------------------------------------------

/// "start:stop:step", inclusive of stop up to rounding.
inline std::vector<double> parse_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() == 1) {
        return {to_double(parts[0], "beta")};
    }
    if (parts.size() != 3) {
        throw DomainError("grid must be 'start:stop:step' or a single beta");
    }
    const double start = to_double(parts[0], "grid start");
    const double stop = to_double(parts[1], "grid stop");
    const double step = to_double(parts[2], "grid step");
    if (!(step > 0.0) || stop < start) {
        throw DomainError("grid needs step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) {
        throw DomainError("grid has more than 10^6 points");
    }
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Snap to 12 decimals so 0.07 prints as 0.07, not 0.07000000000000001.
        grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return grid;
}

struct ScanConfig {
    CommonConfig common;
    std::string labels;
    double fraction = 0.1;
    std::string grid = "0:1:0.01";
};

inline int cmd_scan_beta(const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto lg = load_input(cfg.common.input);
    warn_if_disconnected(lg.graph, err);
    if (cfg.labels.empty()) {
        throw DomainError("scan-beta needs --labels");
    }
    const auto labels = load_labels(cfg.labels, lg, cfg.common.input.one_indexed);
    const WeightScheme scheme = parse_scheme(cfg.common.scheme);
    const auto grid = parse_grid(cfg.grid);
    const auto res =
        beta_scan(lg.graph, scheme, grid, top_fraction_metric(labels, cfg.fraction), cfg.common.form());
    std::vector<bool> is_max(grid.size(), false);
    for (std::size_t i : res.argmax) {
        is_max[i] = true;
    }
    if (cfg.common.output == OutputFormat::csv) {
        CsvWriter w(out);
        w.row({"beta", "hits", "is_argmax"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            w.row({fmt(grid[i]), std::isnan(res.values[i]) ? std::string() : fmt(res.values[i]),
                   is_max[i] ? "1" : "0"});
        }
    } else {
        json obj{{"scheme", to_string(scheme)},
                 {"fraction", cfg.fraction},
                 {"grid", grid},
                 {"hits", json::array()},
                 {"max", number_json(res.max_value)},
                 {"argmax_beta", res.argmax_betas()}};
        for (double v : res.values) {
            obj["hits"].push_back(number_json(v));
        }
        out << obj.dump() << '\n';
    }
    if (res.argmax.empty()) {
        err << "scan: metric undefined at every beta\n";
    } else {
        const auto betas = res.argmax_betas();
        err << "scan: max " << fmt(res.max_value) << " hits at " << betas.size() << " beta value(s) in ["
            << fmt(betas.front()) << ", " << fmt(betas.back()) << "]\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// roc
// ---------------------------------------------------------------------------

struct RocConfig {
    CommonConfig common;
    std::string labels;
    bool summary = false;
};

inline int cmd_roc(const RocConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto lg = load_input(cfg.common.input);
    warn_if_disconnected(lg.graph, err);
    if (cfg.labels.empty()) {
        throw DomainError("roc needs --labels");
    }
    const auto labels = load_labels(cfg.labels, lg, cfg.common.input.one_indexed);
    const WeightScheme scheme = parse_scheme(cfg.common.scheme);
    const auto eig = eigendecompose(lg.graph);
    const auto c = subgraph_centrality(eig, scheme, cfg.common.beta, Domain::log, cfg.common.form());
    const auto keys = rank_keys(c.values);
    std::map<double, double> key_to_log;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        key_to_log[keys[i]] = c.values[i].log_magnitude();
    }
    const auto roc = roc_auc(keys, labels);
    const std::size_t pos = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
    const std::size_t neg = labels.size() - pos;

    if (cfg.common.output == OutputFormat::csv) {
        CsvWriter w(out);
        if (cfg.summary) {
            w.row({"scheme", "beta", "auc", "positives", "negatives"});
            w.row({to_string(scheme), fmt(cfg.common.beta), fmt(roc.auc), std::to_string(pos), std::to_string(neg)});
        } else {
            w.row({"fpr", "tpr", "threshold_log_value"});
            for (const auto& pt : roc.curve) {
                w.row({fmt(pt.fpr), fmt(pt.tpr), std::isinf(pt.threshold) ? "inf" : fmt(key_to_log[pt.threshold])});
            }
        }
    } else {
        json obj{{"scheme", to_string(scheme)},
                 {"beta", cfg.common.beta},
                 {"auc", roc.auc},
                 {"positives", pos},
                 {"negatives", neg}};
        if (!cfg.summary) {
            obj["curve"] = json::array();
            for (const auto& pt : roc.curve) {
                obj["curve"].push_back({{"fpr", pt.fpr},
                                        {"tpr", pt.tpr},
                                        {"threshold_log_value",
                                         std::isinf(pt.threshold) ? json(nullptr) : json(key_to_log[pt.threshold])}});
            }
        }
        out << obj.dump() << '\n';
    }
    err << "auc: " << fmt(roc.auc) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateConfig {
    std::string kind;
    std::string format = "edge-list";
};

inline int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream&) {
    save_graph(out, generate_graph(cfg.kind), parse_format(cfg.format, ""));
    return kOk;
}

/// Maps library exceptions to exit codes, printing the message to err.
template <class F>
int run_guarded(F&& body, std::ostream& err) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return kParseError;
    } catch (const GraphError& e) {
        err << "error: graph: " << e.what() << '\n';
        return kParseError;
    } catch (const OverflowError& e) {
        err << "error: overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const DegenerateError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace dfwalk::cli
