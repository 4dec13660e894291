#include "conncut/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "conncut/error.hpp"

namespace conncut {

namespace {

struct Token {
    std::string text;
};

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;  // trailing comment
        out.push_back(tok);
    }
    return out;
}

uint64_t parse_u64(const std::string& s, int line, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(line, std::string("malformed ") + what + " '" + s + "'");
    uint64_t v = 0;
    for (char c : s) {
        if (v > (std::numeric_limits<uint64_t>::max() - uint64_t(c - '0')) / 10)
            throw ParseError(line, std::string(what) + " out of range: " + s);
        v = v * 10 + uint64_t(c - '0');
    }
    return v;
}

// Decimal or "inf", scaled by precision, exactness enforced.
Weight parse_weight(const std::string& s, uint64_t precision, int line) {
    if (s == "inf") return Weight::infinite();
    if (!s.empty() && s[0] == '-') throw ParseError(line, "negative weight '" + s + "'");
    auto dot = s.find('.');
    std::string ipart = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fpart = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) throw ParseError(line, "malformed weight '" + s + "'");
    uint64_t iv = ipart.empty() ? 0 : parse_u64(ipart, line, "weight");
    if (iv > Weight::kMaxFiniteSum / std::max<uint64_t>(precision, 1))
        throw ParseError(line, "weight out of range: " + s);
    uint64_t scaled = iv * precision;
    if (!fpart.empty()) {
        if (!std::all_of(fpart.begin(), fpart.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(line, "malformed weight '" + s + "'");
        uint64_t pow10 = 1;
        for (size_t i = 0; i < fpart.size(); ++i) {
            if (pow10 > precision) break;
            pow10 *= 10;
        }
        if (pow10 > precision || precision % pow10 != 0)
            throw ParseError(line, "weight '" + s + "' exceeds declared precision");
        uint64_t fv = parse_u64(fpart, line, "weight");
        scaled += fv * (precision / pow10);
    }
    return Weight(scaled);
}

struct RawEdge {
    uint64_t u, v;
    Weight w;
    int line;
};
struct RawVertexWeight {
    uint64_t u;
    Weight w;
    int line;
};
struct RawHyperedge {
    std::vector<uint64_t> members;
    Weight w;
    int line;
    int ordinal;
};

}  // namespace

ParseResult parse_instance(const std::string& text, ParseKind kind, uint64_t precision) {
    if (precision == 0) throw InvalidArgument("precision must be positive");

    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    bool is_hyper = false;
    uint64_t n_decl = 0, m_decl = 0;
    int header_line = 0;

    std::vector<RawEdge> raw_edges;
    std::vector<RawVertexWeight> raw_vweights;
    std::vector<std::pair<uint64_t, int>> raw_terminals;  // label, line
    std::vector<RawHyperedge> raw_hedges;

    std::set<uint64_t> labels_seen;
    auto see_label = [&](uint64_t lab, int ln) {
        if (!labels_seen.count(lab)) {
            if (labels_seen.size() >= n_decl)
                throw ParseError(ln, "out-of-range vertex id " + std::to_string(lab) +
                                         " (instance declares " + std::to_string(n_decl) + " vertices)");
            labels_seen.insert(lab);
        }
    };

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = split_line(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (!have_header) {
            if (head != "p" && head != "ph") throw ParseError(lineno, "expected header line 'p <n> <m>' or 'ph <n> <m>'");
            if (toks.size() != 3) throw ParseError(lineno, "malformed header");
            is_hyper = (head == "ph");
            n_decl = parse_u64(toks[1], lineno, "vertex count");
            m_decl = parse_u64(toks[2], lineno, "edge count");
            if (n_decl == 0) throw ParseError(lineno, "vertex count must be positive");
            if (n_decl > 10'000'000) throw ParseError(lineno, "vertex count out of range");
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (head == "p" || head == "ph") throw ParseError(lineno, "duplicate header");
        if (head == "e") {
            if (is_hyper) throw ParseError(lineno, "'e' line in hypergraph file");
            if (toks.size() != 4) throw ParseError(lineno, "malformed edge line");
            uint64_t u = parse_u64(toks[1], lineno, "vertex id");
            uint64_t v = parse_u64(toks[2], lineno, "vertex id");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + toks[1]);
            see_label(u, lineno);
            see_label(v, lineno);
            raw_edges.push_back({u, v, parse_weight(toks[3], precision, lineno), lineno});
        } else if (head == "v") {
            if (is_hyper) throw ParseError(lineno, "'v' line in hypergraph file");
            if (toks.size() != 3) throw ParseError(lineno, "malformed vertex-weight line");
            uint64_t u = parse_u64(toks[1], lineno, "vertex id");
            see_label(u, lineno);
            raw_vweights.push_back({u, parse_weight(toks[2], precision, lineno), lineno});
        } else if (head == "t") {
            if (is_hyper) throw ParseError(lineno, "'t' line in hypergraph file");
            if (toks.size() != 2) throw ParseError(lineno, "malformed terminal line");
            uint64_t u = parse_u64(toks[1], lineno, "vertex id");
            see_label(u, lineno);
            raw_terminals.push_back({u, lineno});
        } else if (head == "h") {
            if (!is_hyper) throw ParseError(lineno, "'h' line in graph file");
            if (toks.size() < 3) throw ParseError(lineno, "malformed hyperedge line");
            RawHyperedge he;
            he.w = parse_weight(toks[1], precision, lineno);
            for (size_t i = 2; i < toks.size(); ++i) {
                uint64_t u = parse_u64(toks[i], lineno, "vertex id");
                see_label(u, lineno);
                he.members.push_back(u);
            }
            he.line = lineno;
            he.ordinal = static_cast<int>(raw_hedges.size()) + 1;
            raw_hedges.push_back(std::move(he));
        } else {
            throw ParseError(lineno, "unrecognized line type '" + head + "'");
        }
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "empty input: missing header");

    uint64_t m_seen = is_hyper ? raw_hedges.size() : raw_edges.size();
    if (m_seen != m_decl)
        throw ParseError(header_line, "header declares " + std::to_string(m_decl) + " edges but file has " +
                                          std::to_string(m_seen));
    if (labels_seen.size() != n_decl)
        throw ParseError(header_line, "header declares " + std::to_string(n_decl) + " vertices but only " +
                                          std::to_string(labels_seen.size()) +
                                          " distinct ids appear (mention isolated vertices via 'v' or 't' lines)");

    std::vector<uint64_t> labels(labels_seen.begin(), labels_seen.end());
    auto id_of = [&](uint64_t lab) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), lab) - labels.begin());
    };
    int n = static_cast<int>(n_decl);

    // Kind resolution / validation.
    ParseKind resolved = kind;
    if (kind == ParseKind::auto_detect)
        resolved = is_hyper ? ParseKind::hypergraph
                            : (raw_terminals.empty() ? ParseKind::graph : ParseKind::element);
    if (resolved == ParseKind::hypergraph && !is_hyper)
        throw ParseError(header_line, "expected a hypergraph ('ph' header)");
    if (resolved != ParseKind::hypergraph && is_hyper)
        throw ParseError(header_line, "expected a graph ('p' header)");
    if (resolved == ParseKind::graph && !raw_terminals.empty())
        throw ParseError(raw_terminals[0].second, "'t' line not allowed in a plain graph instance");
    if (resolved == ParseKind::element && raw_terminals.empty())
        throw ParseError(header_line, "element instance requires at least one 't' line");

    LoadReport report;
    Weight total;
    auto add_total = [&](Weight w, int ln) {
        if (w.is_infinite()) return;
        total += w;
        if (total >= Weight(Weight::kMaxFiniteSum))
            throw ParseError(ln, "weight-sum overflow: total finite weight too large");
    };

    if (resolved == ParseKind::hypergraph) {
        Hypergraph h;
        h.n = n;
        h.labels = labels;
        h.precision = precision;
        for (auto& he : raw_hedges) {
            std::vector<int> mem;
            mem.reserve(he.members.size());
            for (uint64_t lab : he.members) mem.push_back(id_of(lab));
            std::sort(mem.begin(), mem.end());
            mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
            if (mem.size() < 2) {
                report.dropped_singleton_hyperedges.push_back(he.ordinal);
                continue;
            }
            add_total(he.w, he.line);
            h.hyperedges.push_back({std::move(mem), he.w});
        }
        return {Instance(std::move(h)), std::move(report)};
    }

    WeightedGraph g;
    g.n = n;
    g.labels = labels;
    g.precision = precision;
    g.vertex_weights.assign(n, Weight(precision));  // default unit weight, scaled

    std::map<std::pair<int, int>, Weight> merged;
    for (const RawEdge& re : raw_edges) {
        int u = id_of(re.u), v = id_of(re.v);
        if (u > v) std::swap(u, v);
        auto [it, fresh] = merged.insert({{u, v}, re.w});
        if (!fresh) {
            it->second += re.w;
            ++report.merged_parallel_edges;
        }
        add_total(re.w, re.line);
    }
    for (auto& [uv, w] : merged) {
        if (w.is_zero()) {
            report.dropped_zero_edges.push_back({labels[uv.first], labels[uv.second]});
            continue;
        }
        g.edges.push_back({uv.first, uv.second, w});
    }

    std::vector<char> weight_set(n, 0);
    for (const RawVertexWeight& rv : raw_vweights) {
        int u = id_of(rv.u);
        if (weight_set[u]) throw ParseError(rv.line, "duplicate vertex weight for " + std::to_string(rv.u));
        weight_set[u] = 1;
        g.vertex_weights[u] = rv.w;
        add_total(rv.w, rv.line);
    }

    if (resolved == ParseKind::graph) return {Instance(std::move(g)), std::move(report)};

    ElementInstance inst;
    std::vector<int> ts;
    for (auto [lab, ln] : raw_terminals) ts.push_back(id_of(lab));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (const RawVertexWeight& rv : raw_vweights) {
        int u = id_of(rv.u);
        if (std::binary_search(ts.begin(), ts.end(), u))
            throw ParseError(rv.line, "terminal " + std::to_string(rv.u) + " cannot carry an element weight");
    }
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(ts.begin(), ts.end(), v) && g.vertex_weights[v].is_zero())
            report.zero_weight_nonterminals.push_back(labels[v]);
    inst.graph = std::move(g);
    inst.terminals = std::move(ts);
    return {Instance(std::move(inst)), std::move(report)};
}

std::string weight_to_decimal(Weight w, uint64_t precision) {
    if (w.is_infinite()) return "inf";
    uint64_t ip = w.value() / precision;
    uint64_t fp = w.value() % precision;
    if (fp == 0) return std::to_string(ip);
    // Count decimal digits of the precision (a power of ten for exact form).
    std::string frac;
    uint64_t p = precision;
    while (p > 1) {
        frac.push_back(char('0' + fp % 10));
        fp /= 10;
        p /= 10;
    }
    std::reverse(frac.begin(), frac.end());
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return std::to_string(ip) + "." + frac;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    if (const Hypergraph* h = as_hypergraph(inst)) {
        std::vector<char> mentioned(h->n, 0);
        for (const Hyperedge& e : h->hyperedges)
            for (int v : e.members) mentioned[v] = 1;
        int extra = 0;
        for (char c : mentioned)
            if (!c) ++extra;
        os << "ph " << h->n << " " << (h->m() + extra) << "\n";
        // Isolated vertices are declared as zero-weight singletons, which
        // load drops again; the parsed instance round-trips.
        for (int v = 0; v < h->n; ++v)
            if (!mentioned[v]) os << "h 0 " << h->label(v) << "\n";
        for (const Hyperedge& e : h->hyperedges) {
            os << "h " << weight_to_decimal(e.w, h->precision);
            for (int v : e.members) os << " " << h->label(v);
            os << "\n";
        }
        return os.str();
    }
    const WeightedGraph* g = as_graph(inst);
    const ElementInstance* ei = as_element(inst);
    if (ei) g = &ei->graph;
    os << "p " << g->n << " " << g->m() << "\n";
    std::vector<char> mentioned(g->n, 0);
    for (const Edge& e : g->edges) mentioned[e.u] = mentioned[e.v] = 1;
    if (ei) {
        for (int t : ei->terminals) {
            os << "t " << g->label(t) << "\n";
            mentioned[t] = 1;
        }
    }
    Weight unit(g->precision);
    for (int v = 0; v < g->n; ++v) {
        bool terminal = ei && ei->is_terminal(v);
        bool nondefault = !terminal && g->vertex_weights[v] != unit;
        if (nondefault || !mentioned[v])
            os << "v " << g->label(v) << " "
               << weight_to_decimal(terminal ? unit : g->vertex_weights[v], g->precision) << "\n";
    }
    for (const Edge& e : g->edges)
        os << "e " << g->label(e.u) << " " << g->label(e.v) << " " << weight_to_decimal(e.w, g->precision) << "\n";
    return os.str();
}

}  // namespace conncut
