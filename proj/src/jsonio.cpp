#include "conncut/jsonio.hpp"

#include <algorithm>
#include <cmath>

#include "conncut/error.hpp"
#include "json.hpp"

namespace conncut {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json value_field(Weight w, uint64_t precision) {
    if (w.is_infinite()) return "inf";
    if (w.value() % precision == 0) return w.value() / precision;
    return static_cast<double>(w.value()) / static_cast<double>(precision);
}

ordered_json side_field(const Instance& inst, const SetPair& pair) {
    int n = instance_vertex_count(inst);
    ordered_json side = ordered_json::array();
    for (int x : pair.first)
        if (x < n) side.push_back(instance_label(inst, x));
    return side;
}

ordered_json removed_field(const Instance& inst, const std::vector<ObjectRef>& removed) {
    ordered_json out = ordered_json::array();
    const Hypergraph* h = as_hypergraph(inst);
    for (const ObjectRef& ref : removed) {
        switch (ref.kind) {
            case ObjectRef::vertex:
                out.push_back(std::to_string(instance_label(inst, ref.a)));
                break;
            case ObjectRef::edge: {
                ordered_json pairj = ordered_json::array();
                pairj.push_back(std::to_string(instance_label(inst, ref.a)));
                pairj.push_back(std::to_string(instance_label(inst, ref.b)));
                out.push_back(std::move(pairj));
                break;
            }
            case ObjectRef::hyperedge: {
                ordered_json members = ordered_json::array();
                for (int v : h->hyperedges[ref.a].members)
                    members.push_back(std::to_string(h->label(v)));
                out.push_back(std::move(members));
                break;
            }
        }
    }
    return out;
}

ordered_json terminals_field(const Instance& inst, const std::vector<int>& terminals) {
    ordered_json out = ordered_json::array();
    std::vector<int> sorted(terminals);
    std::sort(sorted.begin(), sorted.end());
    for (int t : sorted) out.push_back(instance_label(inst, t));
    return out;
}

}  // namespace

std::string certificate_json(const Instance& inst, const CutCertificate& cert,
                             const std::string& problem, const std::vector<int>& terminals,
                             std::optional<bool> oracle_match, uint64_t elapsed_ms) {
    ordered_json j;
    j["problem"] = problem;
    j["value"] = value_field(cert.value, instance_precision(inst));
    j["side"] = side_field(inst, cert.side_pair);
    j["removed"] = removed_field(inst, cert.removed);
    j["terminals"] = terminals_field(inst, terminals);
    j["seed"] = cert.meta.seed;
    j["trials"] = cert.meta.trials;
    j["oracle_calls"] = cert.meta.oracle_calls;
    if (oracle_match) j["oracle_match"] = *oracle_match;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string no_cut_json(const Instance& inst, const std::string& problem, uint64_t seed,
                        std::optional<bool> oracle_match, uint64_t elapsed_ms) {
    (void)inst;
    ordered_json j;
    j["problem"] = problem;
    j["value"] = "none";
    j["side"] = ordered_json::array();
    j["removed"] = ordered_json::array();
    j["terminals"] = ordered_json::array();
    j["seed"] = seed;
    j["trials"] = 0;
    j["oracle_calls"] = 0;
    if (oracle_match) j["oracle_match"] = *oracle_match;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string isolate_json(const Instance& inst, const std::map<int, CutCertificate>& cuts,
                         const std::vector<int>& terminals, uint64_t seed, long oracle_calls,
                         std::optional<bool> oracle_match, uint64_t elapsed_ms) {
    ordered_json j;
    j["problem"] = "isolate";
    j["terminals"] = terminals_field(inst, terminals);
    j["seed"] = seed;
    j["oracle_calls"] = oracle_calls;
    ordered_json arr = ordered_json::array();
    for (const auto& [r, cert] : cuts) {
        ordered_json cj;
        cj["terminal"] = instance_label(inst, r);
        cj["value"] = value_field(cert.value, instance_precision(inst));
        cj["side"] = side_field(inst, cert.side_pair);
        cj["removed"] = removed_field(inst, cert.removed);
        arr.push_back(std::move(cj));
    }
    j["cuts"] = std::move(arr);
    if (oracle_match) j["oracle_match"] = *oracle_match;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string verify_json(bool valid, const std::string& diagnostic, uint64_t elapsed_ms) {
    ordered_json j;
    j["problem"] = "verify";
    j["valid"] = valid;
    j["diagnostic"] = diagnostic;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

namespace {

Weight weight_from_value_field(const ordered_json& v, uint64_t precision) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return Weight::infinite();
        throw InvalidArgument("certificate value must be a number or \"inf\"");
    }
    if (v.is_number_unsigned() || v.is_number_integer()) {
        uint64_t raw = v.get<uint64_t>();
        return Weight(raw * precision);
    }
    if (v.is_number_float()) {
        double scaled = v.get<double>() * static_cast<double>(precision);
        double rounded = std::llround(scaled);
        if (std::abs(scaled - rounded) > 1e-6)
            throw InvalidArgument("certificate value does not fit the declared precision");
        return Weight(static_cast<uint64_t>(rounded));
    }
    throw InvalidArgument("certificate value must be a number or \"inf\"");
}

int label_to_vertex(const Instance& inst, uint64_t lab) {
    int v = vertex_of_label(inst, lab);
    if (v < 0) throw InvalidArgument("certificate mentions unknown vertex " + std::to_string(lab));
    return v;
}

uint64_t parse_label_string(const ordered_json& s) {
    if (!s.is_string()) throw InvalidArgument("removed entry labels must be strings");
    return std::stoull(s.get<std::string>());
}

}  // namespace

std::optional<CutCertificate> certificate_from_json(const Instance& inst,
                                                    const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InvalidArgument("certificate is not valid JSON");
    if (!j.contains("problem") || !j.contains("value"))
        throw InvalidArgument("certificate needs problem and value fields");
    std::string problem = j["problem"].get<std::string>();
    if (j["value"].is_string() && j["value"].get<std::string>() == "none") return std::nullopt;

    CutCertificate cert;
    if (problem == "edge-cut")
        cert.problem = Problem::edge_cut;
    else if (problem == "hyper-cut")
        cert.problem = Problem::hyper_cut;
    else if (problem == "elem-cut")
        cert.problem = Problem::elem_cut;
    else if (problem == "vertex-cut")
        cert.problem = Problem::vertex_cut;
    else
        throw InvalidArgument("unknown certificate problem '" + problem + "'");

    cert.value = weight_from_value_field(j["value"], instance_precision(inst));
    if (j.contains("seed")) cert.meta.seed = j["seed"].get<uint64_t>();
    if (j.contains("trials")) cert.meta.trials = j["trials"].get<long>();
    if (j.contains("oracle_calls")) cert.meta.oracle_calls = j["oracle_calls"].get<long>();

    std::vector<int> side;
    for (const auto& lab : j.value("side", ordered_json::array()))
        side.push_back(label_to_vertex(inst, lab.get<uint64_t>()));
    std::sort(side.begin(), side.end());

    // Removed objects.
    const Hypergraph* h = as_hypergraph(inst);
    std::vector<char> rem_v, rem_e;
    int n = instance_vertex_count(inst);
    const WeightedGraph* g = as_graph(inst);
    const ElementInstance* ei = as_element(inst);
    if (ei) g = &ei->graph;
    rem_v.assign(n, 0);
    if (g) rem_e.assign(g->m(), 0);
    std::map<std::pair<int, int>, int> edge_index;
    if (g)
        for (int jj = 0; jj < g->m(); ++jj) edge_index[{g->edges[jj].u, g->edges[jj].v}] = jj;
    std::map<std::vector<int>, std::vector<int>> hyper_index;  // members -> indices
    if (h)
        for (int jj = 0; jj < h->m(); ++jj) hyper_index[h->hyperedges[jj].members].push_back(jj);
    std::map<std::vector<int>, size_t> hyper_used;

    for (const auto& entry : j.value("removed", ordered_json::array())) {
        if (entry.is_string()) {
            int v = label_to_vertex(inst, parse_label_string(entry));
            cert.removed.push_back({ObjectRef::vertex, v, 0});
            rem_v[v] = 1;
        } else if (entry.is_array() && h != nullptr) {
            std::vector<int> members;
            for (const auto& lab : entry) members.push_back(label_to_vertex(inst, parse_label_string(lab)));
            std::sort(members.begin(), members.end());
            auto it = hyper_index.find(members);
            if (it == hyper_index.end()) throw InvalidArgument("removed hyperedge does not exist");
            size_t& used = hyper_used[members];
            if (used >= it->second.size()) throw InvalidArgument("removed hyperedge listed too often");
            cert.removed.push_back({ObjectRef::hyperedge, it->second[used++], 0});
        } else if (entry.is_array() && entry.size() == 2) {
            int u = label_to_vertex(inst, parse_label_string(entry[0]));
            int v = label_to_vertex(inst, parse_label_string(entry[1]));
            if (u > v) std::swap(u, v);
            auto it = edge_index.find({u, v});
            if (it == edge_index.end()) throw InvalidArgument("removed edge does not exist");
            cert.removed.push_back({ObjectRef::edge, u, v});
            rem_e[it->second] = 1;
        } else {
            throw InvalidArgument("unrecognized removed entry");
        }
    }
    std::sort(cert.removed.begin(), cert.removed.end());

    // Canonical second component per problem family.
    if (cert.problem == Problem::edge_cut || cert.problem == Problem::hyper_cut) {
        std::vector<int> second;
        std::vector<char> in(n, 0);
        for (int v : side) in[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!in[v]) second.push_back(v);
        cert.side_pair = SetPair(side, second, n);
    } else if (cert.problem == Problem::vertex_cut) {
        std::vector<int> second;
        std::vector<char> in(n, 0);
        for (int v : side) in[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!in[v] && !rem_v[v]) second.push_back(v);
        cert.side_pair = SetPair(side, second, n);
    } else {
        // Element certs: derive edge memberships from the vertex side.
        std::vector<char> in(n, 0);
        for (int v : side) in[v] = 1;
        std::vector<int> first(side), second;
        for (int v = 0; v < n; ++v)
            if (!in[v] && !rem_v[v]) second.push_back(v);
        for (int jj = 0; jj < g->m(); ++jj) {
            if (rem_e[jj]) continue;
            if (in[g->edges[jj].u] || in[g->edges[jj].v])
                first.push_back(n + jj);
            else
                second.push_back(n + jj);
        }
        cert.side_pair = SetPair(first, second, n + g->m());
    }
    return cert;
}

}  // namespace conncut
