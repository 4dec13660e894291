#include "conncut.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <string>

#include "conncut/edge_conn.hpp"
#include "conncut/elem_conn.hpp"
#include "conncut/error.hpp"
#include "conncut/hyper_conn.hpp"
#include "conncut/jsonio.hpp"
#include "conncut/oracles.hpp"
#include "conncut/parse.hpp"
#include "conncut/verify.hpp"
#include "conncut/vertex_conn.hpp"

using namespace conncut;

struct conncut_instance {
    Instance inst;
    LoadReport report;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** errmsg, const std::string& msg) {
    if (errmsg) *errmsg = dup_string(msg);
}

uint64_t now_ms_since(const std::chrono::steady_clock::time_point& t0) {
    auto d = std::chrono::steady_clock::now() - t0;
    return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
}

// Default terminal set: all vertices for graphs and hypergraphs, all
// terminals for element instances.
std::vector<int> resolve_terminals(const Instance& inst, const conncut_options* opts,
                                   bool* explicit_set) {
    *explicit_set = opts && opts->terminals != nullptr;
    std::vector<int> R;
    if (*explicit_set) {
        for (size_t i = 0; i < opts->n_terminals; ++i) {
            int v = vertex_of_label(inst, opts->terminals[i]);
            if (v < 0)
                throw InvalidArgument("unknown terminal label " + std::to_string(opts->terminals[i]));
            R.push_back(v);
        }
        std::sort(R.begin(), R.end());
        R.erase(std::unique(R.begin(), R.end()), R.end());
        return R;
    }
    if (const ElementInstance* ei = as_element(inst)) return ei->terminals;
    int n = instance_vertex_count(inst);
    R.resize(n);
    for (int v = 0; v < n; ++v) R[v] = v;
    return R;
}

struct SolveOutput {
    std::string json;
    bool oracle_checked = false;
    bool oracle_match = true;
};

SolveOutput run_edge_cut(const Instance& inst, const std::vector<int>& R,
                         const conncut_options& o) {
    const WeightedGraph* g = as_graph(inst);
    if (!g) throw InvalidArgument("edge-cut needs a graph instance");
    if (R.size() < 2) throw InvalidArgument("edge-cut needs at least two terminals");
    auto t0 = std::chrono::steady_clock::now();
    SamplingParams params;
    params.seed = o.seed;
    params.delta = o.delta;
    CutCertificate cert = steiner_min_cut(*g, R, params, std::max(1, o.threads));
    SolveOutput out;
    std::optional<bool> match;
    if (o.oracle) {
        out.oracle_checked = true;
        out.oracle_match = brute_edge_cut(*g, R).value == cert.value;
        match = out.oracle_match;
    }
    out.json = certificate_json(inst, cert, "edge-cut", R, match, now_ms_since(t0));
    return out;
}

SolveOutput run_hyper_cut(const Instance& inst, const std::vector<int>& R,
                          const conncut_options& o) {
    const Hypergraph* h = as_hypergraph(inst);
    if (!h) throw InvalidArgument("hyper-cut needs a hypergraph instance");
    if (R.size() < 2) throw InvalidArgument("hyper-cut needs at least two terminals");
    auto t0 = std::chrono::steady_clock::now();
    SamplingParams params;
    params.seed = o.seed;
    params.delta = o.delta;
    CutCertificate cert = hyper_global_min_cut(*h, R, params, std::max(1, o.threads));
    SolveOutput out;
    std::optional<bool> match;
    if (o.oracle) {
        out.oracle_checked = true;
        out.oracle_match = brute_hyper_cut(*h, R).value == cert.value;
        match = out.oracle_match;
    }
    out.json = certificate_json(inst, cert, "hyper-cut", R, match, now_ms_since(t0));
    return out;
}

SolveOutput run_elem_cut(const Instance& inst, const std::vector<int>& R,
                         const conncut_options& o) {
    const ElementInstance* ei = as_element(inst);
    if (!ei) throw InvalidArgument("elem-cut needs an element instance (terminal lines)");
    if (R.size() < 2) throw InvalidArgument("elem-cut needs at least two terminals");
    auto t0 = std::chrono::steady_clock::now();
    SamplingParams params;
    params.seed = o.seed;
    params.delta = o.delta;
    CutCertificate cert = element_global_conn(*ei, R, params, std::max(1, o.threads));
    SolveOutput out;
    std::optional<bool> match;
    if (o.oracle) {
        out.oracle_checked = true;
        // lambda(R) is the pairwise minimum of lambda(s, t) over R.
        Weight best = Weight::infinite();
        for (size_t i = 0; i < R.size(); ++i)
            for (size_t j = i + 1; j < R.size(); ++j)
                best = std::min(best, brute_element_cut(*ei, {R[i]}, {R[j]}).value);
        out.oracle_match = best == cert.value;
        match = out.oracle_match;
    }
    out.json = certificate_json(inst, cert, "elem-cut", R, match, now_ms_since(t0));
    return out;
}

SolveOutput run_vertex_cut(const Instance& inst, const conncut_options& o, bool terminals_given) {
    const WeightedGraph* g = as_graph(inst);
    if (!g) throw InvalidArgument("vertex-cut needs a graph instance");
    if (terminals_given) throw InvalidArgument("vertex-cut computes a global cut; --terminals is not accepted");
    auto t0 = std::chrono::steady_clock::now();
    std::optional<CutCertificate> cert;
    if (o.sparsify) {
        cert = exact_vc_sparse(*g, o.seed, std::max(1, o.threads));
    } else if (o.exact) {
        cert = exact_vertex_connectivity(*g, o.seed, std::max(1, o.threads));
    } else {
        VCParams params;
        params.seed = o.seed;
        params.delta = o.delta;
        params.epsilon = o.epsilon;
        cert = approx_vertex_connectivity(*g, params, std::max(1, o.threads));
    }
    SolveOutput out;
    std::optional<bool> match;
    if (o.oracle) {
        out.oracle_checked = true;
        auto brute = brute_vertex_cut(*g);
        if (cert.has_value() != brute.has_value())
            out.oracle_match = false;
        else if (cert && brute) {
            // The approximate path may legitimately exceed kappa; exact
            // modes must agree. Soundness (>= kappa) is always required.
            if (o.exact || o.sparsify)
                out.oracle_match = cert->value == brute->value;
            else
                out.oracle_match = cert->value >= brute->value;
        }
        match = out.oracle_match;
    }
    if (!cert) {
        out.json = no_cut_json(inst, "vertex-cut", o.seed, match, now_ms_since(t0));
        return out;
    }
    out.json = certificate_json(inst, *cert, "vertex-cut", {}, match, now_ms_since(t0));
    return out;
}

SolveOutput run_isolate(const Instance& inst, const std::vector<int>& R, const conncut_options& o) {
    if (R.size() < 2) throw InvalidArgument("isolate needs at least two terminals");
    auto t0 = std::chrono::steady_clock::now();
    SolveOutput out;
    std::map<int, CutCertificate> cuts;
    long calls = 0;
    bool match = true;
    bool checked = o.oracle != 0;
    if (const WeightedGraph* g = as_graph(inst)) {
        auto iso = edge_isolating_cuts(*g, R);
        calls = iso.log.outer_calls + iso.log.inner_calls;
        cuts = std::move(iso.cuts);
        if (checked)
            for (int r : R)
                match = match && brute_edge_st_cut(*g, {r}, set_minus(R, {r})).value == cuts.at(r).value;
    } else if (const Hypergraph* h = as_hypergraph(inst)) {
        auto iso = hyper_isolating_cuts(*h, R);
        calls = iso.log.outer_calls + iso.log.inner_calls;
        cuts = std::move(iso.cuts);
        if (checked)
            for (int r : R)
                match = match && brute_hyper_st_cut(*h, {r}, set_minus(R, {r})).value == cuts.at(r).value;
    } else {
        const ElementInstance* ei = as_element(inst);
        auto iso = element_isolating_cuts(*ei, R);
        calls = iso.log.outer_calls + iso.log.inner_calls;
        cuts = std::move(iso.cuts);
        if (checked)
            for (int r : R)
                match = match && brute_element_cut(*ei, {r}, set_minus(R, {r})).value == cuts.at(r).value;
    }
    out.oracle_checked = checked;
    out.oracle_match = match;
    std::optional<bool> match_field;
    if (checked) match_field = match;
    out.json = isolate_json(inst, cuts, R, o.seed, calls, match_field, now_ms_since(t0));
    return out;
}

}  // namespace

extern "C" {

conncut_status conncut_parse(const char* text, size_t len, conncut_kind kind, uint64_t precision,
                             conncut_instance** out, char** errmsg) {
    if (!text || !out) {
        set_err(errmsg, "null argument");
        return CONNCUT_ERR_USAGE;
    }
    try {
        ParseKind pk = ParseKind::auto_detect;
        if (kind == CONNCUT_KIND_GRAPH) pk = ParseKind::graph;
        if (kind == CONNCUT_KIND_HYPERGRAPH) pk = ParseKind::hypergraph;
        if (kind == CONNCUT_KIND_ELEMENT) pk = ParseKind::element;
        ParseResult r = parse_instance(std::string(text, len), pk, precision == 0 ? 1 : precision);
        *out = new conncut_instance{std::move(r.instance), std::move(r.report)};
        return CONNCUT_OK;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return CONNCUT_ERR_USAGE;
    }
}

void conncut_instance_free(conncut_instance* inst) { delete inst; }

conncut_kind conncut_instance_kind(const conncut_instance* inst) {
    if (!inst) return CONNCUT_KIND_AUTO;
    switch (kind_of(inst->inst)) {
        case InstanceKind::graph: return CONNCUT_KIND_GRAPH;
        case InstanceKind::hypergraph: return CONNCUT_KIND_HYPERGRAPH;
        default: return CONNCUT_KIND_ELEMENT;
    }
}

char* conncut_instance_report(const conncut_instance* inst) {
    if (!inst) return dup_string("");
    return dup_string(inst->report.to_string());
}

void conncut_options_init(conncut_options* opts) {
    if (!opts) return;
    opts->seed = 0;
    opts->delta = 1e-3;
    opts->epsilon = 0.1;
    opts->exact = 0;
    opts->sparsify = 0;
    opts->oracle = 0;
    opts->threads = 1;
    opts->terminals = nullptr;
    opts->n_terminals = 0;
}

conncut_status conncut_solve(const conncut_instance* inst, const char* command,
                             const conncut_options* opts, char** json_out, char** errmsg) {
    if (!inst || !command || !json_out) {
        set_err(errmsg, "null argument");
        return CONNCUT_ERR_USAGE;
    }
    conncut_options defaults;
    conncut_options_init(&defaults);
    const conncut_options& o = opts ? *opts : defaults;
    try {
        std::string cmd(command);
        bool explicit_terminals = false;
        SolveOutput out;
        if (cmd == "vertex-cut") {
            out = run_vertex_cut(inst->inst, o, o.terminals != nullptr);
        } else {
            std::vector<int> R = resolve_terminals(inst->inst, &o, &explicit_terminals);
            if (cmd == "edge-cut")
                out = run_edge_cut(inst->inst, R, o);
            else if (cmd == "hyper-cut")
                out = run_hyper_cut(inst->inst, R, o);
            else if (cmd == "elem-cut")
                out = run_elem_cut(inst->inst, R, o);
            else if (cmd == "isolate")
                out = run_isolate(inst->inst, R, o);
            else {
                set_err(errmsg, "unknown command '" + cmd + "'");
                return CONNCUT_ERR_USAGE;
            }
        }
        *json_out = dup_string(out.json);
        if (out.oracle_checked && !out.oracle_match) {
            set_err(errmsg, "oracle cross-check mismatch");
            return CONNCUT_ERR_ORACLE_MISMATCH;
        }
        return CONNCUT_OK;
    } catch (const InvalidArgument& e) {
        set_err(errmsg, e.what());
        return CONNCUT_ERR_USAGE;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return CONNCUT_ERR_SOLVE;
    }
}

conncut_status conncut_verify(const conncut_instance* inst, const char* cert_json, int* valid_out,
                              char** json_out, char** errmsg) {
    if (!inst || !cert_json || !valid_out) {
        set_err(errmsg, "null argument");
        return CONNCUT_ERR_USAGE;
    }
    try {
        auto t0 = std::chrono::steady_clock::now();
        std::optional<CutCertificate> cert = certificate_from_json(inst->inst, cert_json);
        bool valid;
        std::string diag;
        if (!cert) {
            const WeightedGraph* g = as_graph(inst->inst);
            valid = g && graph_is_complete(*g);
            if (!valid) diag = "\"no cut\" claimed but a vertex cut exists";
        } else {
            VerifyResult r = verify_certificate(inst->inst, *cert);
            valid = r.ok;
            diag = r.diagnostic;
        }
        *valid_out = valid ? 1 : 0;
        if (json_out) *json_out = dup_string(verify_json(valid, diag, now_ms_since(t0)));
        return CONNCUT_OK;
    } catch (const InvalidArgument& e) {
        set_err(errmsg, e.what());
        return CONNCUT_ERR_USAGE;
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return CONNCUT_ERR_SOLVE;
    }
}

void conncut_free_string(char* s) { std::free(s); }

const char* conncut_version(void) { return kToolkitVersion; }
const char* conncut_schema_version(void) { return kSchemaVersion; }

}  // extern "C"
