// conncut command line front end. Talks to the toolkit exclusively
// through the C API in conncut.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conncut.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolve = 2;
constexpr int kExitOracleMismatch = 3;

struct CommonArgs {
    std::string path;
    std::string terminals;
    uint64_t seed = 0;
    double delta = 1e-3;
    uint64_t precision = 1000000;
    bool json = false;
    bool oracle = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<uint64_t> parse_terminals(const std::string& spec) {
    std::vector<uint64_t> out;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    return out;
}

int threads_from_env() {
    const char* v = std::getenv("CONNCUT_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t < 1 ? 1 : t;
}

void print_report(conncut_instance* inst) {
    char* rep = conncut_instance_report(inst);
    if (rep && rep[0] != '\0') std::cerr << rep;
    conncut_free_string(rep);
}

void print_human(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    auto value_str = [](const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::cout << j["problem"].get<std::string>();
    if (j.contains("cuts")) {
        std::cout << ": " << j["cuts"].size() << " isolating cuts\n";
        for (const auto& c : j["cuts"])
            std::cout << "  terminal " << c["terminal"] << ": value " << value_str(c["value"])
                      << ", removed " << c["removed"].dump() << "\n";
    } else if (j.contains("valid")) {
        std::cout << ": " << (j["valid"].get<bool>() ? "valid" : "INVALID");
        if (!j["diagnostic"].get<std::string>().empty())
            std::cout << " (" << j["diagnostic"].get<std::string>() << ")";
        std::cout << "\n";
        return;
    } else {
        std::cout << ": value " << value_str(j["value"]) << "\n";
        std::cout << "  side " << j["side"].dump() << "\n";
        std::cout << "  removed " << j["removed"].dump() << "\n";
    }
    if (j.contains("oracle_match"))
        std::cout << "  oracle-match " << (j["oracle_match"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "  seed " << j["seed"] << ", oracle calls " << j["oracle_calls"] << "\n";
}

int fail_with(conncut_status st, char* errmsg) {
    if (errmsg) {
        std::cerr << "error: " << errmsg << "\n";
        conncut_free_string(errmsg);
    }
    switch (st) {
        case CONNCUT_ERR_USAGE: return kExitUsage;
        case CONNCUT_ERR_ORACLE_MISMATCH: return kExitOracleMismatch;
        default: return kExitSolve;
    }
}

int run_solver(const std::string& command, conncut_kind kind, const CommonArgs& args,
               double epsilon, bool exact, bool sparsify) {
    std::string text;
    try {
        text = read_input(args.path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    conncut_instance* inst = nullptr;
    char* errmsg = nullptr;
    conncut_status st = conncut_parse(text.c_str(), text.size(), kind, args.precision, &inst, &errmsg);
    if (st != CONNCUT_OK) return fail_with(st, errmsg);
    print_report(inst);

    conncut_options opts;
    conncut_options_init(&opts);
    opts.seed = args.seed;
    opts.delta = args.delta;
    opts.epsilon = epsilon;
    opts.exact = exact ? 1 : 0;
    opts.sparsify = sparsify ? 1 : 0;
    opts.oracle = args.oracle ? 1 : 0;
    opts.threads = threads_from_env();
    std::vector<uint64_t> terminals;
    if (!args.terminals.empty()) {
        terminals = parse_terminals(args.terminals);
        opts.terminals = terminals.data();
        opts.n_terminals = terminals.size();
    }

    char* json_out = nullptr;
    st = conncut_solve(inst, command.c_str(), &opts, &json_out, &errmsg);
    int code = kExitOk;
    if (st == CONNCUT_OK || st == CONNCUT_ERR_ORACLE_MISMATCH) {
        if (args.json)
            std::cout << json_out << "\n";
        else
            print_human(json_out);
        conncut_free_string(json_out);
        if (st == CONNCUT_ERR_ORACLE_MISMATCH) {
            std::cerr << "error: oracle cross-check mismatch\n";
            code = kExitOracleMismatch;
        }
        if (errmsg) conncut_free_string(errmsg);
    } else {
        code = fail_with(st, errmsg);
    }
    conncut_instance_free(inst);
    return code;
}

int run_verify(const std::string& inst_path, const std::string& cert_path, uint64_t precision,
               bool json) {
    std::string text, cert;
    try {
        text = read_input(inst_path);
        cert = read_input(cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    conncut_instance* inst = nullptr;
    char* errmsg = nullptr;
    conncut_status st =
        conncut_parse(text.c_str(), text.size(), CONNCUT_KIND_AUTO, precision, &inst, &errmsg);
    if (st != CONNCUT_OK) return fail_with(st, errmsg);
    int valid = 0;
    char* json_out = nullptr;
    st = conncut_verify(inst, cert.c_str(), &valid, &json_out, &errmsg);
    int code;
    if (st != CONNCUT_OK) {
        code = fail_with(st, errmsg);
    } else {
        if (json)
            std::cout << json_out << "\n";
        else
            print_human(json_out);
        conncut_free_string(json_out);
        code = valid ? kExitOk : kExitSolve;
    }
    conncut_instance_free(inst);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conncut: global and subset minimum cuts via isolating cuts"};
    app.require_subcommand(1);
    std::string version = std::string("conncut ") + conncut_version() + " (schema " +
                          conncut_schema_version() + ")";
    app.set_version_flag("--version", version);

    struct SubSpec {
        CLI::App* sub;
        CommonArgs args;
        double epsilon = 0.1;
        bool exact = false;
        bool sparsify = false;
    };
    auto add_common = [&](SubSpec& s, bool with_terminals, bool with_vc_flags) {
        s.sub->add_option("instance", s.args.path, "instance file, or - for stdin")->required();
        if (with_terminals)
            s.sub->add_option("--terminals", s.args.terminals,
                              "comma separated vertex labels (default: all vertices / all terminals)");
        s.sub->add_option("--seed", s.args.seed, "random seed (default 0)");
        s.sub->add_option("--delta", s.args.delta, "failure probability target (default 1e-3)");
        s.sub->add_option("--precision", s.args.precision,
                          "decimal weight scaling factor (default 1000000); weights are exact "
                          "multiples of 1/precision");
        s.sub->add_flag("--json", s.args.json, "emit the JSON certificate");
        s.sub->add_flag("--oracle", s.args.oracle, "cross-check against brute force (small inputs)");
        if (with_vc_flags) {
            s.sub->add_option("--epsilon", s.epsilon, "approximation slack (default 0.1)");
            s.sub->add_flag("--exact", s.exact, "exact connectivity (epsilon from best singleton)");
            s.sub->add_flag("--sparsify", s.sparsify, "Nagamochi-Ibaraki sparsification first");
        }
    };

    SubSpec edge{app.add_subcommand("edge-cut", "minimum edge cut separating the terminal set")};
    add_common(edge, true, false);
    SubSpec hyper{app.add_subcommand("hyper-cut", "minimum hypergraph cut separating the terminal set")};
    add_common(hyper, true, false);
    SubSpec elem{app.add_subcommand("elem-cut", "global / subset element connectivity")};
    add_common(elem, true, false);
    SubSpec vertex{app.add_subcommand("vertex-cut", "global minimum weight vertex cut")};
    add_common(vertex, false, true);
    SubSpec isolate{app.add_subcommand("isolate", "minimum isolating cut for every terminal")};
    add_common(isolate, true, false);

    auto* verify_cmd = app.add_subcommand("verify", "re-check an emitted certificate");
    std::string verify_inst, verify_cert;
    uint64_t verify_precision = 1000000;
    bool verify_jsonf = false;
    verify_cmd->add_option("instance", verify_inst, "instance file, or - for stdin")->required();
    verify_cmd->add_option("certificate", verify_cert, "certificate JSON file")->required();
    verify_cmd->add_option("--precision", verify_precision, "decimal weight scaling factor");
    verify_cmd->add_flag("--json", verify_jsonf, "emit the JSON verify report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (edge.sub->parsed())
        return run_solver("edge-cut", CONNCUT_KIND_GRAPH, edge.args, 0, false, false);
    if (hyper.sub->parsed())
        return run_solver("hyper-cut", CONNCUT_KIND_HYPERGRAPH, hyper.args, 0, false, false);
    if (elem.sub->parsed())
        return run_solver("elem-cut", CONNCUT_KIND_ELEMENT, elem.args, 0, false, false);
    if (vertex.sub->parsed())
        return run_solver("vertex-cut", CONNCUT_KIND_GRAPH, vertex.args, vertex.epsilon,
                          vertex.exact, vertex.sparsify);
    if (isolate.sub->parsed())
        return run_solver("isolate", CONNCUT_KIND_AUTO, isolate.args, 0, false, false);
    if (verify_cmd->parsed()) return run_verify(verify_inst, verify_cert, verify_precision, verify_jsonf);
    return kExitUsage;
}
