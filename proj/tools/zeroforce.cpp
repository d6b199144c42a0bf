// Command-line front end: graph generation, batch bound verification,
// exact solves, and the numeric-lemma scan. One graph per input line,
// JSONL out. Exit codes: 0 ok, 1 counterexample, 2 usage/parse error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeroforce/bounds.hpp"
#include "zeroforce/forcing.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/graph6.hpp"
#include "zeroforce/proof.hpp"
#include "zeroforce/report.hpp"

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input: " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    // trailing blank lines are common in generated files
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

zf::Graph parse_line(const std::string& line, const std::string& format) {
    if (format == "edges") return zf::parse_edge_list(line);
    return zf::parse_graph6(line);
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

unsigned worker_count(std::size_t jobs) {
    unsigned t = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("ZEROFORCE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) t = static_cast<unsigned>(v);
    }
    if (t < 1) t = 1;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

/// Order-preserving parallel map over input lines.
std::vector<std::string> parallel_map(const std::vector<std::string>& lines,
                                      const std::function<std::string(const std::string&, std::size_t)>& fn) {
    std::vector<std::string> out(lines.size());
    unsigned workers = worker_count(lines.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) out[i] = fn(lines[i], i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= lines.size()) return;
                out[i] = fn(lines[i], i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

struct Out {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

int run_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, int count, Out& out) {
    auto ip = [&](std::size_t i) {
        if (i >= params.size()) throw CLI::ValidationError("gen", "missing parameter");
        return std::stoi(params[i]);
    };
    std::vector<zf::Graph> graphs;
    if (family == "cycle") graphs.push_back(zf::cycle_graph(ip(0)));
    else if (family == "path") graphs.push_back(zf::path_graph(ip(0)));
    else if (family == "complete") graphs.push_back(zf::complete_graph(ip(0)));
    else if (family == "complete_bipartite") graphs.push_back(zf::complete_bipartite(ip(0), ip(1)));
    else if (family == "petersen") graphs.push_back(zf::petersen());
    else if (family == "generalized_petersen") graphs.push_back(zf::generalized_petersen(ip(0), ip(1)));
    else if (family == "circulant") {
        graphs.push_back(zf::circulant(ip(0), parse_vertex_list(params.at(1))));
    } else if (family == "random_min_degree") {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i)
            graphs.push_back(zf::random_min_degree(ip(0), ip(1), rng));
    } else if (family == "all_connected") {
        graphs = zf::all_connected(ip(0));
    } else {
        throw CLI::ValidationError("gen", "unknown family: " + family);
    }
    for (const auto& g : graphs) out.stream() << zf::encode_graph6(g) << "\n";
    return 0;
}

int stream_command(const std::string& input, const std::string& format, Out& out,
                   const std::function<json(const zf::Graph&, std::size_t)>& fn) {
    bool parse_failed = false;
    auto lines = read_lines(input);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        json j;
        try {
            zf::Graph g = parse_line(lines[i], format);
            j = fn(g, i);
        } catch (const zf::parse_error& e) {
            j["graph_id"] = "line:" + std::to_string(i + 1);
            j["error"] = e.what();
            parse_failed = true;
        }
        out.stream() << j.dump() << "\n";
    }
    return parse_failed ? 2 : 0;
}

json set_to_json(const zf::VertexSet& s) { return json(s.to_vector()); }

int run_verify(const std::string& input, const std::string& format, Out& out,
               bool exact, bool proof, int cap, bool deterministic) {
    auto lines = read_lines(input);
    std::atomic<bool> found_counterexample{false};
    std::atomic<bool> parse_failed{false};

    auto process = [&](const std::string& line, std::size_t idx) -> std::string {
        zf::VerificationReport rep;
        rep.graph_id = "line:" + std::to_string(idx + 1);
        zf::Graph g;
        try {
            g = parse_line(line, format);
        } catch (const zf::parse_error& e) {
            rep.parse_error_msg = e.what();
            parse_failed = true;
            return rep.to_json().dump();
        }
        auto stage = [&](const char* name, auto&& body) {
            auto t0 = std::chrono::steady_clock::now();
            body();
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0).count();
            rep.timing_ms.emplace_back(name, deterministic ? 0.0 : ms);
        };

        rep.n = g.n();
        rep.edge_count = g.edge_count();
        std::optional<int> gg;
        stage("invariants", [&] {
            rep.delta = g.n() ? zf::min_degree(g) : 0;
            gg = zf::girth(g);
            rep.girth_value = gg;
        });
        bool hyps = rep.delta >= 2 && gg && *gg >= 3;
        if (hyps) {
            stage("bounds", [&] {
                rep.bound = zf::girth_degree_bound(*gg, rep.delta);
                if (*gg - 2 >= 1 && *gg - 2 <= g.n())
                    rep.delta_g_minus_2 = zf::delta_p(g, *gg - 2).value;
            });
        } else {
            rep.verdicts.emplace_back("hypotheses", "skipped: delta < 2 or acyclic");
        }
        if (exact && g.n() >= 1) {
            if (g.n() > cap) {
                rep.verdicts.emplace_back("zf_ge_bound", "skipped: size");
            } else {
                stage("solver", [&] {
                    int hint = std::max(1, rep.delta);
                    if (rep.bound) hint = std::max(hint, *rep.bound);
                    if (rep.delta_g_minus_2) hint = std::max(hint, *rep.delta_g_minus_2);
                    rep.zf = zf::zero_forcing_number(g, hint).value;
                });
                if (rep.bound) {
                    bool pass = *rep.zf >= *rep.bound;
                    rep.verdicts.emplace_back("zf_ge_bound", pass ? "pass" : "COUNTEREXAMPLE");
                    if (!pass) rep.counterexample = true;
                }
            }
        }
        if (proof) {
            if (hyps && *gg >= 5) {
                stage("proof", [&] {
                    zf::ProofOutcome po = zf::run_proof_battery(g);
                    rep.verdicts.emplace_back("proof_battery",
                                              po.ok ? "pass" : "COUNTEREXAMPLE: " + po.detail);
                    if (!po.ok) rep.counterexample = true;
                });
            } else {
                rep.verdicts.emplace_back("proof_battery", "skipped: girth < 5");
            }
        }
        if (rep.counterexample) {
            rep.graph6 = zf::encode_graph6(g);
            found_counterexample = true;
        }
        return rep.to_json().dump();
    };

    for (auto& line : parallel_map(lines, process)) out.stream() << line << "\n";
    if (found_counterexample) return 1;
    return parse_failed ? 2 : 0;
}

int run_lemma2_cmd(int p_min, int p_max, Out& out) {
    zf::Lemma2Scan scan = zf::lemma2_scan(p_min, p_max);
    json j;
    j["p_min"] = p_min;
    j["p_max"] = p_max;
    j["pairs_checked"] = scan.pairs_checked;
    j["violations"] = json::array();
    for (auto [p, f] : scan.violations) j["violations"].push_back({p, f});
    if (p_max >= 17) {
        json growth = json::array();
        bool all_ok = true;
        for (int p = 17; p <= p_max; ++p) {
            bool ok = zf::growth_check(p);
            all_ok = all_ok && ok;
            if (!ok) growth.push_back(p);
        }
        j["growth_check_range"] = {17, p_max};
        j["growth_check_ok"] = all_ok;
        j["growth_check_failures"] = growth;
    }
    out.stream() << j.dump() << "\n";
    bool ok = scan.violations.empty() &&
              (!j.contains("growth_check_ok") || j["growth_check_ok"].get<bool>());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing bounds workbench"};
    app.require_subcommand(1);

    std::string input, out_path, format = "graph6";
    std::uint64_t seed = 0;
    int cap = 22, count = 1, p_arg = 1, p_min = 5, p_max = 16;
    bool exact = false, proof = false, deterministic = false, all_minimizers = false;
    std::string family, set_spec;
    std::vector<std::string> params;

    auto add_stream_opts = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file (default stdin)");
        sub->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));
        sub->add_option("--out", out_path);
    };

    auto* gen = app.add_subcommand("gen", "generate a graph family as graph6 lines");
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--out", out_path);

    auto* girth_cmd = app.add_subcommand("girth", "girth per input graph");
    add_stream_opts(girth_cmd);

    auto* closure_cmd = app.add_subcommand("closure", "forcing closure from --set");
    closure_cmd->add_option("--set", set_spec, "comma-separated vertices")->required();
    add_stream_opts(closure_cmd);

    auto* zf_cmd = app.add_subcommand("zf", "exact zero forcing number");
    zf_cmd->add_option("--cap", cap);
    add_stream_opts(zf_cmd);

    auto* deltap_cmd = app.add_subcommand("deltap", "minimum p-subset neighborhood");
    deltap_cmd->add_option("--p", p_arg)->required();
    add_stream_opts(deltap_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "bound verification campaign");
    verify_cmd->add_flag("--exact", exact);
    verify_cmd->add_flag("--proof", proof);
    verify_cmd->add_option("--cap", cap);
    verify_cmd->add_flag("--deterministic", deterministic);
    add_stream_opts(verify_cmd);

    auto* lemma2_cmd = app.add_subcommand("lemma2", "numeric lemma scan");
    lemma2_cmd->add_option("p_min", p_min)->required();
    lemma2_cmd->add_option("p_max", p_max)->required();
    lemma2_cmd->add_option("--out", out_path);

    auto* proof_cmd = app.add_subcommand("proof", "structural proof battery");
    proof_cmd->add_flag("--all-minimizers", all_minimizers);
    add_stream_opts(proof_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Out out;
        out.open(out_path);
        if (gen->parsed()) return run_gen(family, params, seed, count, out);
        if (girth_cmd->parsed()) {
            return stream_command(input, format, out, [](const zf::Graph& g, std::size_t i) {
                json j;
                j["graph_id"] = "line:" + std::to_string(i + 1);
                j["n"] = g.n();
                auto gg = zf::girth(g);
                if (gg) j["girth"] = *gg;
                else j["girth"] = "acyclic";
                return j;
            });
        }
        if (closure_cmd->parsed()) {
            auto zs = parse_vertex_list(set_spec);
            return stream_command(input, format, out, [&](const zf::Graph& g, std::size_t i) {
                zf::VertexSet z;
                for (int v : zs) {
                    g.check_vertex(v);
                    z.set(v);
                }
                zf::ClosureResult c = zf::closure(g, z);
                json j;
                j["graph_id"] = "line:" + std::to_string(i + 1);
                j["initial"] = set_to_json(z);
                j["closure"] = set_to_json(c.set);
                j["forced"] = c.schedule.forced;
                j["forcers"] = c.schedule.forcers;
                j["is_zero_forcing_set"] = c.set == zf::VertexSet::full(g.n());
                return j;
            });
        }
        if (zf_cmd->parsed()) {
            return stream_command(input, format, out, [&](const zf::Graph& g, std::size_t i) {
                json j;
                j["graph_id"] = "line:" + std::to_string(i + 1);
                j["n"] = g.n();
                if (g.n() == 0) {
                    j["error"] = "empty graph";
                    return j;
                }
                if (g.n() > cap) {
                    j["zf"] = nullptr;
                    j["verdict"] = "skipped: size";
                    return j;
                }
                auto r = zf::zero_forcing_number(g, zf::min_degree(g));
                j["zf"] = r.value;
                j["witness"] = set_to_json(r.witness);
                return j;
            });
        }
        if (deltap_cmd->parsed()) {
            return stream_command(input, format, out, [&](const zf::Graph& g, std::size_t i) {
                auto r = zf::delta_p(g, p_arg);
                json j;
                j["graph_id"] = "line:" + std::to_string(i + 1);
                j["p"] = p_arg;
                j["delta_p"] = r.value;
                j["argmin"] = set_to_json(r.argmin);
                return j;
            });
        }
        if (verify_cmd->parsed())
            return run_verify(input, format, out, exact, proof, cap, deterministic);
        if (lemma2_cmd->parsed()) return run_lemma2_cmd(p_min, p_max, out);
        if (proof_cmd->parsed()) {
            int rc = stream_command(input, format, out, [&](const zf::Graph& g, std::size_t i) {
                json j;
                j["graph_id"] = "line:" + std::to_string(i + 1);
                auto gg = zf::girth(g);
                if (!gg || *gg < 5 || zf::min_degree(g) < 2) {
                    j["verdict"] = "skipped: hypotheses (girth >= 5, delta >= 2)";
                    return j;
                }
                zf::ProofOutcome po = zf::run_proof_battery(g, all_minimizers);
                j["minimizers_checked"] = po.minimizers_checked;
                j["verdict"] = po.ok ? "pass" : "COUNTEREXAMPLE: " + po.detail;
                if (!po.ok) j["graph6"] = zf::encode_graph6(g);
                return j;
            });
            return rc;
        }
    } catch (const zf::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
