// Command-line driver: instance generation, spectrum reports, one subcommand per lemma.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pancyclic/covers.hpp"
#include "pancyclic/dense_paths.hpp"
#include "pancyclic/edge_list.hpp"
#include "pancyclic/generators.hpp"
#include "pancyclic/oracles.hpp"
#include "pancyclic/shortening.hpp"
#include "pancyclic/spectrum.hpp"

using namespace pancyclic;
using nlohmann::json;

namespace {

enum Exit { ok = 0, verification = 1, usage = 2, exhausted = 3 };

int exit_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::CapExceeded:
    case ErrorKind::BudgetExceeded:
        return exhausted;
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidGraph:
    case ErrorKind::Parse:
    case ErrorKind::InvalidK:
    case ErrorKind::InvalidGamma:
        return usage;
    default:
        return verification;
    }
}

std::vector<Vertex> parse_list(const std::string& text)
{
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw Error(ErrorKind::Parse, "bad vertex '" + item + "' in list");
        out.push_back(v);
    }
    return out;
}

json path_json(const OrderedPath& p) { return json{{"vertices", p.vertices}, {"length", p.length()}}; }

json cert_json(const DensePairCertificate& c)
{
    json paths = json::object();
    for (const auto& [len, p] : c.paths)
        paths[std::to_string(len)] = p.vertices;
    return json{{"u", c.u},           {"v", c.v},           {"lo", c.lo},
                {"hi", c.hi},         {"gap", c.gap},       {"method", c.method},
                {"spine", c.spine},   {"promised_lo", c.promised_lo}, {"promised_hi", c.promised_hi},
                {"paths", paths}};
}

// Output target shared by every subcommand.
struct Sink {
    std::string out;

    void text(const std::string& body) const
    {
        if (out.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(out);
        if (!f)
            throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
        f << body;
    }
    void emit(const json& j) const { text(j.dump(2) + "\n"); }
};

struct GraphInput {
    std::string path;
    Graph load() const { return read_edge_list_file(path); }
};

void add_input(CLI::App* app, GraphInput& in) { app->add_option("--in", in.path, "edge-list file")->required(); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pancyclic: cycle-length certificates for graphs with bounded independence number"};
    app.require_subcommand(1);
    app.fallthrough(); // --out, --serial accepted after the subcommand
    Sink sink;
    app.add_option("--out", sink.out, "write output here instead of stdout");
    OracleConfig cfg = OracleConfig::from_env();
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial oracle kernels");

    std::function<void()> run;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    int gen_k = 3;
    auto* gen_ext = gen->add_subcommand("extremal", "chained cliques, n = 2k^2 - 2k");
    gen_ext->add_option("--k", gen_k)->required();
    gen_ext->callback([&] {
        run = [&] {
            std::ostringstream s;
            write_edge_list(s, gen_extremal(gen_k));
            sink.text(s.str());
        };
    });
    GeneratorConfig gcfg;
    auto* gen_rand = gen->add_subcommand("random", "planted Hamilton cycle, oracle-verified alpha <= k");
    gen_rand->add_option("--n", gcfg.n)->required();
    gen_rand->add_option("--k", gcfg.k)->required();
    gen_rand->add_option("--seed", gcfg.seed);
    gen_rand->add_option("--density", gcfg.density);
    gen_rand->add_option("--max-attempts", gcfg.max_attempts);
    gen_rand->callback([&] {
        run = [&] {
            auto inst = gen_random_bounded_alpha(gcfg, cfg);
            std::ostringstream s;
            s << "# hamilton";
            for (Vertex v : inst.hamilton.vertices)
                s << ' ' << v;
            s << "\n# alpha " << inst.alpha.size << "\n";
            write_edge_list(s, inst.graph);
            sink.text(s.str());
        };
    });

    // spectrum
    GraphInput sp_in;
    AnalysisParams params;
    std::string mode = "full";
    bool as_json = false;
    auto* spectrum = app.add_subcommand("spectrum", "cycle-length report");
    add_input(spectrum, sp_in);
    spectrum->add_option("--k", params.k)->required();
    spectrum->add_option("--eps", params.eps);
    spectrum->add_option("--gamma", params.gamma);
    spectrum->add_option("--mode", mode)->check(CLI::IsMember({"full", "oracle"}));
    spectrum->add_flag("--json", as_json, "JSON report (default: one line per length)");
    spectrum->callback([&] {
        run = [&] {
            auto g = sp_in.load();
            SpectrumReport rep;
            if (mode == "oracle") {
                rep = cycle_spectrum(g, cfg);
            } else {
                RangeOptions opt;
                opt.oracle = cfg;
                rep = full_certificate(g, params, opt);
            }
            if (as_json) {
                sink.emit(to_json(rep));
                return;
            }
            std::ostringstream s;
            for (int ell = 3; ell <= g.order(); ++ell) {
                const auto* e = rep.find(ell);
                s << ell << ' ' << to_string(rep.status(ell));
                if (e)
                    s << ' ' << to_string(e->provenance) << ' ' << e->source;
                s << '\n';
            }
            sink.text(s.str());
        };
    });

    // lemma
    auto* lemma = app.add_subcommand("lemma", "run a single lemma");
    lemma->require_subcommand(1);
    GraphInput lm_in;
    std::string path_text, pin_text;
    int lm_k = 1, lm_c = 1;
    double lm_gamma = 0.1, lm_eps = 0.5;

    auto* path_cover = lemma->add_subcommand("path-cover", "Gallai-Milgram cover, edges oriented low -> high");
    add_input(path_cover, lm_in);
    path_cover->callback([&] {
        run = [&] {
            auto d = Digraph::orient_by_label(lm_in.load());
            auto cover = gallai_milgram_cover(d);
            json paths = json::array();
            for (const auto& p : cover.paths)
                paths.push_back(p.vertices);
            sink.emit({{"size", cover.size()}, {"paths", paths}, {"valid", validate_cover(d, cover)}});
        };
    });

    auto* bfs = lemma->add_subcommand("bfs-partition", "greedy BFS clustering");
    add_input(bfs, lm_in);
    bfs->add_option("--gamma", lm_gamma);
    bfs->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            auto part = bfs_cluster_partition(g, lm_gamma);
            json clusters = json::array();
            for (const auto& c : part.clusters)
                clusters.push_back({{"center", c.center}, {"radius", c.radius}, {"vertices", c.vertices}});
            auto bad = partition_violations(g, part);
            sink.emit({{"gamma", std::to_string(part.gamma.numerator()) + "/" + std::to_string(part.gamma.denominator())},
                       {"clusters", clusters},
                       {"leftover", part.leftover},
                       {"violations", bad}});
        };
    });

    auto* dense = lemma->add_subcommand("dense-pair", "pair joined by paths of every length in an interval");
    add_input(dense, lm_in);
    dense->add_option("--k", lm_k)->required();
    dense->add_option("--gamma", lm_gamma);
    dense->callback([&] {
        run = [&] {
            AnalysisParams p;
            p.k = lm_k;
            p.gamma = lm_gamma;
            auto g = lm_in.load();
            auto cert = find_dense_pair(g, p);
            auto j = cert_json(cert);
            j["valid"] = validate_certificate(g, cert);
            sink.emit(j);
        };
    });

    auto need_path = [&](CLI::App* sub) {
        add_input(sub, lm_in);
        sub->add_option("--path", path_text, "comma-separated vertices")->required();
        sub->add_option("--k", lm_k)->required();
    };

    auto* easy = lemma->add_subcommand("easy-jump", "bypass one chord within 2k + 1 consecutive vertices");
    need_path(easy);
    easy->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            sink.emit(path_json(easy_jump(g, OrderedPath{parse_list(path_text)}, lm_k)));
        };
    });

    auto* special = lemma->add_subcommand("special-seq", "largest special sequence avoiding --pin");
    need_path(special);
    special->add_option("--pin", pin_text, "excluded vertices");
    special->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            auto s = find_special_sequence(g, parse_list(path_text), parse_list(pin_text), lm_k);
            json edges = json::array();
            for (auto [a, b] : s.edges())
                edges.push_back({a, b});
            sink.emit({{"positions", s.positions}, {"vertices", s.vertices()}, {"edges", edges},
                       {"valid", validate_special_sequence(g, s)}});
        };
    });

    auto* zig = lemma->add_subcommand("zigzag", "shorten by 1 .. 4c - 3 vertices keeping --pin");
    need_path(zig);
    zig->add_option("--c", lm_c);
    zig->add_option("--pin", pin_text, "pinned vertices");
    zig->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            OrderedPath p{parse_list(path_text)};
            auto pins = parse_list(pin_text);
            if (!zigzag_precondition(p.vertex_count(), static_cast<int>(pins.size()), lm_c, lm_k))
                throw Error(ErrorKind::PreconditionFailed,
                            zigzag_inequality(p.vertex_count(), static_cast<int>(pins.size()), lm_c, lm_k));
            auto r = jump_with_zigzag(g, p, lm_c, pins, lm_k);
            auto j = path_json(r.path);
            j["branch"] = r.branch;
            j["removed"] = r.removed;
            sink.emit(j);
        };
    });

    auto* matching = lemma->add_subcommand("matching-cycle", "cycle plus a matched set S of size floor(eps n / 20)");
    add_input(matching, lm_in);
    matching->add_option("--k", lm_k)->required();
    matching->add_option("--eps", lm_eps);
    matching->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            auto dump = [&](const MatchingCycleDecomposition& d, const std::string& status) {
                sink.emit({{"status", status}, {"cycle", d.cycle.vertices}, {"s", d.s}, {"matched", d.matched},
                           {"target", d.target}, {"valid", validate_decomposition(g, d)}});
            };
            try {
                dump(partition_into_matching_cycle(g, lm_k, lm_eps, std::nullopt, cfg), "complete");
            } catch (const DecompositionError& e) {
                dump(e.partial(), e.what());
                throw;
            }
        };
    });

    auto* nm1 = lemma->add_subcommand("n-minus-1", "cycle of length n - 1 when n > 2k^2 + 2k");
    add_input(nm1, lm_in);
    nm1->add_option("--k", lm_k)->required();
    nm1->callback([&] {
        run = [&] {
            auto g = lm_in.load();
            auto c = cycle_n_minus_1(g, lm_k, std::nullopt, cfg);
            sink.emit({{"length", c.length()}, {"cycle", c.vertices}});
        };
    });

    // report
    std::string report_path;
    bool plot = false;
    auto* report = app.add_subcommand("report", "re-emit a JSON report");
    report->add_option("--report", report_path, "report JSON")->required();
    report->add_flag("--plot-data", plot, "length,status,provenance CSV");
    report->callback([&] {
        run = [&] {
            std::ifstream f(report_path);
            if (!f)
                throw Error(ErrorKind::InvalidArgument, "cannot read " + report_path);
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception& e) {
                throw Error(ErrorKind::Parse, e.what());
            }
            auto rep = report_from_json(j);
            if (plot)
                sink.text(to_plot_csv(rep));
            else
                sink.emit(to_json(rep));
        };
    });

    // verify
    GraphInput vf_in;
    auto* verify = app.add_subcommand("verify", "check every witness of a report against the graph");
    add_input(verify, vf_in);
    verify->add_option("--report", report_path, "report JSON")->required();
    int verify_exit = ok;
    verify->callback([&] {
        run = [&] {
            auto g = vf_in.load();
            std::ifstream f(report_path);
            if (!f)
                throw Error(ErrorKind::InvalidArgument, "cannot read " + report_path);
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception& e) {
                throw Error(ErrorKind::Parse, e.what());
            }
            auto rep = report_from_json(j);
            bool good = rep.order() == g.order() && validate_report(g, rep);
            sink.text(good ? "ok\n" : "invalid\n");
            if (!good)
                verify_exit = verification;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    cfg.parallel = !serial;
    try {
        run();
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_for(e);
    }
    return verify_exit;
}
