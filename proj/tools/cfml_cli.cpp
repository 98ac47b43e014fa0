#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfml/generators.hpp"
#include "cfml/serialize.hpp"
#include "cfml/verify.hpp"

using namespace cfml;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitClass = 3;
constexpr int kExitVerify = 4;

// "star:3", "path:9", or "tree:12:7" (family:size[:seed])
PortedGraph parse_factor(const std::string& spec)
{
    auto c1 = spec.find(':');
    if (c1 == std::string::npos)
        throw ParseError("factor spec must look like star:3, path:9 or tree:12:7");
    std::string family = spec.substr(0, c1);
    std::string rest = spec.substr(c1 + 1);
    auto c2 = rest.find(':');
    std::uint32_t size = static_cast<std::uint32_t>(std::stoul(rest.substr(0, c2)));
    if (family == "star")
        return make_star(size);
    if (family == "path")
        return make_path(size);
    if (family == "tree") {
        std::uint64_t seed = c2 == std::string::npos ? 1 : std::stoull(rest.substr(c2 + 1));
        return gen_tree(size, seed);
    }
    throw ParseError("unknown factor family '" + family + "'");
}

void apply_thread_cap()
{
#ifdef _OPENMP
    if (const char* env = std::getenv("CFML_THREADS")) {
        int t = std::atoi(env);
        if (t > 0)
            omp_set_num_threads(t);
    }
#endif
}

struct GenArgs {
    std::string family;
    std::uint32_t n = 0, width = 0, height = 0, rounds = 0;
    std::uint64_t seed = 1;
    std::string t1, t2, base, out;
};

int cmd_gen(const GenArgs& a)
{
    PortedGraph g;
    GenSpec spec{a.family, ""};
    if (a.family == "tree") {
        g = gen_tree(a.n, a.seed);
        spec.params = "n=" + std::to_string(a.n) + " seed=" + std::to_string(a.seed);
    } else if (a.family == "grid") {
        g = gen_grid(a.width, a.height);
        spec.params = "w=" + std::to_string(a.width) + " h=" + std::to_string(a.height);
    } else if (a.family == "treeProduct") {
        g = gen_tree_product(parse_factor(a.t1), parse_factor(a.t2));
        spec.params = "t1=" + a.t1 + " t2=" + a.t2;
    } else if (a.family == "convexSub") {
        PortedGraph base =
            a.base.empty() ? gen_grid(a.width, a.height) : read_graph_file(a.base);
        g = gen_convex_sub(base, a.seed, a.rounds);
        spec.params = (a.base.empty() ? "base=grid:" + std::to_string(a.width) + "x" +
                                            std::to_string(a.height)
                                      : "base=" + a.base) +
                      " rounds=" + std::to_string(a.rounds) + " seed=" + std::to_string(a.seed);
    } else {
        throw ParseError("unknown family '" + a.family + "'");
    }
    if (a.out.empty())
        write_graph_text(std::cout, g, spec.to_comment());
    else
        write_graph_file(a.out, g, spec.to_comment());
    return 0;
}

int cmd_check(const std::string& graph_path, std::uint32_t bound)
{
    PortedGraph g = read_graph_file(graph_path);
    RecognizerOptions opts;
    opts.size_bound = bound;
    ClassCheckReport rep = check_cube_free_median(g, opts);
    if (!rep.ok) {
        std::cout << "check=fail\nreason=" << rep.reason << "\n";
        return kExitClass;
    }
    std::cout << "check=ok\nn=" << g.num_vertices() << "\nm=" << g.num_edges() << "\n";
    return 0;
}

int cmd_encode(const std::string& graph_path, const std::string& kind, const std::string& format,
               bool skip_check, std::uint32_t bound, const std::string& out_path)
{
    PortedGraph g = read_graph_file(graph_path);
    EncodeOptions opts;
    opts.skip_class_check = skip_check;
    opts.recognizer.size_bound = bound;
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open " + out_path + " for writing");
    if (kind == "dist") {
        auto labels = dist_encode(g, opts);
        format == "text" ? write_dist_labels_text(out, labels)
                         : write_dist_labels_binary(out, labels);
    } else if (kind == "rout") {
        auto labels = rout_encode(g, opts);
        format == "text" ? write_rout_labels_text(out, labels)
                         : write_rout_labels_binary(out, labels);
    } else {
        throw ParseError("kind must be dist or rout");
    }
    std::cout << "encoded=" << kind << "\nout=" << out_path << "\n";
    return 0;
}

int cmd_query(const std::string& label_path, Vid u, Vid v)
{
    LabelFileKind kind = sniff_label_file(label_path);
    if (kind == LabelFileKind::DistBinary || kind == LabelFileKind::DistText) {
        auto labels = read_dist_labels_file(label_path);
        if (u >= labels.size() || v >= labels.size())
            throw ParseError("vertex out of range");
        std::cout << dist_decode(labels[u], labels[v]) << "\n";
    } else {
        auto labels = read_rout_labels_file(label_path);
        if (u >= labels.size() || v >= labels.size())
            throw ParseError("vertex out of range");
        std::cout << rout_decode(labels[u], labels[v]) << "\n";
    }
    return 0;
}

int cmd_route(const std::string& graph_path, const std::string& label_path, Vid s, Vid t)
{
    PortedGraph g = read_graph_file(graph_path);
    auto labels = read_rout_labels_file(label_path);
    if (s >= g.num_vertices() || t >= g.num_vertices())
        throw ParseError("vertex out of range");
    WalkTrace w = simulate_route(g, labels, s, t);
    for (size_t i = 0; i < w.ports.size(); ++i)
        std::cout << w.visited[i] << " port " << w.ports[i] << "\n";
    std::cout << w.visited.back() << "\n";
    std::cout << "length=" << w.ports.size() << "\n";
    std::cout << "ok=" << (w.ok ? 1 : 0) << "\n";
    if (!w.ok) {
        std::cout << "failure=" << w.failure << "\n";
        return kExitVerify;
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& label_path, size_t pairs,
               std::uint64_t seed, bool kv)
{
    PortedGraph g = read_graph_file(graph_path);
    VerifyOptions opts;
    if (pairs > 0)
        opts.sample_pairs = pairs;
    opts.seed = seed;
    LabelFileKind kind = sniff_label_file(label_path);
    VerifyReport rep;
    if (kind == LabelFileKind::DistBinary || kind == LabelFileKind::DistText)
        rep = verify_distance_scheme(g, read_dist_labels_file(label_path), opts);
    else
        rep = verify_routing_scheme(g, read_rout_labels_file(label_path), opts);
    kv ? rep.write_kv(std::cout) : rep.write_text(std::cout);
    return rep.ok() ? 0 : kExitVerify;
}

int cmd_bench(const std::string& label_path, size_t pairs, std::uint64_t seed)
{
    LabelFileKind kind = sniff_label_file(label_path);
    BenchResult r;
    LabelStats st;
    if (kind == LabelFileKind::DistBinary || kind == LabelFileKind::DistText) {
        auto labels = read_dist_labels_file(label_path);
        r = bench_queries(labels, pairs, seed);
        st = label_stats(labels);
    } else {
        auto labels = read_rout_labels_file(label_path);
        r = bench_queries(labels, pairs, seed);
        st = label_stats(labels);
    }
    std::cout << "queries=" << r.queries << "\nmean_ns=" << r.mean_ns << "\np99_ns=" << r.p99_ns
              << "\nmax_bits=" << st.max_bits << "\navg_bits=" << st.avg_bits
              << "\nmax_levels=" << st.max_levels << "\n";
    return 0;
}

int cmd_inspect(const std::string& graph_path, bool skip_check, std::uint32_t bound)
{
    PortedGraph g = read_graph_file(graph_path);
    EncodeOptions opts;
    opts.skip_class_check = skip_check;
    opts.recognizer.size_bound = bound;
    ensure_cube_free_median(g, opts);
    Decomposition d = decompose(g);
    write_decomposition_dump(std::cout, d);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    apply_thread_cap();

    CLI::App app{"distance and routing labels for cube-free median graphs"};
    app.require_subcommand(1);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--family", ga.family, "tree | grid | treeProduct | convexSub")->required();
    gen->add_option("--n", ga.n, "vertex count (tree)");
    gen->add_option("--width", ga.width, "grid width");
    gen->add_option("--height", ga.height, "grid height");
    gen->add_option("--rounds", ga.rounds, "halfspace rounds (convexSub)");
    gen->add_option("--seed", ga.seed, "PRNG seed");
    gen->add_option("--t1", ga.t1, "first factor, e.g. star:3 or path:9 or tree:12:7");
    gen->add_option("--t2", ga.t2, "second factor");
    gen->add_option("--base", ga.base, "base graph file (convexSub)");
    gen->add_option("--out", ga.out, "output file (stdout when omitted)");

    std::string graph_path, label_path, kind = "dist", format = "binary", out_path;
    bool skip_check = false, kv = false;
    std::uint32_t bound = 1024;
    std::uint64_t seed = 1;
    size_t pairs = 0;
    Vid u = 0, v = 0;

    auto* check = app.add_subcommand("check", "verify the input graph class");
    check->add_option("graph", graph_path)->required();
    check->add_option("--bound", bound, "exhaustive recognizer size bound");

    auto* encode = app.add_subcommand("encode", "build labels");
    encode->add_option("graph", graph_path)->required();
    encode->add_option("--kind", kind, "dist | rout");
    encode->add_option("--format", format, "binary | text");
    encode->add_flag("--skip-check", skip_check, "skip the class recognizer");
    encode->add_option("--bound", bound);
    encode->add_option("--out", out_path)->required();

    auto* query = app.add_subcommand("query", "decode one pair from a label file");
    query->add_option("labels", label_path)->required();
    query->add_option("u", u)->required();
    query->add_option("v", v)->required();

    auto* route = app.add_subcommand("route", "simulate a label-only walk");
    route->add_option("graph", graph_path)->required();
    route->add_option("labels", label_path)->required();
    route->add_option("s", u)->required();
    route->add_option("t", v)->required();

    auto* verify = app.add_subcommand("verify", "check labels against the BFS oracle");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labels", label_path)->required();
    verify->add_option("--pairs", pairs, "sample size above the exhaustive bound");
    verify->add_option("--seed", seed);
    verify->add_flag("--kv", kv, "machine-readable key=value output");

    auto* bench = app.add_subcommand("bench", "query latency and label size");
    bench->add_option("labels", label_path)->required();
    bench->add_option("--pairs", pairs, "number of timed queries")->required();
    bench->add_option("--seed", seed);

    auto* inspect = app.add_subcommand("inspect", "dump the decomposition");
    inspect->add_option("graph", graph_path)->required();
    inspect->add_flag("--skip-check", skip_check);
    inspect->add_option("--bound", bound);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(ga);
        if (check->parsed())
            return cmd_check(graph_path, bound);
        if (encode->parsed())
            return cmd_encode(graph_path, kind, format, skip_check, bound, out_path);
        if (query->parsed())
            return cmd_query(label_path, u, v);
        if (route->parsed())
            return cmd_route(graph_path, label_path, u, v);
        if (verify->parsed())
            return cmd_verify(graph_path, label_path, pairs, seed, kv);
        if (bench->parsed())
            return cmd_bench(label_path, pairs, seed);
        if (inspect->parsed())
            return cmd_inspect(graph_path, skip_check, bound);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SizeGuardError& e) {
        std::cerr << "class check: " << e.what() << "\n";
        return kExitClass;
    } catch (const NotMedianError& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        return kExitClass;
    } catch (const NotCubeFreeMedianError& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        return kExitClass;
    } catch (const GateAmbiguousError& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        return kExitClass;
    } catch (const ImprintMismatchError& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        return kExitClass;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
