#include "cfml/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfml/generators.hpp"
#include "cfml/serialize.hpp"

namespace cfml {

namespace {

int effective_threads(int requested)
{
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

void bfs_row(const PortedGraph& g, Vid s, std::vector<Vid>& queue, std::uint16_t* out)
{
    const size_t n = g.num_vertices();
    constexpr std::uint16_t unset = 0xffff;
    for (size_t i = 0; i < n; ++i)
        out[i] = unset;
    queue.clear();
    out[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
        Vid u = queue[head];
        for (Vid w : g.neighbors(u))
            if (out[w] == unset) {
                out[w] = static_cast<std::uint16_t>(out[u] + 1);
                queue.push_back(w);
            }
    }
}

} // namespace

DistanceMatrix oracle_all_pairs(const PortedGraph& g, int threads)
{
    const size_t n = g.num_vertices();
    DistanceMatrix m;
    m.n = n;
    m.d.resize(n * n);
    const int nt = effective_threads(threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
    {
        std::vector<Vid> queue;
        queue.reserve(n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
            bfs_row(g, static_cast<Vid>(s), queue, m.d.data() + static_cast<size_t>(s) * n);
    }
    (void)nt;
    return m;
}

DistanceMatrix oracle_all_pairs_serial(const PortedGraph& g)
{
    const size_t n = g.num_vertices();
    DistanceMatrix m;
    m.n = n;
    m.d.resize(n * n);
    std::vector<Vid> queue;
    queue.reserve(n);
    for (Vid s = 0; s < n; ++s)
        bfs_row(g, s, queue, m.d.data() + static_cast<size_t>(s) * n);
    return m;
}

void VerifyReport::write_text(std::ostream& out) const
{
    out << "subject: " << subject << "\n"
        << "vertices: " << n << "\n"
        << "pairs checked: " << pairs_checked << (exhaustive ? " (exhaustive)" : " (sampled)")
        << "\n"
        << "mismatches: " << mismatches << "\n";
    for (const auto& s : mismatch_samples)
        out << "  mismatch: " << s << "\n";
    out << "label bits: max " << max_bits << ", avg " << avg_bits << "\n"
        << "levels: max " << max_levels << "\n"
        << "recursion depth: " << recursion_depth << "\n"
        << (ok() ? "result: PASS" : "result: FAIL") << "\n";
}

void VerifyReport::write_kv(std::ostream& out) const
{
    out << "subject=" << subject << '\n'
        << "n=" << n << '\n'
        << "pairs=" << pairs_checked << '\n'
        << "exhaustive=" << (exhaustive ? 1 : 0) << '\n'
        << "mismatches=" << mismatches << '\n'
        << "max_bits=" << max_bits << '\n'
        << "avg_bits=" << avg_bits << '\n'
        << "max_levels=" << max_levels << '\n'
        << "recursion_depth=" << recursion_depth << '\n'
        << "ok=" << (ok() ? 1 : 0) << '\n';
}

namespace {

template <typename L>
void fill_label_stats(VerifyReport& rep, const std::vector<L>& labels)
{
    LabelStats st = label_stats(labels);
    rep.max_bits = st.max_bits;
    rep.avg_bits = st.avg_bits;
    rep.max_levels = st.max_levels;
    rep.recursion_depth = 0;
    for (const auto& l : labels)
        rep.recursion_depth = std::max(rep.recursion_depth,
                                       static_cast<size_t>(std::max(l.ncad.depth, 0)));
}

} // namespace

VerifyReport verify_distance_scheme(const PortedGraph& g, const std::vector<DistLabel>& labels,
                                    const VerifyOptions& opts)
{
    const size_t n = g.num_vertices();
    VerifyReport rep;
    rep.subject = "distance scheme";
    rep.n = n;
    fill_label_stats(rep, labels);

    std::atomic<size_t> mismatches{0};
    std::mutex sample_mu;

    if (n <= opts.exhaustive_bound) {
        rep.exhaustive = true;
        rep.pairs_checked = n * n;
        const int nt = effective_threads(opts.threads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
        {
            std::vector<Vid> queue;
            std::vector<std::uint16_t> row(n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
            for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
                bfs_row(g, static_cast<Vid>(u), queue, row.data());
                for (Vid v = 0; v < n; ++v) {
                    std::uint32_t got = dist_decode(labels[u], labels[v]);
                    if (got != row[v]) {
                        ++mismatches;
                        std::lock_guard<std::mutex> lk(sample_mu);
                        if (rep.mismatch_samples.size() < 8)
                            rep.mismatch_samples.push_back(
                                "d(" + std::to_string(u) + "," + std::to_string(v) + ") got " +
                                std::to_string(got) + " want " + std::to_string(row[v]));
                    }
                }
            }
        }
        (void)nt;
    } else {
        rep.exhaustive = false;
        rep.pairs_checked = opts.sample_pairs;
        SplitXorRng rng(opts.seed);
        std::vector<std::pair<Vid, Vid>> pairs(opts.sample_pairs);
        for (auto& p : pairs)
            p = {static_cast<Vid>(rng.below(n)), static_cast<Vid>(rng.below(n))};
        std::sort(pairs.begin(), pairs.end());
        std::vector<Vid> queue;
        std::vector<std::uint16_t> row(n);
        Vid row_src = kNoVertex;
        for (auto [u, v] : pairs) {
            if (u != row_src) {
                bfs_row(g, u, queue, row.data());
                row_src = u;
            }
            std::uint32_t got = dist_decode(labels[u], labels[v]);
            if (got != row[v]) {
                ++mismatches;
                if (rep.mismatch_samples.size() < 8)
                    rep.mismatch_samples.push_back("d(" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") got " +
                                                   std::to_string(got) + " want " +
                                                   std::to_string(row[v]));
            }
        }
    }
    rep.mismatches = mismatches.load();
    return rep;
}

WalkTrace simulate_route(const PortedGraph& g, const std::vector<RoutLabel>& labels, Vid s, Vid t)
{
    WalkTrace w;
    w.source = s;
    w.target = t;
    w.visited.push_back(s);
    Vid cur = s;
    const size_t step_limit = g.num_vertices();
    while (cur != t) {
        if (w.ports.size() > step_limit) {
            w.failure = "walk exceeded " + std::to_string(step_limit) + " steps";
            return w;
        }
        Port p = rout_decode(labels[cur], labels[t]);
        if (p == 0) {
            w.failure = "premature stop at " + std::to_string(cur);
            return w;
        }
        if (p > g.degree(cur)) {
            w.failure = "invalid port " + std::to_string(p) + " at " + std::to_string(cur);
            return w;
        }
        cur = g.neighbor_by_port(cur, p);
        w.ports.push_back(p);
        w.visited.push_back(cur);
    }
    w.ok = true;
    return w;
}

VerifyReport verify_routing_scheme(const PortedGraph& g, const std::vector<RoutLabel>& labels,
                                   const VerifyOptions& opts)
{
    const size_t n = g.num_vertices();
    VerifyReport rep;
    rep.subject = "routing scheme";
    rep.n = n;
    rep.exhaustive = true;
    rep.pairs_checked = n * n;
    fill_label_stats(rep, labels);

    std::atomic<size_t> mismatches{0};
    std::mutex sample_mu;
    const int nt = effective_threads(opts.threads);

    // outer loop over targets: one oracle row per target drives the per-hop
    // progress check for walks from every source
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
#endif
    {
        std::vector<Vid> queue;
        std::vector<std::uint16_t> dist_to_t(n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4)
#endif
        for (std::int64_t ti = 0; ti < static_cast<std::int64_t>(n); ++ti) {
            const Vid t = static_cast<Vid>(ti);
            bfs_row(g, t, queue, dist_to_t.data());
            for (Vid s = 0; s < n; ++s) {
                std::string fail;
                Vid cur = s;
                size_t steps = 0;
                while (true) {
                    Port p = rout_decode(labels[cur], labels[t]);
                    if (p == 0) {
                        if (cur != t)
                            fail = "premature stop at " + std::to_string(cur);
                        break;
                    }
                    if (p > g.degree(cur)) {
                        fail = "invalid port " + std::to_string(p) + " at " + std::to_string(cur);
                        break;
                    }
                    Vid nxt = g.neighbor_by_port(cur, p);
                    if (dist_to_t[nxt] + 1 != dist_to_t[cur]) {
                        fail = "hop " + std::to_string(cur) + "->" + std::to_string(nxt) +
                               " does not decrease the distance";
                        break;
                    }
                    cur = nxt;
                    if (++steps > n) {
                        fail = "walk too long";
                        break;
                    }
                }
                if (!fail.empty()) {
                    ++mismatches;
                    std::lock_guard<std::mutex> lk(sample_mu);
                    if (rep.mismatch_samples.size() < 8)
                        rep.mismatch_samples.push_back("route " + std::to_string(s) + "->" +
                                                       std::to_string(t) + ": " + fail);
                }
            }
        }
    }
    (void)nt;
    rep.mismatches = mismatches.load();
    return rep;
}

namespace {

template <typename L>
LabelStats stats_impl(const std::vector<L>& labels, size_t (*bits_fn)(const L&))
{
    LabelStats st;
    size_t total_bits = 0;
    for (const auto& l : labels) {
        size_t bits = bits_fn(l);
        total_bits += bits;
        st.max_bits = std::max(st.max_bits, bits);
        st.max_levels = std::max(st.max_levels, l.levels.size());
        if (l.levels.size() >= st.level_histogram.size())
            st.level_histogram.resize(l.levels.size() + 1, 0);
        ++st.level_histogram[l.levels.size()];
        st.max_tree_entries = std::max(st.max_tree_entries, l.ncad.entries.size());
        for (const auto& rec : l.levels) {
            if (rec.has_parts) {
                st.max_tree_entries = std::max(
                    {st.max_tree_entries, static_cast<size_t>(rec.first.tree_len),
                     static_cast<size_t>(rec.second.tree_len)});
            }
        }
    }
    st.avg_bits = labels.empty() ? 0.0 : static_cast<double>(total_bits) / labels.size();
    return st;
}

} // namespace

LabelStats label_stats(const std::vector<DistLabel>& labels)
{
    return stats_impl(labels, dist_label_bits);
}

LabelStats label_stats(const std::vector<RoutLabel>& labels)
{
    return stats_impl(labels, rout_label_bits);
}

namespace {

template <typename L, typename DecodeFn>
BenchResult bench_impl(const std::vector<L>& labels, size_t pair_count, std::uint64_t seed,
                       DecodeFn&& decode)
{
    BenchResult r;
    if (labels.empty() || pair_count == 0)
        return r;
    const size_t n = labels.size();
    SplitXorRng rng(seed);
    std::vector<std::pair<Vid, Vid>> pairs(pair_count);
    for (auto& p : pairs)
        p = {static_cast<Vid>(rng.below(n)), static_cast<Vid>(rng.below(n))};

    // steady state: one full untimed pass touches every sampled label
    volatile std::uint64_t sink = 0;
    for (size_t i = 0; i < pair_count; ++i)
        sink = sink + decode(labels[pairs[i].first], labels[pairs[i].second]);

    std::vector<double> ns(pair_count);
    for (size_t i = 0; i < pair_count; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        sink = sink + decode(labels[pairs[i].first], labels[pairs[i].second]);
        auto t1 = std::chrono::steady_clock::now();
        ns[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
    }
    (void)sink;
    r.queries = pair_count;
    r.mean_ns = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(pair_count);
    size_t p99_idx = pair_count - 1 - pair_count / 100;
    std::nth_element(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(p99_idx), ns.end());
    r.p99_ns = ns[p99_idx];
    return r;
}

} // namespace

BenchResult bench_queries(const std::vector<DistLabel>& labels, size_t pair_count,
                          std::uint64_t seed)
{
    return bench_impl(labels, pair_count, seed,
                      [](const DistLabel& a, const DistLabel& b) { return dist_decode(a, b); });
}

BenchResult bench_queries(const std::vector<RoutLabel>& labels, size_t pair_count,
                          std::uint64_t seed)
{
    return bench_impl(labels, pair_count, seed,
                      [](const RoutLabel& a, const RoutLabel& b) { return rout_decode(a, b); });
}

void write_decomposition_dump(std::ostream& out, const Decomposition& d)
{
    const char* kind_name[] = {"center", "panel", "cone"};
    for (const auto& call : d.calls) {
        out << "level " << call.level << " centroid " << call.centroid << " scope "
            << call.scope.size() << "\n";
        for (const auto& f : call.fibers) {
            out << "fiber " << f.root << ' ' << kind_name[static_cast<int>(f.kind)] << ' '
                << f.verts.size() << "\n";
            for (const auto& r : f.rel) {
                out << "boundary " << f.root << ' ' << r.other << " :";
                for (Vid v : r.verts)
                    out << ' ' << v;
                out << "\n";
            }
        }
    }
}

} // namespace cfml
