#include "cfml/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <deque>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cfml {

bool PortedGraph::has_edge(Vid u, Vid v) const
{
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Port PortedGraph::port(Vid u, Vid v) const
{
    const auto& a = adj_[u];
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] == v)
            return static_cast<Port>(k + 1);
    throw NotEdgeError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

Vid PortedGraph::neighbor_by_port(Vid u, Port p) const
{
    if (p == 0 || p > adj_[u].size())
        throw NotEdgeError("vertex " + std::to_string(u) + " has no port " + std::to_string(p));
    return adj_[u][p - 1];
}

PortedGraph assign_ports(size_t n, const std::vector<std::pair<Vid, Vid>>& edges)
{
    if (n == 0)
        throw ParseError("empty graph");
    PortedGraph g;
    g.adj_.assign(n, {});
    g.edges_ = edges;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw ParseError("edge endpoint out of range");
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw ParseError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = edges.size();
    // connectivity
    if (n > 1) {
        std::vector<char> seen(n, 0);
        std::deque<Vid> q{0};
        seen[0] = 1;
        size_t cnt = 1;
        while (!q.empty()) {
            Vid u = q.front();
            q.pop_front();
            for (Vid w : g.adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
        }
        if (cnt != n)
            throw ParseError("graph is not connected");
    }
    return g;
}

DistanceVector bfs_distances(const PortedGraph& g, Vid s)
{
    const size_t n = g.num_vertices();
    DistanceVector d(n, kUnreached);
    std::vector<Vid> q;
    q.reserve(n);
    d[s] = 0;
    q.push_back(s);
    for (size_t head = 0; head < q.size(); ++head) {
        Vid u = q[head];
        for (Vid w : g.neighbors(u))
            if (d[w] == kUnreached) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
    }
    return d;
}

std::vector<Vid> interval(const PortedGraph& g, Vid u, Vid v)
{
    DistanceVector du = bfs_distances(g, u);
    DistanceVector dv = bfs_distances(g, v);
    std::vector<Vid> out;
    const std::uint32_t duv = du[v];
    for (Vid x = 0; x < g.num_vertices(); ++x)
        if (du[x] + dv[x] == duv)
            out.push_back(x);
    return out;
}

Vid median_of_triplet(const PortedGraph& g, Vid u, Vid v, Vid w)
{
    DistanceVector du = bfs_distances(g, u);
    DistanceVector dv = bfs_distances(g, v);
    DistanceVector dw = bfs_distances(g, w);
    Vid med = kNoVertex;
    size_t count = 0;
    for (Vid x = 0; x < g.num_vertices(); ++x) {
        if (du[x] + dv[x] == du[v] && dv[x] + dw[x] == dv[w] && du[x] + dw[x] == du[w]) {
            med = x;
            ++count;
        }
    }
    if (count != 1)
        throw NotMedianError("triplet (" + std::to_string(u) + "," + std::to_string(v) + "," +
                             std::to_string(w) + ") has " + std::to_string(count) + " medians");
    return med;
}

HalfspacePair halfspace_sizes(const PortedGraph& g, Vid u, Vid v)
{
    if (!g.has_edge(u, v))
        throw NotEdgeError("halfspace_sizes: (" + std::to_string(u) + "," + std::to_string(v) +
                           ") is not an edge");
    DistanceVector du = bfs_distances(g, u);
    DistanceVector dv = bfs_distances(g, v);
    HalfspacePair h{u, v, 0, 0};
    for (Vid x = 0; x < g.num_vertices(); ++x) {
        if (du[x] < dv[x])
            ++h.size_wuv;
        else
            ++h.size_wvu;
    }
    return h;
}

namespace {

bool is_bipartite(const PortedGraph& g)
{
    const size_t n = g.num_vertices();
    std::vector<std::int8_t> color(n, -1);
    std::vector<Vid> q;
    color[0] = 0;
    q.push_back(0);
    for (size_t head = 0; head < q.size(); ++head) {
        Vid u = q[head];
        for (Vid w : g.neighbors(u)) {
            if (color[w] < 0) {
                color[w] = static_cast<std::int8_t>(1 - color[u]);
                q.push_back(w);
            } else if (color[w] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

// Distance matrix with uint16 entries (n is bounded by the recognizer guard).
std::vector<std::uint16_t> distance_matrix16(const PortedGraph& g, int threads)
{
    const size_t n = g.num_vertices();
    std::vector<std::uint16_t> d(n * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
        DistanceVector row = bfs_distances(g, static_cast<Vid>(s));
        std::uint16_t* out = d.data() + static_cast<size_t>(s) * n;
        for (size_t j = 0; j < n; ++j)
            out[j] = static_cast<std::uint16_t>(row[j]);
    }
    return d;
}

} // namespace

bool is_median_graph(const PortedGraph& g, const RecognizerOptions& opts)
{
    const size_t n = g.num_vertices();
    if (n > opts.size_bound)
        throw SizeGuardError("median recognition requested for n=" + std::to_string(n) +
                             " above bound " + std::to_string(opts.size_bound));
    if (n == 1)
        return true;
    if (!is_bipartite(g))
        return false;

    const std::vector<std::uint16_t> dm = distance_matrix16(g, opts.threads);

    // Interval bitsets: row-major table of n x n bits, I[x][y] packed per pair.
    const size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> itab(n * n * words, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
#endif
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
        const size_t x = static_cast<size_t>(xi);
        const std::uint16_t* dx = dm.data() + x * n;
        for (size_t y = 0; y < n; ++y) {
            const std::uint16_t* dy = dm.data() + y * n;
            const std::uint16_t dxy = dx[y];
            std::uint64_t* bits = itab.data() + (x * n + y) * words;
            for (size_t w = 0; w < n; ++w)
                if (dx[w] + dy[w] == dxy)
                    bits[w >> 6] |= std::uint64_t(1) << (w & 63);
        }
    }

    // Every triplet must have exactly one vertex in the triple intersection.
    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
#endif
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
        if (!ok.load(std::memory_order_relaxed))
            continue;
        const size_t x = static_cast<size_t>(xi);
        for (size_t y = x + 1; y < n && ok.load(std::memory_order_relaxed); ++y) {
            const std::uint64_t* ixy = itab.data() + (x * n + y) * words;
            for (size_t z = y + 1; z < n; ++z) {
                const std::uint64_t* iyz = itab.data() + (y * n + z) * words;
                const std::uint64_t* ixz = itab.data() + (x * n + z) * words;
                unsigned count = 0;
                for (size_t w = 0; w < words; ++w) {
                    count += static_cast<unsigned>(__builtin_popcountll(ixy[w] & iyz[w] & ixz[w]));
                    if (count >= 2)
                        break;
                }
                if (count != 1) {
                    ok.store(false, std::memory_order_relaxed);
                    break;
                }
            }
        }
    }
    return ok;
}

bool is_cube_free(const PortedGraph& g)
{
    const size_t n = g.num_vertices();
    // For each vertex v and each pair of its neighbors, find the unique square
    // completion (common neighbor besides v); three pairwise squares sharing a
    // common apex form an isometric 3-cube.
    std::vector<char> mark(n, 0);
    for (Vid v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        const size_t deg = nb.size();
        if (deg < 3)
            continue;
        // square top for each neighbor pair (index by pair position)
        std::vector<Vid> top(deg * deg, kNoVertex);
        for (size_t i = 0; i < deg; ++i) {
            for (Vid w : g.neighbors(nb[i]))
                mark[w] = 1;
            for (size_t j = i + 1; j < deg; ++j) {
                for (Vid w : g.neighbors(nb[j]))
                    if (w != v && mark[w]) {
                        top[i * deg + j] = w;
                        break;
                    }
            }
            for (Vid w : g.neighbors(nb[i]))
                mark[w] = 0;
        }
        for (size_t i = 0; i < deg; ++i)
            for (size_t j = i + 1; j < deg; ++j) {
                Vid tij = top[i * deg + j];
                if (tij == kNoVertex)
                    continue;
                for (size_t k = j + 1; k < deg; ++k) {
                    Vid tik = top[i * deg + k];
                    Vid tjk = top[j * deg + k];
                    if (tik == kNoVertex || tjk == kNoVertex)
                        continue;
                    // apex adjacent to all three tops, distinct from v
                    for (Vid w : g.neighbors(tij)) {
                        if (w == v || w == nb[i] || w == nb[j] || w == nb[k])
                            continue;
                        if (g.has_edge(w, tik) && g.has_edge(w, tjk))
                            return false;
                    }
                }
            }
    }
    return true;
}

bool edge_count_bound_check(const PortedGraph& g)
{
    return g.num_edges() <= 2 * g.num_vertices();
}

ClassCheckReport check_cube_free_median(const PortedGraph& g, const RecognizerOptions& opts)
{
    ClassCheckReport rep;
    if (!is_median_graph(g, opts)) {
        rep.reason = "not median";
        return rep;
    }
    if (!is_cube_free(g)) {
        rep.reason = "not cube-free (contains an isometric 3-cube)";
        return rep;
    }
    if (!edge_count_bound_check(g)) {
        rep.reason = "edge count exceeds 2n";
        return rep;
    }
    rep.ok = true;
    return rep;
}

} // namespace cfml
