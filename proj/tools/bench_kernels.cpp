// Compares the serial reference kernels against their OpenMP variants on a
// few corpus graphs: all-pairs BFS oracle and all-pairs label verification.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfml/generators.hpp"
#include "cfml/verify.hpp"

using namespace cfml;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_graph(const std::string& name, const PortedGraph& g)
{
    std::cout << "== " << name << " (n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";

    auto t0 = Clock::now();
    DistanceMatrix serial = oracle_all_pairs_serial(g);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    DistanceMatrix parallel = oracle_all_pairs(g);
    double tp = seconds_since(t0);

    bool equal = serial.d == parallel.d;
    std::cout << "oracle_serial_s=" << ts << "\noracle_parallel_s=" << tp
              << "\noracle_speedup=" << (tp > 0 ? ts / tp : 0.0)
              << "\noracle_equal=" << (equal ? 1 : 0) << "\n";

    EncodeOptions eopts;
    eopts.skip_class_check = true; // corpus graphs are valid by construction
    auto labels = dist_encode(g, eopts);

    VerifyOptions vs;
    vs.threads = 1;
    t0 = Clock::now();
    VerifyReport rs = verify_distance_scheme(g, labels, vs);
    ts = seconds_since(t0);

    VerifyOptions vp; // library default: all hardware threads
    t0 = Clock::now();
    VerifyReport rp = verify_distance_scheme(g, labels, vp);
    tp = seconds_since(t0);

    std::cout << "verify_serial_s=" << ts << "\nverify_parallel_s=" << tp
              << "\nverify_speedup=" << (tp > 0 ? ts / tp : 0.0)
              << "\nverify_mismatches=" << rs.mismatches + rp.mismatches << "\n";
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::cout << "threads=" << omp_get_max_threads() << "\n";
#else
    std::cout << "threads=1 (OpenMP off)\n";
#endif
    bench_graph("grid 32x32", gen_grid(32, 32));
    bench_graph("tree n=1023", gen_tree(1023, 42));
    bench_graph("K_{1,9} x K_{1,9}", gen_tree_product(make_star(9), make_star(9)));
    return 0;
}
