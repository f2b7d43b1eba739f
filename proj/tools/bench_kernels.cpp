// Compares the OpenMP all-pairs BFS kernel against the serial reference,
// and times R-system construction on product graphs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "fracdim/graph.hpp"
#include "fracdim/products.hpp"
#include "fracdim/theorems.hpp"

using namespace fracdim;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count() / reps;
}

void bench_graph(const char* name, const Graph& g, int reps) {
    double serial = time_ms([&] { DistanceMatrix::bfs_all_pairs_serial(g); }, reps);
    double parallel = time_ms([&] { DistanceMatrix::bfs_all_pairs(g); }, reps);
    std::printf("%-24s n=%4d  serial %8.3f ms  omp %8.3f ms  speedup %.2fx\n", name,
                g.vertex_count(), serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 20;
    bench_graph("cycle 200", gen::cycle(200), reps);
    bench_graph("random n=300 m=2000", gen::random_gnm(300, 2000, 7), reps);
    bench_graph("hypercube d=8", gen::hypercube(8), reps);

    Graph g = gen::cycle(5);
    Graph h = gen::cycle(4);
    ProductGraph cor = corona(g, h);
    ProductGraph lex = lexicographic(gen::path(5), gen::petersen());
    double cor_rows = time_ms([&] { resolving_lp(cor.graph()); }, reps);
    double lex_rows = time_ms([&] { resolving_lp(lex.graph()); }, reps);
    std::printf("R-system build: corona(C5,C4) %8.3f ms  lex(P5,Petersen) %8.3f ms\n",
                cor_rows, lex_rows);

    double solve = time_ms([&] { dim_f(cor.graph()); }, 1);
    std::printf("dim_f corona(C5,C4): %8.3f ms\n", solve);
    return 0;
}
