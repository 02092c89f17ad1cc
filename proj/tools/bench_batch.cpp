// Throughput benchmark for batch branch analysis: the same workload run
// serially and through the OpenMP task loop used by `branchforge --batch`.
// Symbolic kernels are inherently serial; the parallelism is per input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "branchforge/corpus.hpp"
#include "branchforge/irreducible.hpp"
#include "branchforge/milnor.hpp"

using namespace branchforge;

namespace {

struct Result {
    std::vector<long> gens;
    long mu = 0;
};

Result analyze(const BiPoly& f) {
    Result r;
    auto rep = abhyankar_irreducible(f);
    if (rep.verdict != IrreducibilityReport::Verdict::Yes)
        throw domain_error("bench workload must consist of branches");
    r.gens = rep.semigroup->gens;
    r.mu = milnor_resultant(f);
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 40;
    std::mt19937_64 rng(20259);
    std::vector<BiPoly> work;
    work.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) work.push_back(corpus::random_branch(rng).poly);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Result> serial(work.size());
    for (size_t i = 0; i < work.size(); ++i) serial[i] = analyze(work[i]);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<Result> parallel(work.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(work.size()); ++i)
        parallel[static_cast<size_t>(i)] = analyze(work[static_cast<size_t>(i)]);
    double tp = seconds_since(t0);

    for (size_t i = 0; i < work.size(); ++i)
        if (serial[i].gens != parallel[i].gens || serial[i].mu != parallel[i].mu) {
            std::cerr << "mismatch between serial and parallel results at " << i << "\n";
            return 1;
        }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "inputs:          " << count << "\n";
    std::cout << "serial:          " << ts << " s  (" << ts / count * 1e3 << " ms/input)\n";
    std::cout << "parallel (" << threads << "t):   " << tp << " s\n";
    std::cout << "speedup:         " << (tp > 0 ? ts / tp : 0.0) << "\n";
    return 0;
}
