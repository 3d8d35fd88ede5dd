// Benchmark of the OpenMP kernels: each kernel runs single-threaded and with
// all threads, and where a serial definitional oracle exists the result is
// checked against it.  Timings go to standard output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/oracle.hpp"
#include "lrc/prng.hpp"

using namespace lrc;

namespace {

double seconds_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Codebook random_codebook(int n, int count, std::uint64_t seed) {
    Field f = Field::make(2, 1);
    CounterRng rng(seed);
    std::vector<std::vector<felem>> words(count);
    for (auto& w : words) {
        w.resize(n);
        for (auto& v : w) v = (felem)rng.uniform_below(2);
    }
    return Codebook(std::move(f), n, std::move(words));
}

LinearCode random_linear(int n, int k, std::uint64_t seed) {
    Field f = Field::make(2, 1);
    CounterRng rng(seed);
    Matrix gen(k, std::vector<felem>(n));
    for (int i = 0; i < k; ++i) {
        for (auto& v : gen[i]) v = (felem)rng.uniform_below(2);
        for (int j = 0; j < i; ++j) gen[i][j] = 0;
        gen[i][i] = 1; // systematic prefix keeps the rank full
    }
    return LinearCode::make(f, std::move(gen));
}

void bench(const char* name, const std::function<void()>& kernel) {
    const int threads = max_threads();
    set_threads(1);
    double t1 = seconds_of(kernel);
    set_threads(threads);
    double tn = seconds_of(kernel);
    std::printf("%-26s 1 thread %8.3fs   %d threads %8.3fs   speedup %5.2fx\n", name, t1, threads,
                tn, tn > 0 ? t1 / tn : 0.0);
}

void agreement(const char* oracle_name, bool agree, int value) {
    std::printf("  %-24s %s (value %d)\n", oracle_name, agree ? "agrees" : "DISAGREES", value);
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
    std::printf("threads available: %d, scale %d\n", max_threads(), scale);

    SearchLimits limits;
    limits.max_enumeration = 1ull << 30;
    limits.max_subsets = 1ull << 32;

    {
        Codebook book = random_codebook(24, 4000 * scale, 1);
        int got = 0;
        bench("pairwise min distance", [&] { got = min_distance(book, limits); });
        agreement("oracle_distance", oracle_distance(book, limits) == got, got);
    }
    {
        LinearCode code = random_linear(40, scale > 1 ? 17 : 15, 2);
        int got = 0;
        bench("linear weight scan", [&] { got = min_distance(code, limits); });
        Codebook book = expand_codebook(code, limits);
        agreement("oracle_distance", oracle_distance(book, limits) == got, got);
    }
    {
        CodeArtifact sample = sample_parity_ensemble(2, 4, 20, 64, 3);
        const Codebook& book = std::get<Codebook>(sample.code);
        int got = 0;
        bench("locality subset search", [&] { got = locality_of(book, limits).r; });
        agreement("oracle_locality", oracle_locality(book, limits) == got, got);
    }
    {
        Codebook book = expand_codebook(random_linear(14, scale > 1 ? 11 : 10, 4), limits);
        bench("projection census", [&] { (void)projection_counts_all_subsets(book); });
    }
    {
        bench("ensemble monte carlo",
              [&] { (void)concat_ensemble_bad_fraction(2, 2, 12, 4, 4, 99, 20000 * scale); });
    }
    return 0;
}
