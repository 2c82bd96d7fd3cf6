// Benchmark comparing the serial reference implementations against the
// OpenMP kernels on the enumeration workloads. Not part of the test suite.
//
//   bench_kernels [--workers N] [--heavy]
//
// --heavy adds the 3^12-codeword / 3^12-pair family-G case at m = 6.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bch3/codes.hpp"
#include "bch3/enumerate.hpp"
#include "bch3/field.hpp"

using namespace bch3;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, double ref, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(26) << name << std::right << std::fixed
              << std::setprecision(3) << "  reference " << std::setw(8) << ref << " s"
              << "  kernel x1 " << std::setw(8) << serial << " s"
              << "  kernel xN " << std::setw(8) << parallel << " s"
              << "  speedup " << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
              << (equal ? "  [identical]" : "  [MISMATCH]") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int workers = 0;
    bool heavy = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--workers") && i + 1 < argc)
            workers = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--heavy"))
            heavy = true;
    }
#ifdef _OPENMP
    if (workers <= 0) workers = omp_get_max_threads();
    std::cout << "OpenMP enabled, " << workers << " workers\n";
#else
    std::cout << "built without OpenMP; kernel runs are serial\n";
#endif

    {
        FieldContext f5 = FieldContext::make(5);
        CyclicCode e5 = construct_family(Family::E, f5);
        WeightDistribution ref, s1, sp;
        double t_ref = time_of([&] { ref = weight_distribution_exhaustive_reference(e5); });
        double t_s = time_of([&] { s1 = weight_distribution_exhaustive(e5, kDefaultMaxDim, 1); });
        double t_p = time_of([&] { sp = weight_distribution_exhaustive(e5, kDefaultMaxDim, workers); });
        report("exhaustive E m=5", t_ref, t_s, t_p, ref == s1 && s1 == sp);
    }
    {
        FieldContext f5 = FieldContext::make(5);
        WeightDistribution ref, s1, sp;
        double t_ref = time_of([&] { ref = weight_distribution_trace_reference(Family::E, f5); });
        double t_s = time_of([&] { s1 = weight_distribution_trace(Family::E, f5, 1); });
        double t_p = time_of([&] { sp = weight_distribution_trace(Family::E, f5, workers); });
        report("trace scan E m=5", t_ref, t_s, t_p, ref == s1 && s1 == sp);
    }
    if (heavy) {
        FieldContext f6 = FieldContext::make(6);
        CyclicCode g6 = construct_family(Family::G, f6);
        {
            WeightDistribution s1, sp;
            double t_s = time_of([&] { s1 = weight_distribution_exhaustive(g6, kDefaultMaxDim, 1); });
            double t_p =
                time_of([&] { sp = weight_distribution_exhaustive(g6, kDefaultMaxDim, workers); });
            report("exhaustive G m=6", 0.0, t_s, t_p, s1 == sp);
        }
        {
            WeightDistribution ref, s1, sp;
            double t_ref = time_of([&] { ref = weight_distribution_trace_reference(Family::G, f6); });
            double t_s = time_of([&] { s1 = weight_distribution_trace(Family::G, f6, 1); });
            double t_p = time_of([&] { sp = weight_distribution_trace(Family::G, f6, workers); });
            report("trace scan G m=6", t_ref, t_s, t_p, ref == s1 && s1 == sp);
        }
    }
    return 0;
}
