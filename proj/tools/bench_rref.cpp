// Compares the OpenMP elimination kernel against the serial reference on
// random dense systems and on the stacked wedge systems the analysis
// actually solves. Outputs one line per case with both timings.

#include <chrono>
#include <iostream>
#include <vector>

#include "haff/gallery.hpp"
#include "haff/haffine.hpp"
#include "haff/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

haff::RatMatrix random_matrix(int rows, int cols, uint64_t seed) {
    haff::Rng rng(seed);
    haff::RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.uniform(0, 2) != 0) m.at(i, j) = rng.small_rational();
    return m;
}

// The stacked system behind lambda_space: rows are the coordinates of
// kernel_form ^ blade over all grade-k blades.
haff::RatMatrix wedge_system(int n, int k, int kernel_forms, uint64_t seed) {
    haff::Rng rng(seed);
    const auto& unknowns = haff::lex_blades(n, k);
    const auto& target = haff::lex_blades(n, k + 2);
    std::vector<haff::RatVec> rows;
    for (int b = 0; b < kernel_forms; ++b) {
        const haff::KForm kf = rng.form(n, 2);
        std::vector<haff::RatVec> block(target.size(), haff::RatVec(unknowns.size(), haff::Rational(0)));
        for (size_t c = 0; c < unknowns.size(); ++c) {
            const haff::KForm w = haff::wedge(kf, haff::KForm::blade_form(n, unknowns[c]));
            for (const auto& [bits, coeff] : w.terms()) {
                for (size_t t = 0; t < target.size(); ++t) {
                    if (target[t] == bits) {
                        block[t][c] = coeff;
                        break;
                    }
                }
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    return haff::RatMatrix::from_rows(static_cast<int>(unknowns.size()), rows);
}

void bench_case(const std::string& label, const haff::RatMatrix& m) {
    auto t0 = Clock::now();
    const haff::RrefResult serial = haff::rref_serial(m);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const haff::RrefResult parallel = haff::rref(m);
    const double parallel_ms = ms_since(t0);
    const bool equal = serial.mat == parallel.mat && serial.pivots == parallel.pivots;
    std::cout << label << ": " << m.rows() << "x" << m.cols() << "  serial " << serial_ms << " ms, parallel "
              << parallel_ms << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (equal ? "" : "  RESULTS DIFFER") << "\n";
    if (!equal) std::exit(1);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both timings use the serial path\n";
#endif
    bench_case("dense random", random_matrix(60, 120, 11));
    bench_case("dense random", random_matrix(120, 200, 12));
    bench_case("dense random", random_matrix(160, 240, 13));
    bench_case("wedge system n=7 k=2", wedge_system(7, 2, 8, 21));
    bench_case("wedge system n=8 k=3", wedge_system(8, 3, 6, 22));
    return 0;
}
