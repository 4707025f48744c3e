// Benchmark: OpenMP kernels against their serial reference implementations.
// Two hot paths are compared: the dense complex matrix product and the
// certifier's degree-slice sweep.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "stabdiv/linalg.hpp"
#include "stabdiv/parse.hpp"
#include "stabdiv/rng.hpp"
#include "stabdiv/stability.hpp"

using namespace stabdiv;

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

la::Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    la::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = la::cd(rng.sym_real(), rng.sym_real());
    return m;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    Rng rng(1);
    for (std::size_t n : {128u, 256u, 512u}) {
        la::Matrix A = random_matrix(n, n, rng);
        la::Matrix B = random_matrix(n, n, rng);
        la::Matrix r1, r2;
        double ts = seconds([&] { r1 = la::matmul_serial(A, B); });
        double tp = seconds([&] { r2 = la::matmul(A, B); });
        if (!(r1 == r2)) {
            std::printf("kernel mismatch!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "matmul %zux%zu", n, n);
        std::printf("%-34s %10.4f %10.4f %8.2f\n", label, ts, tp, ts / tp);
    }

    WeightedOrder ord({1, 1});
    SpaceParams da(2, Rational(-2));
    std::vector<Polynomial> gens{parse_polynomial("x^2", 2), parse_polynomial("x*y", 2),
                                 parse_polynomial("y^2", 2)};
    for (std::uint64_t qmax : {30u, 50u}) {
        CertifyOptions serial_opts, parallel_opts;
        serial_opts.samples = parallel_opts.samples = 40;
        serial_opts.parallel = false;
        parallel_opts.parallel = true;
        StabilityReport a, b;
        double ts = seconds([&] { a = certify(gens, ord, da, qmax, serial_opts); });
        double tp = seconds([&] { b = certify(gens, ord, da, qmax, parallel_opts); });
        if (!(a.sup_ratio_sq == b.sup_ratio_sq) || a.verdict != b.verdict) {
            std::printf("certify mismatch!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "certify sweep q_max=%llu",
                      static_cast<unsigned long long>(qmax));
        std::printf("%-34s %10.4f %10.4f %8.2f\n", label, ts, tp, ts / tp);
    }
    return 0;
}
