// Times the direct-convolution product against the spectral product across
// dimensions and reports the crossover.
#include <chrono>
#include <cstdio>
#include <vector>

#include "euclid/rng.hpp"
#include "euclid/spectral.hpp"

using namespace euclid;
using Clock = std::chrono::steady_clock;

namespace {

Element random_element(const Algebra& ctx, Rng& rng) {
    std::vector<double> c(static_cast<std::size_t>(ctx.dim()));
    for (double& x : c) x = rng.normal();
    return Element(ctx, std::move(c));
}

template <class F>
double time_per_op_us(F&& op, int reps) {
    // warm up once, then time the batch
    op();
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) op();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::micro>(stop - start).count() / reps;
}

}  // namespace

int main() {
    Rng rng(12345);
    std::printf("%8s %14s %14s %8s\n", "n", "naive (us)", "fast (us)", "ratio");
    for (int n : {4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192}) {
        Algebra ctx(n);
        const Element u = random_element(ctx, rng);
        const Element v = random_element(ctx, rng);
        const int reps = std::max(4, 1 << std::max(0, 16 - n / 128));

        volatile double sink = 0.0;
        const double naive_us =
            time_per_op_us([&] { sink = multiply_naive(u, v)[0]; }, reps);
        const double fast_us =
            time_per_op_us([&] { sink = multiply_fast(u, v)[0]; }, reps);
        (void)sink;
        std::printf("%8d %14.2f %14.2f %8.2f\n", n, naive_us, fast_us, naive_us / fast_us);
    }
    return 0;
}
