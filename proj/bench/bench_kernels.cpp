// Times the OpenMP kernels against their serial reference implementations and
// checks that both produce identical results. Work sizes are scaled up from
// the library's normal operating range so the fork overhead is visible.

#include "bmcover/cover.hpp"
#include "bmcover/int_matrix.hpp"
#include "bmcover/json_io.hpp"
#include "bmcover/parallel.hpp"
#include "bmcover/poly_matrix.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bmcover;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.2f %12.2f %9.2fx  %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "DIFFER");
}

// deterministic matrix with entries around 2^120
IntMatrix big_entry_matrix(int rank, std::uint64_t seed) {
    IntMatrix m(rank);
    std::uint64_t state = seed;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    };
    for (auto& v : m.a) {
        Int x = 1;
        for (int part = 0; part < 3; ++part) x *= Int(next());
        v = (next() % 2) ? x : -x;
    }
    return m;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths fall back to the serial loop\n");
#endif
    std::printf("%-28s %10s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    set_sweep_jobs(0); // runtime default width for the parallel paths

    {
        const IntMatrix a = big_entry_matrix(48, 0xB16B00);
        const IntMatrix b = big_entry_matrix(48, 0x5EED);
        IntMatrix rs, rp;
        const double ts = time_ms([&] { rs = mat_mul_serial(a, b); }, 5);
        const double tp = time_ms([&] { rp = mat_mul_parallel(a, b); }, 5);
        row("bigint matmul rank 48", ts, tp, rs == rp);
    }

    {
        const BraidWord w1 = power(b_family(10, 2), 2);
        const BraidWord w2 = invert(w1);
        const PolyMatrix a = reduced_burau_of_word(w1);
        const PolyMatrix b = reduced_burau_of_word(w2);
        PolyMatrix rs, rp;
        const double ts = time_ms([&] { rs = pm_mul_serial(a, b); }, 3);
        const double tp = time_ms([&] { rp = pm_mul_parallel(a, b); }, 3);
        row("burau matmul rank 9", ts, tp, rs == rp);
    }

    {
        CompareRanges r;
        r.m_min = 3;
        r.m_max = 7;
        r.k_max = 6;
        Json js, jp;
        const double ts = time_ms(
            [&] {
                set_sweep_jobs(1);
                js = to_json(compare_closed_vs_oracle(ClosedFamily::omega, r));
            },
            3);
        const double tp = time_ms(
            [&] {
                set_sweep_jobs(0);
                jp = to_json(compare_closed_vs_oracle(ClosedFamily::omega, r));
            },
            3);
        row("omega compare sweep", ts, tp, js == jp);
    }

    {
        set_sweep_jobs(1);
        std::vector<UnknotEvidence> es, ep;
        const double ts = time_ms(
            [&] {
                es.clear();
                for (int m = 4; m <= 8; ++m)
                    for (long long k = 0; k <= 4; ++k) es.push_back(unknot_evidence(b_family(m, k)));
            },
            1);
        set_sweep_jobs(0);
        const double tp = time_ms(
            [&] {
                ep.assign(25, {});
                std::vector<std::pair<int, long long>> grid;
                for (int m = 4; m <= 8; ++m)
                    for (long long k = 0; k <= 4; ++k) grid.emplace_back(m, k);
                parallel_for(grid.size(), [&](std::size_t i) {
                    ep[i] = unknot_evidence(b_family(grid[i].first, grid[i].second));
                });
            },
            1);
        bool same = es.size() == ep.size();
        for (std::size_t i = 0; same && i < es.size(); ++i)
            same = es[i].verdict == ep[i].verdict && es[i].alexander == ep[i].alexander;
        row("unknot evidence sweep", ts, tp, same);
    }

    return 0;
}
