// Benchmark: serial vs parallel sweep evaluation, with a result checksum to
// confirm both paths produce identical output.

#include <chrono>
#include <cstdio>
#include <functional>

#include "periflow/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace periflow;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double checksum(const SweepResult& r) {
    double acc = 0.0;
    for (const SweepPoint& pt : r.points) {
        if (!pt.ok) continue;
        if (is_profile_quantity(r.spec.quantity)) {
            for (const auto& [y, v] : pt.profile.samples) acc += y + v;
        } else {
            acc += pt.scalar;
        }
    }
    return acc;
}

void bench(const char* name, const SweepSpec& spec) {
    SweepResult serial_result, parallel_result;
    // warm-up
    run_sweep(spec, ExecutionPolicy::parallel);
    const double t_serial =
        time_ms([&] { serial_result = run_sweep(spec, ExecutionPolicy::serial); });
    const double t_parallel = time_ms(
        [&] { parallel_result = run_sweep(spec, ExecutionPolicy::parallel); });
    const double c1 = checksum(serial_result), c2 = checksum(parallel_result);
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %5.2fx   %s\n",
                name, t_serial, t_parallel, t_serial / t_parallel,
                c1 == c2 ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    FlowParameters base;
    base.reynolds_R = 15;
    base.wave_number_alpha = 0.25;
    base.porosity_e = 0.9;
    base.darcy_k = 1000;
    base.slip_s = 1e-4;
    base.amplitude_ratio_eps = 0.1;

    SweepSpec critical;
    critical.base = base;
    critical.axis = Axis::R;
    critical.values = AxisSpec::range(1.0, 30.0, 20000);
    critical.quantity = Quantity::critical_pressure;
    bench("critical pressure x 20000", critical);

    SweepSpec profiles;
    profiles.base = base;
    profiles.dp2_mean = -2.5;
    profiles.axis = Axis::R;
    profiles.values = AxisSpec::range(1.0, 30.0, 256);
    profiles.quantity = Quantity::mean_velocity;
    profiles.y_samples = 4001;
    bench("256 profiles x 4001 samples", profiles);

    SweepSpec dsweep;
    dsweep.base = base;
    dsweep.axis = Axis::k;
    dsweep.values = AxisSpec::range(0.05, 1e4, 20000, Spacing::log);
    dsweep.quantity = Quantity::D;
    bench("wall constant D x 20000", dsweep);
    return 0;
}
