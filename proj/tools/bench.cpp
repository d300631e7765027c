// Benchmark of the OpenMP kernels against their serial references:
// Kloosterman table construction, the stationary-phase sweep, and the
// interval bucketing. Results are verified equal before timing is printed.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wkl/grid.hpp"
#include "wkl/intervals.hpp"
#include "wkl/kloosterman.hpp"
#include "wkl/parallel.hpp"

using namespace wkl;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    auto t0 = clock_type::now();
    f();
    return seconds_since(t0);
}

} // namespace

int main(int argc, char** argv) {
    std::string spec_text = argc > 1 ? argv[1] : "unramified:p=2,f=1,e=1,n=9";
    int64_t k = argc > 2 ? std::stoll(argv[2]) : 3;
    auto spec = RingSpec::parse(spec_text);
    AdditiveCharacter psi(spec, 0);
    const int workers = effective_workers(0);
    std::printf("ring %s  k = %lld  workers = %d\n", spec.describe().c_str(),
                static_cast<long long>(k), workers);

    KlTable serial_tab, parallel_tab;
    double ts = timed([&] { serial_tab = kl_brute_table_serial(spec, psi, k); });
    double tp = timed([&] { parallel_tab = kl_brute_table(spec, psi, k); });
    bool same = true;
    for (size_t i = 0; i < serial_tab.values.size(); ++i)
        same = same && serial_tab.values[i].coeffs() == parallel_tab.values[i].coeffs();
    std::printf("kl table      serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n", ts,
                tp, ts / tp, same ? "yes" : "NO");

    if (spec.n() >= 2) {
        std::vector<CycloVec> ss, sp;
        double us = timed([&] { ss = kl_stationary_sweep_serial(spec, psi, k); });
        double up = timed([&] { sp = kl_stationary_sweep(spec, psi, k); });
        bool eq = true;
        for (size_t i = 0; i < ss.size(); ++i) eq = eq && ss[i].coeffs() == sp[i].coeffs();
        std::printf("stationary    serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n",
                    us, up, us / up, eq ? "yes" : "NO");
    }

    IntervalConfig cfg{2, 1, 4, 6};
    std::vector<int64_t> is_, ip_;
    double vs = timed([&] { is_ = interval_sums_all_serial(cfg); });
    double vp = timed([&] { ip_ = interval_sums_all(cfg); });
    std::printf("intervals     serial %8.3fs  parallel %8.3fs  speedup %5.2fx  equal %s\n", vs,
                vp, vs / vp, is_ == ip_ ? "yes" : "NO");
    return 0;
}
