// Compares the serial reference kernels against the OpenMP ones on the
// heavier exact-arithmetic scans and reports speedups.

#include <chrono>
#include <cstdio>

#include "qub/scan.hpp"

using namespace qub;

namespace {

template <class F>
double time_run(F&& fn, bool& pass) {
    auto t0 = std::chrono::steady_clock::now();
    ScanResult r = fn();
    auto t1 = std::chrono::steady_clock::now();
    pass = r.pass;
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool ok) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, ok ? "ok" : "FAILED");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", thread_count());
    bool ok1s, ok1p, ok2s, ok2p, ok3s, ok3p, ok4s, ok4p;

    double s1 = time_run([] { return chevalley_scan(3, 2, 6, Exec::serial); }, ok1s);
    double p1 = time_run([] { return chevalley_scan(3, 2, 6, Exec::parallel); }, ok1p);
    report("chevalley e=3 size<=6", s1, p1, ok1s && ok1p);

    ModularContext lin = make_context(3, 13);
    double s2 = time_run([&] { return weight_block_scan(lin, 7, Exec::serial); }, ok2s);
    double p2 = time_run([&] { return weight_block_scan(lin, 7, Exec::parallel); }, ok2p);
    report("weight-block (3,13) rank<=7", s2, p2, ok2s && ok2p);

    double s3 = time_run([&] { return weyl_orbit_scan(lin, 5, Exec::serial); }, ok3s);
    double p3 = time_run([&] { return weyl_orbit_scan(lin, 5, Exec::parallel); }, ok3p);
    report("weyl-orbit (3,13) rank<=5", s3, p3, ok3s && ok3p);

    double s4 = time_run([] { return core_confluence_scan(8, 3, Exec::serial); }, ok4s);
    double p4 = time_run([] { return core_confluence_scan(8, 3, Exec::parallel); }, ok4p);
    report("core confluence rank<=8", s4, p4, ok4s && ok4p);

    bool all = ok1s && ok1p && ok2s && ok2p && ok3s && ok3p && ok4s && ok4p;
    return all ? 0 : 1;
}
