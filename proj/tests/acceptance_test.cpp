// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <set>

#include "oracles.hpp"
#include "qub/dimz.hpp"
#include "qub/heckeb.hpp"
#include "qub/scan.hpp"

using namespace qub;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void line(int idx, bool pass, const char* what, double secs, const std::string& extra = "") {
    std::printf("criterion %2d: %s  %-46s (%.2fs)%s%s\n", idx, pass ? "PASS" : "FAIL", what, secs,
                extra.empty() ? "" : "  ", extra.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

Exec mode() { return Exec::parallel; }

}  // namespace

int main() {
    // 1. beta-set / tau_e bijection roundtrips
    {
        Timer t;
        ScanResult r = beta_roundtrip_scan(12, 3, 4, mode());
        line(1, r.pass && t.secs() < 10.0, "beta-set and tau_e roundtrips", t.secs());
    }

    // 2. beta-set e-core against the rim-hook oracle
    {
        Timer t;
        bool ok = true;
        for (long n = 0; n <= 12 && ok; ++n)
            for (const auto& lam : partitions_of(n))
                for (int e = 1; e <= 4; ++e)
                    if (!(e_core_and_quotient(lam, 0, e).core ==
                          oracle::e_core_by_rim_hooks(lam, e))) {
                        ok = false;
                        break;
                    }
        line(2, ok, "e-core confluence vs rim-hook oracle", t.secs());
    }

    // 3. SYT identities
    {
        Timer t;
        bool ok = true;
        for (long h = 0; h <= 8; ++h) {
            Int total(0);
            for (const auto& lam : partitions_of(h)) total += syt_count(lam) * syt_count(lam);
            if (total != factorial(h)) ok = false;
        }
        for (long h = 0; h <= 6; ++h)
            for (const auto& lam : partitions_of(h))
                if (syt_count(lam) != oracle::syt_brute(lam)) ok = false;
        line(3, ok, "hook-length formula and sum f^2 = h!", t.secs());
    }

    // 4. symbol calculus
    {
        Timer t;
        bool ok = true;
        for (long tt = 0; tt <= 3 && ok; ++tt)
            for (long n = 0; n <= 6 && ok; ++n)
                for (long a = 0; a <= n && ok; ++a)
                    for (const auto& mu1 : partitions_of(a))
                        for (const auto& mu2 : partitions_of(n - a)) {
                            Symbol s = symbol_from_bipartition(tt, mu1, mu2);
                            if (s.defect() != 2 * tt + 1 || s.rank() != n + tt * (tt + 1)) ok = false;
                        }
        ScanResult conf = core_confluence_scan(8, 3, mode());
        line(4, ok && conf.pass, "symbol defect/rank and d-core confluence", t.secs());
    }

    // 5. Chevalley relations
    {
        Timer t;
        bool ok = true;
        for (long e : {2L, 3L, 4L})
            for (int levels : {1, 2})
                ok = ok && chevalley_scan(e, levels, 6, mode()).pass;
        line(5, ok && t.secs() < 60.0, "Chevalley [e_i, f_j] = delta_ij N_i", t.secs());
    }

    // 6. weight step
    {
        Timer t;
        bool ok = true;
        for (long e : {2L, 3L, 4L})
            for (int levels : {1, 2}) ok = ok && weight_step_scan(e, levels, 6, mode()).pass;
        line(6, ok, "wt(f_i v) = wt(v) - alpha_i", t.secs());
    }

    // 7. Hecke eigenvalue theorem
    {
        Timer t;
        bool ok = true;
        for (long tt : {0L, 1L, 2L})
            for (long q0 : {3L, 5L})
                for (int m = 1; m <= 3; ++m) {
                    RegularRep rep = regular_representation({tt, 0, m, 0}, Rat(q0));
                    auto spec = x_spectrum(rep, 0);
                    std::set<Rat> expect{rat_pow(Rat(-q0), tt), rat_pow(Rat(-q0), -1 - tt)};
                    if (std::set<Rat>(spec.begin(), spec.end()) != expect) ok = false;
                }
        line(7, ok && t.secs() < 30.0, "X_1 spectrum is (-q0)^t, (-q0)^{-1-t}", t.secs());
    }

    // 8. KLR relations after the eigenspace transform
    {
        Timer t;
        bool ok = true;
        std::string first;
        for (long tt : {0L, 1L})
            for (int m = 1; m <= 3; ++m) {
                CheckReport rep = klr_relation_check({tt, 0, m, 0}, Rat(3));
                if (!rep.pass) {
                    ok = false;
                    if (first.empty() && !rep.failures.empty()) first = rep.failures.front();
                }
            }
        line(8, ok, "quiver Hecke relations in the transformed rep", t.secs(), first);
    }

    // 9. disconnected cyclotomic decomposition
    {
        Timer t;
        bool ok = true;
        for (int m = 1; m <= 3; ++m)
            for (int mp = 0; mp <= m; ++mp) {
                DisconnectedReport rep =
                    disconnected_decomposition_check({0, 0, mp, m - mp}, Rat(3));
                if (!rep.report.pass) ok = false;
            }
        line(9, ok, "dim e(m)H = |J|^2 dim(H+ (x) H-) and pair ranks", t.secs());
    }

    // 10. minimal coset representatives
    {
        Timer t;
        ScanResult r = coset_scan(6, mode());
        line(10, r.pass, "pi_nu and lengths vs brute-force search", t.secs());
    }

    // 11. weight = block at (3,13) and (3,5)
    {
        Timer t;
        bool ok = true;
        for (auto [q, ell] : std::vector<std::pair<long, long>>{{3, 13}, {3, 5}})
            ok = ok && weight_block_scan(make_context(q, ell), 6, mode()).pass;
        line(11, ok && t.secs() < 120.0, "equal weight <=> same block, rank <= 6", t.secs());
    }

    // 12. Weyl orbits vs degree vectors (within Harish-Chandra sectors, per
    // the linear-prime theorem; cross-sector orbits verified disjoint)
    {
        Timer t;
        ScanResult r = weyl_orbit_scan(make_context(3, 13), 5, mode());
        line(12, r.pass, "Weyl orbit <=> degree vector (sector-scoped)", t.secs());
    }

    // 13. Brauer trees of cyclic blocks
    {
        Timer t;
        bool ok = true;
        for (auto [q, ell] : std::vector<std::pair<long, long>>{{3, 13}, {3, 5}})
            ok = ok && brauer_tree_scan(make_context(q, ell), 6, mode()).pass;
        line(13, ok, "cyclic-block trees: edge counts and cores", t.secs());
    }

    // 14. dimZ identity
    {
        Timer t;
        bool ok = true;
        for (long d : {1L, 2L})
            for (long wp = 0; wp <= 3; ++wp)
                for (long wm = 0; wp + wm <= 3; ++wm)
                    if (!dimz_identity_check(d, wp, wm).pass) ok = false;
        line(14, ok && t.secs() < 60.0, "sum m^2 = 2^w w+! w-! dim(KLf0), symbolic", t.secs());
    }

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
