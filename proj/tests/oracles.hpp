#pragma once

// Independent oracles used only by tests. These work directly on Young
// diagrams so the library's beta-set computations are checked through a
// second route.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qub/partition.hpp"

namespace qub::oracle {

// All ways to remove one border strip (rim hook) of length e from lam.
// A skew shape lam/mu is a border strip iff its rows form an interval
// [r1, r2], every row of the interval loses at least one box, and
// mu_u = lam_{u+1} - 1 for r1 <= u < r2.
inline std::vector<qub::Partition> rim_hook_removals(const qub::Partition& lam, int e) {
    std::vector<qub::Partition> out;
    int len = lam.length();
    for (int r1 = 1; r1 <= len; ++r1) {
        for (int r2 = r1; r2 <= len; ++r2) {
            std::vector<long> mu = lam.parts();
            bool ok = true;
            long removed = 0;
            for (int u = r1; u < r2; ++u) {
                mu[u - 1] = lam.part(u) - 1;
                if (mu[u - 1] < 0) {
                    ok = false;
                    break;
                }
                removed += lam.part(u - 1) - mu[u - 1];
            }
            if (!ok) continue;
            long last = lam.part(r2 - 1) - (e - removed);
            mu[r2 - 1] = last;
            // Strip must lose at least one box per row and leave a partition.
            if (last < 0 || last >= lam.part(r2 - 1)) continue;
            if (last < lam.part(r2)) continue;
            if (r1 > 1 && mu[r1 - 1 - 1] < mu[r1 - 1]) continue;
            bool valid = true;
            for (int u = r1; u <= r2; ++u) {
                if (lam.part(u - 1) - mu[u - 1] < 1) valid = false;
                if (u > 1 && mu[u - 1] > mu[u - 2]) valid = false;
            }
            if (!valid) continue;
            out.emplace_back(mu);
        }
    }
    return out;
}

// Removes rim e-hooks in every possible order; throws if different orders
// reach different hook-free shapes.
inline qub::Partition e_core_by_rim_hooks(const qub::Partition& lam, int e) {
    std::set<qub::Partition> seen;
    std::set<qub::Partition> cores;
    auto rec = [&](auto&& self, const qub::Partition& p) -> void {
        if (seen.count(p)) return;
        seen.insert(p);
        auto next = rim_hook_removals(p, e);
        if (next.empty()) {
            cores.insert(p);
            return;
        }
        for (const auto& q : next) self(self, q);
    };
    rec(rec, lam);
    if (cores.size() != 1) throw std::logic_error("rim-hook core is not confluent");
    return *cores.begin();
}

// Brute-force count of standard Young tableaux by placing 1..n.
inline long syt_brute(const qub::Partition& lam) {
    std::vector<long> fill(lam.length(), 0);
    long count = 0;
    long n = lam.size();
    auto rec = [&](auto&& self, long placed) -> void {
        if (placed == n) {
            ++count;
            return;
        }
        for (int r = 0; r < lam.length(); ++r) {
            if (fill[r] >= lam.part(r)) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;
            fill[r]++;
            self(self, placed + 1);
            fill[r]--;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace qub::oracle
