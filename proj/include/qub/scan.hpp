#pragma once

#include <string>
#include <vector>

#include "qub/blocks.hpp"
#include "qub/parallel.hpp"

namespace qub {

// Bulk exact-arithmetic verification kernels. Each kernel walks a flat item
// list; with Exec::parallel the loop runs under OpenMP, writing into
// per-item slots so results do not depend on scheduling. Exec::serial is the
// reference path used to validate the parallel one.
struct ScanResult {
    bool pass = true;
    long items = 0;
    long failures = 0;
    std::vector<std::string> messages;  // first few failure descriptions

    void note_failure(const std::string& msg) {
        pass = false;
        ++failures;
        if (messages.size() < 8) messages.push_back(msg);
    }
};

// Roundtrips beta_set/partition_from_beta and the tau_e bijection, and
// checks |lambda| = e*|quotient| + |core|, over all |lambda| <= max_n,
// |charge| <= max_charge, 1 <= e <= max_e.
ScanResult beta_roundtrip_scan(long max_n, long max_charge, long max_e, Exec mode);

// Explores every d-hook removal order of every odd-defect symbol of rank
// <= max_rank for d <= max_d and checks all orders end at d_core.
ScanResult core_confluence_scan(long max_rank, long max_d, Exec mode);

// Chevalley relation [e_i, f_j] = delta_ij N_i on all basis vectors with
// the given number of components, size <= max_size, charges in [-1, 2].
ScanResult chevalley_scan(long e, int levels, long max_size, Exec mode);

// wt(f_i v) = wt(v) - alpha_i on the same item space.
ScanResult weight_step_scan(long e, int levels, long max_size, Exec mode);

// Equal weight <=> same block (with equal rank) over all character pairs of
// rank <= max_rank.
ScanResult weight_block_scan(const ModularContext& ctx, long max_rank, Exec mode);

// Weyl-orbit test against degree vectors over all block pairs of rank
// <= max_rank; within a sector the two must agree, across sectors the
// orbits must differ. Inconclusive walks count as failures.
ScanResult weyl_orbit_scan(const ModularContext& ctx, long max_rank, Exec mode);

// Brauer trees of all cyclic blocks of rank <= max_rank: edge counts and
// vertex (co)cores.
ScanResult brauer_tree_scan(const ModularContext& ctx, long max_rank, Exec mode);

// pi_nu and its length against breadth-first search over S_m, m <= max_m.
ScanResult coset_scan(int max_m, Exec mode);

}  // namespace qub
