#include "qub/scan.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "qub/heckeb.hpp"

namespace qub {

namespace {

struct ItemOutcome {
    bool ok = true;
    std::string msg;
};

ScanResult reduce(std::vector<ItemOutcome>& slots) {
    ScanResult res;
    res.items = long(slots.size());
    for (const auto& s : slots)
        if (!s.ok) res.note_failure(s.msg);
    return res;
}

}  // namespace

ScanResult beta_roundtrip_scan(long max_n, long max_charge, long max_e, Exec mode) {
    struct Item {
        Partition lam;
        long s;
    };
    std::vector<Item> items;
    for (long n = 0; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (long s = -max_charge; s <= max_charge; ++s) items.push_back({lam, s});
    std::vector<ItemOutcome> slots(items.size());
    parallel_for(mode, long(items.size()), [&](long i) {
        const auto& [lam, s] = items[i];
        auto head = beta_set(lam, s, lam.length() + 2);
        auto back = partition_from_beta(head);
        if (!(back.partition == lam && back.charge == s)) {
            slots[i] = {false, "beta roundtrip failed at " + lam.str()};
            return;
        }
        for (long e = 1; e <= max_e; ++e) {
            CoreQuotient cq = e_core_and_quotient(lam, s, e);
            if (lam.size() != e * cq.weight + cq.core.size()) {
                slots[i] = {false, "weight identity failed at " + lam.str()};
                return;
            }
            ChargedBetaSet rec = beta_from_quotient(cq.quotient);
            if (!(rec.partition == lam && rec.charge == s)) {
                slots[i] = {false, "tau_e roundtrip failed at " + lam.str()};
                return;
            }
        }
    });
    return reduce(slots);
}

ScanResult core_confluence_scan(long max_rank, long max_d, Exec mode) {
    struct Item {
        Symbol sym;
        long d;
    };
    std::vector<Item> items;
    for (long r = 0; r <= max_rank; ++r)
        for (const auto& s : enumerate_odd_defect_symbols(r))
            for (long d = 1; d <= max_d; ++d) items.push_back({s, d});
    std::vector<ItemOutcome> slots(items.size());
    parallel_for(mode, long(items.size()), [&](long i) {
        const auto& [sym, d] = items[i];
        std::set<Symbol> seen, ends;
        auto rec = [&](auto&& self, const Symbol& cur) -> void {
            if (!seen.insert(cur).second) return;
            auto hooks = d_hooks(cur, d);
            if (hooks.empty()) {
                ends.insert(cur);
                return;
            }
            for (const auto& h : hooks) self(self, remove_d_hook(cur, d, h));
        };
        rec(rec, sym);
        if (ends.size() != 1 || !(*ends.begin() == d_core(sym, d)))
            slots[i] = {false, "core not confluent at " + sym.str()};
    });
    return reduce(slots);
}

namespace {

std::vector<std::pair<std::vector<long>, MultiPartition>> fock_items(int levels, long max_size) {
    std::vector<std::pair<std::vector<long>, MultiPartition>> items;
    std::vector<long> charges(levels, -1);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == levels) {
            for (long n = 0; n <= max_size; ++n)
                for (const auto& mp : multipartitions_of(n, levels)) items.push_back({charges, mp});
            return;
        }
        for (long c = -1; c <= 2; ++c) {
            charges[p] = c;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    return items;
}

}  // namespace

ScanResult chevalley_scan(long e, int levels, long max_size, Exec mode) {
    auto items = fock_items(levels, max_size);
    std::vector<ItemOutcome> slots(items.size());
    QuiverSpec spec = build_quiver(e, {});
    parallel_for(mode, long(items.size()), [&](long idx) {
        const auto& [charges, mp] = items[idx];
        std::vector<FockComponent> comps;
        for (long c : charges) comps.push_back({Side::unprimed, +1, c});
        FockSpace sp(spec, comps);
        FockElement v = basis_element(sp, mp);
        for (long i = 0; i < e; ++i)
            for (long j = 0; j < e; ++j) {
                QuiverVertex vi{Side::unprimed, +1, i}, vj{Side::unprimed, +1, j};
                FockElement lhs = add(apply_e(apply_f(v, vj), vi),
                                      scale(-1, apply_f(apply_e(v, vi), vj)));
                FockElement rhs = i == j ? scale(coroot_eigenvalue(sp, mp, vi), v) : FockElement{};
                if (!(lhs.terms == rhs.terms)) {
                    slots[idx] = {false, "Chevalley failed on a size-" +
                                             std::to_string(mp[0].size() + mp[1].size()) +
                                             " vector"};
                    return;
                }
            }
    });
    return reduce(slots);
}

ScanResult weight_step_scan(long e, int levels, long max_size, Exec mode) {
    auto items = fock_items(levels, max_size);
    std::vector<ItemOutcome> slots(items.size());
    QuiverSpec spec = build_quiver(e, {});
    parallel_for(mode, long(items.size()), [&](long idx) {
        const auto& [charges, mp] = items[idx];
        std::vector<FockComponent> comps;
        for (long c : charges) comps.push_back({Side::unprimed, +1, c});
        FockSpace sp(spec, comps);
        Weight w = weight_of(sp, mp);
        for (long i = 0; i < e; ++i) {
            QuiverVertex vi{Side::unprimed, +1, i};
            Weight expect = weight_add(w, weight_scale(Rat(-1), simple_root(spec, vi)));
            for (const auto& [child, c] : apply_f(basis_element(sp, mp), vi).terms)
                if (!(weight_of(sp, child) == expect)) {
                    slots[idx] = {false, "weight step failed"};
                    return;
                }
        }
    });
    return reduce(slots);
}

ScanResult weight_block_scan(const ModularContext& ctx, long max_rank, Exec mode) {
    std::vector<CharacterLabel> chars;
    for (long n = 0; n <= max_rank; ++n)
        for (auto& c : enumerate_characters(n)) chars.push_back(c);
    std::vector<Weight> weights(chars.size());
    std::vector<BlockLabel> blocks(chars.size());
    parallel_for(mode, long(chars.size()), [&](long i) {
        weights[i] = weight_of_character(chars[i], ctx);
        blocks[i] = block_of(chars[i], ctx);
    });
    QuiverSpec spec = ctx.quiver();
    std::vector<ItemOutcome> slots(chars.size());
    parallel_for(mode, long(chars.size()), [&](long i) {
        for (size_t j = i + 1; j < chars.size(); ++j) {
            bool sw = same_weight_in_lattice(spec, weights[i], weights[j]);
            bool sb = blocks[i] == blocks[j] && chars[i].rank() == chars[j].rank();
            if (sw != sb) {
                slots[i] = {false, chars[i].str() + " vs " + chars[j].str()};
                return;
            }
        }
    });
    ScanResult res = reduce(slots);
    res.items = long(chars.size());
    return res;
}

ScanResult weyl_orbit_scan(const ModularContext& ctx, long max_rank, Exec mode) {
    std::vector<BlockLabel> blocks;
    for (long n = 0; n <= max_rank; ++n)
        for (auto& b : enumerate_blocks(n, ctx)) blocks.push_back(b);
    // Canonicalize each block's weight once.
    QuiverSpec spec = ctx.quiver();
    std::vector<Weight> dom(blocks.size());
    std::vector<char> ok(blocks.size(), 1);
    parallel_for(mode, long(blocks.size()), [&](long i) {
        Weight w = weight_of_character(block_representative(blocks[i], ctx), ctx);
        long budget = 1000000;
        if (!make_dominant(spec, w, budget)) {
            ok[i] = 0;
            return;
        }
        dom[i] = w;
    });
    std::vector<ItemOutcome> slots(blocks.size());
    parallel_for(mode, long(blocks.size()), [&](long i) {
        if (!ok[i]) {
            slots[i] = {false, "inconclusive walk at " + blocks[i].str()};
            return;
        }
        for (size_t j = i; j < blocks.size(); ++j) {
            bool same_orbit = same_weight_in_lattice(spec, dom[i], dom[j]);
            bool same_sector = blocks[i].delta_plus.defect() == blocks[j].delta_plus.defect() &&
                               blocks[i].delta_minus.defect() == blocks[j].delta_minus.defect();
            bool dv_equal = blocks[i].w_plus == blocks[j].w_plus &&
                            blocks[i].w_minus == blocks[j].w_minus;
            bool expect = same_sector ? dv_equal : false;
            if (same_orbit != expect) {
                slots[i] = {false, blocks[i].str() + " vs " + blocks[j].str()};
                return;
            }
        }
    });
    ScanResult res = reduce(slots);
    res.items = long(blocks.size());
    return res;
}

ScanResult brauer_tree_scan(const ModularContext& ctx, long max_rank, Exec mode) {
    std::vector<CharacterLabel> cyclic;
    for (long n = 0; n <= max_rank; ++n)
        for (auto& c : enumerate_characters(n))
            if (defect_info(block_of(c, ctx), ctx).cyclic) cyclic.push_back(c);
    std::vector<ItemOutcome> slots(cyclic.size());
    parallel_for(mode, long(cyclic.size()), [&](long i) {
        const CharacterLabel& chi = cyclic[i];
        BlockLabel b = block_of(chi, ctx);
        BrauerTree tree = brauer_tree(chi, ctx);
        long D = b.w_plus == 1 ? b.delta_plus.defect() : b.delta_minus.defect();
        long expect_a = ctx.linear ? ctx.d : ctx.d + D;
        long expect_b = ctx.linear ? ctx.d : ctx.d - D;
        if (tree.a != expect_a || tree.b != expect_b ||
            tree.edge_labels.size() != size_t(tree.a + tree.b)) {
            slots[i] = {false, "edge counts wrong at " + chi.str()};
            return;
        }
        for (const auto& branch : {tree.left, tree.right})
            for (const auto& lab : branch)
                if (!(block_of(lab, ctx) == b)) {
                    slots[i] = {false, "vertex outside block at " + chi.str()};
                    return;
                }
    });
    ScanResult res = reduce(slots);
    return res;
}

namespace {

// Minimal-length w in S_m with w.nu sorted, found by plain BFS. Used only to
// cross-check pi_nu.
std::pair<std::vector<int>, long> coset_bfs(const SignVector& nu) {
    int m = int(nu.size());
    SignVector nu0 = nu;
    std::sort(nu0.begin(), nu0.end(), std::greater<int>());
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 1);
    std::map<std::vector<int>, long> dist;
    std::queue<std::vector<int>> q;
    dist[id] = 0;
    q.push(id);
    while (!q.empty()) {
        auto w = q.front();
        q.pop();
        SignVector moved(m);
        for (int i = 1; i <= m; ++i) {
            int j = int(std::find(w.begin(), w.end(), i) - w.begin());
            moved[i - 1] = nu[j];
        }
        if (moved == nu0) return {w, dist[w]};
        for (int s2 = 1; s2 < m; ++s2) {
            auto next = w;
            for (auto& v : next)
                if (v == s2)
                    v = s2 + 1;
                else if (v == s2 + 1)
                    v = s2;
            if (!dist.count(next)) {
                dist[next] = dist[w] + 1;
                q.push(next);
            }
        }
    }
    return {id, 0};
}

}  // namespace

ScanResult coset_scan(int max_m, Exec mode) {
    std::vector<SignVector> items;
    for (int m = 1; m <= max_m; ++m)
        for (int mp = 0; mp <= m; ++mp)
            for (auto& nu : jm_set(mp, m - mp)) items.push_back(nu);
    std::vector<ItemOutcome> slots(items.size());
    parallel_for(mode, long(items.size()), [&](long i) {
        auto [w, len] = coset_bfs(items[i]);
        if (pi_nu(items[i]) != w || pi_length(items[i]) != len)
            slots[i] = {false, "coset mismatch at m = " + std::to_string(items[i].size())};
    });
    return reduce(slots);
}

}  // namespace qub