#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qub/partition.hpp"

namespace qub {

// Pair of charged beta-sets (X, Y). Defect = s1 - s2 (signed); the rank is
// |mu1| + |mu2| + floor(defect^2 / 4).
struct ChargedSymbol {
    ChargedBetaSet first;
    ChargedBetaSet second;

    long defect() const { return first.charge - second.charge; }
    long rank() const;
    ChargedSymbol swapped() const { return {second, first}; }
    ChargedSymbol shifted(long m) const;
    bool operator==(const ChargedSymbol&) const = default;
    auto operator<=>(const ChargedSymbol&) const = default;
};

// Orbit of charged symbols under shift and row swap, held in normal form:
// charges (D, 0) with D >= 0; for D = 0 the lexicographically larger row
// comes first.
class Symbol {
public:
    Symbol() : Symbol(ChargedSymbol{{{}, 0}, {{}, 0}}) {}
    explicit Symbol(const ChargedSymbol& cs);

    const ChargedSymbol& normal_form() const { return nf_; }
    long defect() const { return nf_.defect(); }
    long rank() const { return nf_.rank(); }
    const Partition& row_partition(int row) const {
        return row == 0 ? nf_.first.partition : nf_.second.partition;
    }

    bool operator==(const Symbol&) const = default;
    auto operator<=>(const Symbol&) const = default;

    std::string str() const;

private:
    ChargedSymbol nf_;
};

// The symbol Theta_t(mu) = { beta_t(mu1), beta_{-t-1}(mu2) }: defect 2t+1,
// rank |mu| + t(t+1).
Symbol symbol_from_bipartition(long t, const Partition& mu1, const Partition& mu2);

// Inverse for odd-defect symbols; t = (defect-1)/2 >= 0.
// Throws std::invalid_argument on even defect.
std::pair<long, std::pair<Partition, Partition>> bipartition_from_symbol(const Symbol& sym);

// A d-hook (x, x+d) inside row `row`; a d-cohook (x, x+d) with x+d in row
// `row` and x missing from the other row.
struct HookRef {
    int row = 0;  // 0 = first row of the normal form, 1 = second
    long x = 0;
    bool operator==(const HookRef&) const = default;
    auto operator<=>(const HookRef&) const = default;
};

std::vector<HookRef> d_hooks(const Symbol& sym, long d);
Symbol remove_d_hook(const Symbol& sym, long d, const HookRef& hook);
std::vector<HookRef> d_cohooks(const Symbol& sym, long d);
Symbol remove_d_cohook(const Symbol& sym, long d, const HookRef& cohook);

// Additions: a d-hook added inside `row`; a d-cohook added so that x+d lands
// in `row` (the partner value x is removed from the other row).
std::vector<HookRef> d_hook_additions(const Symbol& sym, long d, int row);
Symbol add_d_hook(const Symbol& sym, long d, const HookRef& hook);
std::vector<HookRef> d_cohook_additions(const Symbol& sym, long d, int row);
Symbol add_d_cohook(const Symbol& sym, long d, const HookRef& cohook);

Symbol d_core(const Symbol& sym, long d);
Symbol d_cocore(const Symbol& sym, long d);
bool is_d_core(const Symbol& sym, long d);
bool is_d_cocore(const Symbol& sym, long d);

// 2d-runner abacus. Runner j < d encodes row X, runner d+j row Y: a bead in
// row i of runner j means d*i + j lies in the corresponding beta-set. Each
// runner holds finitely many beads above `full_below` and is full at and
// below it.
struct Abacus2d {
    long d = 1;
    struct Runner {
        std::vector<long> beads;  // rows > full_below holding a bead, descending
        long full_below = -1;
    };
    std::vector<Runner> runners;  // size 2d
};

Abacus2d to_abacus(const Symbol& sym, long d);
Symbol from_abacus(const Abacus2d& ab);

// One character per position, beads as filled dots, within the row window
// covering all sporadic beads (plus one margin row each side).
std::string render_abacus(const Abacus2d& ab);

// Existence, over all abacus presentations (shifts making every bead row
// index with negative values full), of runner counts with
// count(i) >= count(i-1) + omega - 1 for i in 1..d-1 and d+1..2d-1.
// Counts are periodic in the shift with period 2d, so the search is exact.
// Throws std::invalid_argument if `core` has a d-hook.
bool is_rouquier_core(const Symbol& core, long d, long omega);

// All odd-defect symbols of the given rank, in normal form, sorted.
std::vector<Symbol> enumerate_odd_defect_symbols(long rank);

}  // namespace qub
