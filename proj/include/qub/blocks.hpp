#pragma once

#include <string>
#include <vector>

#include "qub/fock.hpp"
#include "qub/symbol.hpp"

namespace qub {

// Modular context for SO_{2n+1}(q) at an odd prime l: f is the order of q
// mod l, d the order of q^2; l is linear when f is odd (then f = d),
// unitary otherwise (f = 2d).
struct ModularContext {
    long q = 3;
    long ell = 13;
    long f = 1;
    long d = 1;
    bool linear = true;

    QuiverSpec quiver() const;
};

// Throws std::invalid_argument unless q is an odd prime power, l an odd
// prime, and l does not divide q.
ModularContext make_context(long q, long ell);

// Quadratic-unipotent character label: a pair of odd-defect symbols.
struct CharacterLabel {
    Symbol theta_plus;
    Symbol theta_minus;
    long rank() const { return theta_plus.rank() + theta_minus.rank(); }
    bool operator==(const CharacterLabel&) const = default;
    auto operator<=>(const CharacterLabel&) const = default;
    std::string str() const;
};

// Isolated block label (Delta+, Delta-, w+, w-); Delta's are d-cores in the
// linear case and d-cocores in the unitary case.
struct BlockLabel {
    Symbol delta_plus;
    Symbol delta_minus;
    long w_plus = 0;
    long w_minus = 0;
    long rank(const ModularContext& ctx) const {
        return delta_plus.rank() + delta_minus.rank() + ctx.d * (w_plus + w_minus);
    }
    bool operator==(const BlockLabel&) const = default;
    auto operator<=>(const BlockLabel&) const = default;
    std::string str() const;
};

struct HCSeriesLabel {
    long t_plus = 0;
    long t_minus = 0;
    long m_plus = 0;
    long m_minus = 0;
    bool operator==(const HCSeriesLabel&) const = default;
};

BlockLabel block_of(const CharacterLabel& chi, const ModularContext& ctx);

struct DefectInfo {
    bool defect_zero = false;
    bool cyclic = false;
    bool abelian = false;
    Int abelian_order = 0;  // l^{a(w+ + w-)} when abelian, else 0
};
DefectInfo defect_info(const BlockLabel& b, const ModularContext& ctx);

HCSeriesLabel hc_series(const CharacterLabel& chi);
bool is_cuspidal(const CharacterLabel& chi);

// Harish-Chandra branching: F adds a 1-hook to Theta+, F' to Theta-.
std::vector<CharacterLabel> f_branch(const CharacterLabel& chi);
std::vector<CharacterLabel> fprime_branch(const CharacterLabel& chi);

CharacterLabel spinor_twist(const CharacterLabel& chi);

// Path-shaped Brauer tree of a cyclic isolated block:
// left.back() ... left.front() - exceptional - right.front() ... right.back()
// (left[k] = Lambda_{k+1}, right[k] = Xi_{k+1}).
struct BrauerTree {
    std::vector<CharacterLabel> left;
    std::vector<CharacterLabel> right;
    std::vector<std::string> edge_labels;  // opaque, one per edge
    long a = 0;
    long b = 0;
};

// Throws std::invalid_argument when the block is not cyclic.
BrauerTree brauer_tree(const CharacterLabel& chi, const ModularContext& ctx);

bool is_rock(const BlockLabel& b, const ModularContext& ctx);

// The Fock space hosting the characters of one Harish-Chandra sector.
FockSpace sector_space(const HCSeriesLabel& series, const ModularContext& ctx);

Weight weight_of_character(const CharacterLabel& chi, const ModularContext& ctx);

enum class OrbitStatus { same, different, inconclusive };
struct OrbitResult {
    OrbitStatus status = OrbitStatus::inconclusive;
    bool degree_vectors_equal = false;
    bool same_sector = false;  // equal core defects on both sides
    long reflections_used = 0;
};

// Decides whether the weights of two blocks lie in the same Weyl-group orbit
// by walking both to the dominant chamber (linear contexts). The status is
// inconclusive only if the walk exceeds max_steps.
OrbitResult weyl_orbit_same(const BlockLabel& b1, const BlockLabel& b2, const ModularContext& ctx,
                            long max_steps = 1000000);

// A character belonging to the block (hook- or cohook-filling).
CharacterLabel block_representative(const BlockLabel& b, const ModularContext& ctx);

std::vector<CharacterLabel> enumerate_characters(long n);
std::vector<BlockLabel> enumerate_blocks(long n, const ModularContext& ctx);

}  // namespace qub
