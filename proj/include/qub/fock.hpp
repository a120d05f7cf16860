#pragma once

#include <map>
#include <string>
#include <vector>

#include "qub/partition.hpp"
#include "qub/quiver.hpp"

namespace qub {

// One level of a charged Fock space: xi_p = sign * q^charge on the given side.
struct FockComponent {
    Side side = Side::unprimed;
    int sign = +1;
    long charge = 0;
    bool operator==(const FockComponent&) const = default;
};

struct FockSpace {
    QuiverSpec spec;
    std::vector<FockComponent> comps;

    FockSpace() = default;
    FockSpace(QuiverSpec s, std::vector<FockComponent> c);

    int levels() const { return int(comps.size()); }
    // Residue of a box of shifted content c in component p: xi_p * q^(c - s_p).
    QuiverVertex vertex_at(int p, long shifted_content) const {
        return spec.canonical(comps[p].side, comps[p].sign, shifted_content);
    }
    bool operator==(const FockSpace&) const = default;
};

using MultiPartition = std::vector<Partition>;

// Finitely supported integer combination of basis vectors |mp, charges>.
struct FockElement {
    FockSpace space;
    std::map<MultiPartition, long long> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const FockElement&) const = default;
};

FockElement basis_element(const FockSpace& space, MultiPartition mp);
FockElement add(const FockElement& a, const FockElement& b);  // throws on space mismatch
FockElement scale(long long c, const FockElement& a);

FockElement apply_f(const FockElement& x, const QuiverVertex& i);
FockElement apply_e(const FockElement& x, const QuiverVertex& i);

// N_i = #addable - #removable i-boxes; M_i = #i-boxes in the diagram.
long coroot_eigenvalue(const FockSpace& space, const MultiPartition& mp, const QuiverVertex& i);
long m_count(const FockSpace& space, const MultiPartition& mp, const QuiverVertex& i);

// Delta(charges | e) as an exact rational.
Rat delta_charge(const std::vector<long>& charges, long e);

// Component of the weight lattice a delta-coefficient belongs to.
struct ComponentKey {
    Side side = Side::unprimed;
    int sign = +1;
    bool operator==(const ComponentKey&) const = default;
    auto operator<=>(const ComponentKey&) const = default;
};

struct Weight {
    std::map<QuiverVertex, Rat> fundamental;
    std::map<ComponentKey, Rat> delta;  // empty for infinite quivers

    bool operator==(const Weight&) const = default;
    std::string str() const;
};

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_scale(const Rat& c, const Weight& a);

Weight weight_of(const FockSpace& space, const MultiPartition& mp);

// Simple root alpha_i as a Weight (affine vertex of each component is
// exponent 0, which contributes the component's delta).
Weight simple_root(const QuiverSpec& spec, const QuiverVertex& i);

// Symmetric form: (L_k | L_l) = min(k,l) - kl/e within one component
// (plain min for infinite), 0 across; (L | delta_c) = 1 on c's component;
// (delta | delta) = 0.
Rat bilinear_form(const QuiverSpec& spec, const Weight& a, const Weight& b);

Weight weyl_reflect(const QuiverSpec& spec, const Weight& w, const QuiverVertex& i);

// Equality in the glued lattice X: fundamental parts equal; per side the
// delta total agrees and component-wise differences are integers.
bool same_weight_in_lattice(const QuiverSpec& spec, const Weight& a, const Weight& b);

// Reflects w into the dominant chamber (finite quivers); returns false when
// the step budget runs out.
bool make_dominant(const QuiverSpec& spec, Weight& w, long& budget);

// -(Delta(charges of c | e) + M_{affine vertex of c}); per-component derivation.
Rat derivation_eigenvalue(const FockSpace& space, const MultiPartition& mp, const ComponentKey& c);

// Splits a basis vector along quiver components (Omega classes), preserving
// component order of first appearance.
struct TensorFactor {
    FockSpace space;
    MultiPartition mp;
    std::vector<int> positions;  // original component indices
};
std::vector<TensorFactor> tensor_split(const FockSpace& space, const MultiPartition& mp);

// Transport along the quiver specialization (labels kept, spec replaced).
FockElement specialize_element(const FockElement& x, const QuiverSpec& to);

}  // namespace qub
