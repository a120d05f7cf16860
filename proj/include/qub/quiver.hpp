#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qub/rational.hpp"

namespace qub {

enum class Side { unprimed, primed };

// Vertex of the quiver K = I ⊔ I'. Vertices stand for field elements
// sign * q^exponent; the primed copy is kept formally disjoint.
struct QuiverVertex {
    Side side = Side::unprimed;
    int sign = +1;  // +1 or -1; always +1 in specs where -1 is a power of q
    long exp = 0;   // reduced into [0, period) when the period is finite

    bool operator==(const QuiverVertex&) const = default;
    auto operator<=>(const QuiverVertex&) const = default;
    std::string str() const;
};

// Arrow structure: within each component, an arrow exp -> exp+1 (mod period).
// Linear finite case: 4 cyclic components of size `period` keyed by
// (side, sign). Unitary case (minus_one_in_q): 2 cyclic components of size
// `period`, signs folded via -1 = q^(period/2). Infinite case: 4 components
// of type A_infinity.
struct QuiverSpec {
    std::optional<long> period;  // order of q; nullopt = infinite
    bool minus_one_in_q = false;

    bool finite() const { return period.has_value(); }

    QuiverVertex canonical(Side side, int sign, long exp) const {
        if (!finite()) return {side, sign, exp};
        long p = *period;
        if (minus_one_in_q && sign < 0) return {side, +1, mod_floor(exp + p / 2, p)};
        return {side, sign, mod_floor(exp, p)};
    }

    QuiverVertex shift(const QuiverVertex& v, long by) const {
        return canonical(v.side, v.sign, v.exp + by);
    }

    bool same_component(const QuiverVertex& a, const QuiverVertex& b) const {
        return a.side == b.side && a.sign == b.sign;
    }

    // All vertices (finite specs only).
    std::vector<QuiverVertex> vertices() const;
    // Component count: 2 when -1 is a q-power, else 4.
    int component_count() const { return minus_one_in_q ? 2 : 4; }
    bool operator==(const QuiverSpec&) const = default;
};

// q_order: order of q in the coefficient field, or nullopt for infinite.
// minus_one_exp: the e with q^e = -1 when -1 lies in q^Z (requires
// q_order = 2e); nullopt otherwise. Throws on inconsistent data.
QuiverSpec build_quiver(std::optional<long> q_order, std::optional<long> minus_one_exp);

// Cartan pairing: 2 on the diagonal, -1 for adjacent vertices, else 0.
int cartan_entry(const QuiverSpec& spec, const QuiverVertex& s, const QuiverVertex& t);

// The KLR polynomial matrix entry Q_{st}(u, v) as a sparse bivariate
// polynomial: list of (coefficient, deg_u, deg_v).
struct QPolynomial {
    struct Term {
        Rat coef;
        int du = 0;
        int dv = 0;
    };
    std::vector<Term> terms;
    bool operator==(const QPolynomial& o) const;
};

QPolynomial q_polynomial(const QuiverSpec& spec, const QuiverVertex& s, const QuiverVertex& t);

// Characteristic-l specialization of vertices; `from` must be the infinite
// spec (or equal to `to`).
QuiverVertex specialize(const QuiverSpec& from, const QuiverSpec& to, const QuiverVertex& v);

}  // namespace qub
