#include "qub/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qub {

std::string QuiverVertex::str() const {
    std::ostringstream os;
    os << (side == Side::primed ? "i'" : "i") << "(" << (sign < 0 ? "-" : "") << "q^" << exp << ")";
    return os.str();
}

std::vector<QuiverVertex> QuiverSpec::vertices() const {
    if (!finite()) throw std::invalid_argument("QuiverSpec::vertices: infinite quiver");
    std::vector<QuiverVertex> out;
    for (Side side : {Side::unprimed, Side::primed}) {
        if (minus_one_in_q) {
            for (long e = 0; e < *period; ++e) out.push_back({side, +1, e});
        } else {
            for (int sign : {+1, -1})
                for (long e = 0; e < *period; ++e) out.push_back({side, sign, e});
        }
    }
    return out;
}

QuiverSpec build_quiver(std::optional<long> q_order, std::optional<long> minus_one_exp) {
    QuiverSpec spec;
    if (q_order && *q_order < 1) throw std::invalid_argument("build_quiver: order must be positive");
    if (minus_one_exp) {
        if (!q_order) throw std::invalid_argument("build_quiver: -1 in q^Z needs finite order");
        if (*q_order != 2 * *minus_one_exp)
            throw std::invalid_argument("build_quiver: q^e = -1 forces order 2e");
    }
    spec.period = q_order;
    spec.minus_one_in_q = minus_one_exp.has_value();
    return spec;
}

namespace {

// Arrow s -> t, i.e. t = q*s inside one component.
bool arrow(const QuiverSpec& spec, const QuiverVertex& s, const QuiverVertex& t) {
    if (!spec.same_component(s, t)) return false;
    return spec.shift(s, 1) == t && !(s == t);
}

}  // namespace

int cartan_entry(const QuiverSpec& spec, const QuiverVertex& s, const QuiverVertex& t) {
    QuiverVertex cs = spec.canonical(s.side, s.sign, s.exp);
    QuiverVertex ct = spec.canonical(t.side, t.sign, t.exp);
    if (cs == ct) return 2;
    if (arrow(spec, cs, ct) || arrow(spec, ct, cs)) return -1;
    return 0;
}

bool QPolynomial::operator==(const QPolynomial& o) const {
    auto norm = [](const QPolynomial& p) {
        std::vector<std::tuple<int, int, Rat>> v;
        for (const auto& t : p.terms)
            if (t.coef != 0) v.emplace_back(t.du, t.dv, t.coef);
        std::sort(v.begin(), v.end());
        return v;
    };
    return norm(*this) == norm(o);
}

QPolynomial q_polynomial(const QuiverSpec& spec, const QuiverVertex& s, const QuiverVertex& t) {
    QuiverVertex cs = spec.canonical(s.side, s.sign, s.exp);
    QuiverVertex ct = spec.canonical(t.side, t.sign, t.exp);
    QPolynomial p;
    if (cs == ct) return p;  // 0
    if (arrow(spec, cs, ct)) {
        p.terms = {{Rat(1), 0, 1}, {Rat(-1), 1, 0}};  // v - u
        return p;
    }
    if (arrow(spec, ct, cs)) {
        p.terms = {{Rat(1), 1, 0}, {Rat(-1), 0, 1}};  // u - v
        return p;
    }
    p.terms = {{Rat(1), 0, 0}};  // non-adjacent, including the primed/unprimed crossing
    return p;
}

QuiverVertex specialize(const QuiverSpec& from, const QuiverSpec& to, const QuiverVertex& v) {
    if (from.finite() && !(from == to))
        throw std::invalid_argument("specialize: source must be the infinite quiver");
    return to.canonical(v.side, v.sign, v.exp);
}

}  // namespace qub
