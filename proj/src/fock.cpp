#include "qub/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qub {

FockSpace::FockSpace(QuiverSpec s, std::vector<FockComponent> c)
    : spec(std::move(s)), comps(std::move(c)) {
    if (comps.empty()) throw std::invalid_argument("FockSpace: need at least one component");
    if (spec.minus_one_in_q)
        for (const auto& fc : comps)
            if (fc.sign != +1)
                throw std::invalid_argument(
                    "FockSpace: fold -1 into the exponent when -1 is a power of q");
}

FockElement basis_element(const FockSpace& space, MultiPartition mp) {
    if (int(mp.size()) != space.levels())
        throw std::invalid_argument("basis_element: level mismatch");
    FockElement x;
    x.space = space;
    x.terms[std::move(mp)] = 1;
    return x;
}

FockElement add(const FockElement& a, const FockElement& b) {
    if (a.terms.empty()) return b;
    if (b.terms.empty()) return a;
    if (!(a.space == b.space)) throw std::invalid_argument("add: mixed charges or quivers");
    FockElement r = a;
    for (const auto& [mp, c] : b.terms) {
        auto it = r.terms.find(mp);
        if (it == r.terms.end()) {
            if (c != 0) r.terms[mp] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

FockElement scale(long long c, const FockElement& a) {
    FockElement r;
    r.space = a.space;
    if (c == 0) return r;
    for (const auto& [mp, k] : a.terms) r.terms[mp] = c * k;
    return r;
}

namespace {

template <class Fn>
void for_each_addable(const Partition& lam, Fn&& fn) {
    int len = lam.length();
    for (int r = 1; r <= len + 1; ++r) {
        long row_len = r <= len ? lam.part(r - 1) : 0;
        if (r == 1 || row_len < lam.part(r - 2)) fn(r, row_len + 1);
    }
}

template <class Fn>
void for_each_removable(const Partition& lam, Fn&& fn) {
    int len = lam.length();
    for (int r = 1; r <= len; ++r) {
        long row_len = lam.part(r - 1);
        if (row_len > lam.part(r)) fn(r, row_len);
    }
}

Partition with_box(const Partition& lam, int row) {
    std::vector<long> parts = lam.parts();
    if (row - 1 < int(parts.size()))
        parts[row - 1]++;
    else
        parts.push_back(1);
    return Partition(parts);
}

Partition without_box(const Partition& lam, int row) {
    std::vector<long> parts = lam.parts();
    parts[row - 1]--;
    return Partition(parts);
}

}  // namespace

FockElement apply_f(const FockElement& x, const QuiverVertex& i) {
    FockElement out;
    out.space = x.space;
    const FockSpace& sp = x.space;
    for (const auto& [mp, c] : x.terms) {
        for (int p = 0; p < sp.levels(); ++p) {
            for_each_addable(mp[p], [&](int row, long col) {
                long content = sp.comps[p].charge + col - row;
                if (!(sp.vertex_at(p, content) == sp.spec.canonical(i.side, i.sign, i.exp))) return;
                MultiPartition nmp = mp;
                nmp[p] = with_box(mp[p], row);
                out.terms[nmp] += c;
                if (out.terms[nmp] == 0) out.terms.erase(nmp);
            });
        }
    }
    return out;
}

FockElement apply_e(const FockElement& x, const QuiverVertex& i) {
    FockElement out;
    out.space = x.space;
    const FockSpace& sp = x.space;
    for (const auto& [mp, c] : x.terms) {
        for (int p = 0; p < sp.levels(); ++p) {
            for_each_removable(mp[p], [&](int row, long col) {
                long content = sp.comps[p].charge + col - row;
                if (!(sp.vertex_at(p, content) == sp.spec.canonical(i.side, i.sign, i.exp))) return;
                MultiPartition nmp = mp;
                nmp[p] = without_box(mp[p], row);
                out.terms[nmp] += c;
                if (out.terms[nmp] == 0) out.terms.erase(nmp);
            });
        }
    }
    return out;
}

long coroot_eigenvalue(const FockSpace& space, const MultiPartition& mp, const QuiverVertex& i) {
    QuiverVertex v = space.spec.canonical(i.side, i.sign, i.exp);
    long n = 0;
    for (int p = 0; p < space.levels(); ++p) {
        for_each_addable(mp[p], [&](int row, long col) {
            if (space.vertex_at(p, space.comps[p].charge + col - row) == v) ++n;
        });
        for_each_removable(mp[p], [&](int row, long col) {
            if (space.vertex_at(p, space.comps[p].charge + col - row) == v) --n;
        });
    }
    return n;
}

long m_count(const FockSpace& space, const MultiPartition& mp, const QuiverVertex& i) {
    QuiverVertex v = space.spec.canonical(i.side, i.sign, i.exp);
    long n = 0;
    for (int p = 0; p < space.levels(); ++p)
        for (int r = 1; r <= mp[p].length(); ++r)
            for (long cidx = 1; cidx <= mp[p].part(r - 1); ++cidx)
                if (space.vertex_at(p, space.comps[p].charge + cidx - r) == v) ++n;
    return n;
}

Rat delta_charge(const std::vector<long>& charges, long e) {
    if (e < 1) throw std::invalid_argument("delta_charge: e must be positive");
    Rat total(0);
    for (long s : charges) {
        long k = mod_floor(s, e);
        Rat norm = Rat(k) - frac(k * k, e);  // |Lambda_{q^k}|^2 = min(k,k) - k*k/e
        total += norm / 2 + (frac(s * s, e) - Rat(s)) / 2;
    }
    return total;
}

std::string Weight::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : fundamental) {
        if (c == 0) continue;
        os << (first ? "" : " + ") << c.get_str() << "*L[" << v.str() << "]";
        first = false;
    }
    for (const auto& [k, c] : delta) {
        if (c == 0) continue;
        os << (first ? "" : " + ") << c.get_str() << "*delta"
           << (k.side == Side::primed ? "'" : "") << (k.sign < 0 ? "(-)" : "(+)");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void add_into(std::map<QuiverVertex, Rat>& m, const QuiverVertex& k, const Rat& c) {
    auto it = m.find(k);
    if (it == m.end()) {
        if (c != 0) m[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

void add_into(std::map<ComponentKey, Rat>& m, const ComponentKey& k, const Rat& c) {
    auto it = m.find(k);
    if (it == m.end()) {
        if (c != 0) m[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

ComponentKey key_of(const QuiverSpec& spec, const QuiverVertex& v) {
    QuiverVertex c = spec.canonical(v.side, v.sign, v.exp);
    return {c.side, c.sign};
}

}  // namespace

Weight weight_add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (const auto& [k, c] : b.fundamental) add_into(r.fundamental, k, c);
    for (const auto& [k, c] : b.delta) add_into(r.delta, k, c);
    return r;
}

Weight weight_scale(const Rat& c, const Weight& a) {
    Weight r;
    if (c == 0) return r;
    for (const auto& [k, v] : a.fundamental) r.fundamental[k] = c * v;
    for (const auto& [k, v] : a.delta) r.delta[k] = c * v;
    return r;
}

Weight simple_root(const QuiverSpec& spec, const QuiverVertex& i) {
    QuiverVertex v = spec.canonical(i.side, i.sign, i.exp);
    Weight a;
    add_into(a.fundamental, v, Rat(2));
    add_into(a.fundamental, spec.shift(v, 1), Rat(-1));
    add_into(a.fundamental, spec.shift(v, -1), Rat(-1));
    if (spec.finite() && v.exp == 0) add_into(a.delta, key_of(spec, v), Rat(1));
    return a;
}

Weight weight_of(const FockSpace& space, const MultiPartition& mp) {
    Weight w;
    const QuiverSpec& spec = space.spec;
    for (int p = 0; p < space.levels(); ++p) {
        const FockComponent& fc = space.comps[p];
        QuiverVertex v = space.vertex_at(p, fc.charge);
        add_into(w.fundamental, v, Rat(1));
        if (spec.finite())
            add_into(w.delta, key_of(spec, v), -delta_charge({fc.charge}, *spec.period));
    }
    // subtract sum over boxes of alpha_{residue}
    for (int p = 0; p < space.levels(); ++p)
        for (int r = 1; r <= mp[p].length(); ++r)
            for (long cidx = 1; cidx <= mp[p].part(r - 1); ++cidx) {
                QuiverVertex v = space.vertex_at(p, space.comps[p].charge + cidx - r);
                w = weight_add(w, weight_scale(Rat(-1), simple_root(spec, v)));
            }
    return w;
}

Rat bilinear_form(const QuiverSpec& spec, const Weight& a, const Weight& b) {
    Rat total(0);
    for (const auto& [va, ca] : a.fundamental)
        for (const auto& [vb, cb] : b.fundamental) {
            if (!spec.same_component(va, vb)) continue;
            Rat pair;
            if (spec.finite()) {
                long e = *spec.period;
                pair = Rat(std::min(va.exp, vb.exp)) - frac(va.exp * vb.exp, e);
            } else {
                pair = Rat(std::min(va.exp, vb.exp));
            }
            total += ca * cb * pair;
        }
    for (const auto& [ka, ca] : a.delta)
        for (const auto& [vb, cb] : b.fundamental)
            if (ka == ComponentKey{vb.side, vb.sign}) total += ca * cb;
    for (const auto& [kb, cb] : b.delta)
        for (const auto& [va, ca] : a.fundamental)
            if (kb == ComponentKey{va.side, va.sign}) total += ca * cb;
    return total;
}

Weight weyl_reflect(const QuiverSpec& spec, const Weight& w, const QuiverVertex& i) {
    Weight alpha = simple_root(spec, i);
    Rat n = bilinear_form(spec, alpha, w);
    return weight_add(w, weight_scale(-n, alpha));
}

bool same_weight_in_lattice(const QuiverSpec& spec, const Weight& a, const Weight& b) {
    if (!(a.fundamental == b.fundamental)) return false;
    for (Side side : {Side::unprimed, Side::primed}) {
        Rat sum_a(0), sum_b(0), first_a(0), first_b(0);
        for (const auto& [k, c] : a.delta)
            if (k.side == side) {
                sum_a += c;
                if (k.sign > 0) first_a = c;
            }
        for (const auto& [k, c] : b.delta)
            if (k.side == side) {
                sum_b += c;
                if (k.sign > 0) first_b = c;
            }
        if (sum_a != sum_b) return false;
        // Two components per side: differences along delta_1 - delta_2 are
        // identified when integral.
        if (spec.finite() && !spec.minus_one_in_q) {
            Rat diff = first_a - first_b;
            if (diff.get_den() != 1) return false;
        } else {
            if (first_a != first_b) return false;
        }
    }
    return true;
}

bool make_dominant(const QuiverSpec& spec, Weight& w, long& budget) {
    auto verts = spec.vertices();
    for (;;) {
        bool moved = false;
        for (const auto& v : verts) {
            Rat n = bilinear_form(spec, simple_root(spec, v), w);
            if (n < 0) {
                w = weight_add(w, weight_scale(-n, simple_root(spec, v)));
                moved = true;
                if (--budget <= 0) return false;
            }
        }
        if (!moved) return true;
    }
}

Rat derivation_eigenvalue(const FockSpace& space, const MultiPartition& mp, const ComponentKey& c) {
    if (!space.spec.finite())
        throw std::invalid_argument("derivation_eigenvalue: needs a finite quiver");
    std::vector<long> charges;
    for (const auto& fc : space.comps)
        if (key_of(space.spec, space.spec.canonical(fc.side, fc.sign, fc.charge)) == c)
            charges.push_back(fc.charge);
    QuiverVertex affine{c.side, c.sign, 0};
    return -(delta_charge(charges, *space.spec.period) + Rat(m_count(space, mp, affine)));
}

std::vector<TensorFactor> tensor_split(const FockSpace& space, const MultiPartition& mp) {
    std::vector<TensorFactor> out;
    for (int p = 0; p < space.levels(); ++p) {
        const FockComponent& fc = space.comps[p];
        ComponentKey k = key_of(space.spec, space.spec.canonical(fc.side, fc.sign, fc.charge));
        TensorFactor* slot = nullptr;
        for (auto& f : out)
            if (key_of(space.spec,
                       space.spec.canonical(f.space.comps[0].side, f.space.comps[0].sign,
                                            f.space.comps[0].charge)) == k)
                slot = &f;
        if (!slot) {
            out.push_back(TensorFactor{FockSpace{}, {}, {}});
            slot = &out.back();
            slot->space.spec = space.spec;
        }
        slot->space.comps.push_back(fc);
        slot->mp.push_back(mp[p]);
        slot->positions.push_back(p);
    }
    return out;
}

FockElement specialize_element(const FockElement& x, const QuiverSpec& to) {
    FockElement r;
    r.space = x.space;
    r.space.spec = to;
    if (to.minus_one_in_q) {
        for (auto& fc : r.space.comps) {
            if (fc.sign < 0)
                throw std::invalid_argument(
                    "specialize_element: choose integer charges before folding signs");
        }
    }
    r.terms = x.terms;
    return r;
}

}  // namespace qub
