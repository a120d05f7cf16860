#include "qub/dimz.hpp"

#include <functional>
#include <sstream>

#include "qub/partition.hpp"

namespace qub {

MPoly MPoly::constant(const Int& c, int nvars) {
    MPoly p;
    if (c != 0) p.terms_[Key(nvars, 0)] = c;
    return p;
}

MPoly MPoly::variable(int idx, int nvars) {
    MPoly p;
    Key k(nvars, 0);
    k[idx] = 1;
    p.terms_[k] = 1;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            MPoly::Key k = ka;
            for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_[k] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

MPoly operator*(const Int& c, MPoly a) {
    if (c == 0) return MPoly();
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
}

MPoly MPoly::pow(int e, int nvars) const {
    MPoly acc = constant(1, nvars);
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] > 0) {
                os << "*" << names[i];
                if (k[i] > 1) os << "^" << k[i];
            }
        first = false;
    }
    return os.str();
}

namespace {

// One side of the multiplicity sum: all ways to spread w slots over d hook
// classes (l_0..l_{d-1}, each split into first/second-row slide partitions)
// and n_t distinguishable l-element class pairs (r_i >= 0, a partition nu^i
// each). Calls fn(count, monomial-exponents-over-side-vars) where `count`
// already carries the permutation factor, the 2^{r_i} class split, the
// binomial bead choices and the tableau counts.
struct SideTerm {
    Int count;
    std::vector<int> hook_exp;  // size d
    std::vector<int> class_exp;  // size n_t
};

void enumerate_side(long w, long d, long n_t, std::vector<SideTerm>& out) {
    // distribute w = sum l_alpha + sum r_i
    std::vector<long> l(d, 0), r(n_t, 0);
    auto emit = [&]() {
        // permutation factor w! / (prod l! prod r!) * prod 2^{r_i}
        Int base = factorial(w);
        for (long x : l) base /= factorial(x);
        for (long x : r) base /= factorial(x);
        for (long x : r)
            for (long i = 0; i < x; ++i) base *= 2;
        // Per hook class: split l into sigma + tau with a binomial bead
        // choice and tableau counts; per l-class, a partition of r. Distinct
        // partition data label distinct characters, so their squared
        // multiplicities add up independently per class.
        std::vector<Int> per_hook(d, Int(0));
        for (long a = 0; a < d; ++a) {
            Int s(0);
            for (long k = 0; k <= l[a]; ++k) {
                Int choose = binomial(l[a], k);
                Int inner(0);
                for (const auto& sg : partitions_of(k))
                    for (const auto& tu : partitions_of(l[a] - k)) {
                        Int f = syt_count(sg) * syt_count(tu);
                        inner += f * f;
                    }
                s += choose * choose * inner;
            }
            per_hook[a] = s;
        }
        std::vector<Int> per_class(n_t, Int(0));
        for (long i = 0; i < n_t; ++i) {
            Int s(0);
            for (const auto& nu : partitions_of(r[i])) {
                Int f = syt_count(nu);
                s += f * f;
            }
            per_class[i] = s;
        }
        // The character label includes the partition data, so the sum of
        // m^2 factors as base^2 * prod of per-class sums of squares.
        Int total = base * base;
        for (long a = 0; a < d; ++a) total *= per_hook[a];
        for (long i = 0; i < n_t; ++i) total *= per_class[i];
        SideTerm term;
        term.count = total;
        term.hook_exp.assign(l.begin(), l.end());
        term.class_exp.assign(r.begin(), r.end());
        out.push_back(std::move(term));
    };
    std::function<void(long, long)> rec = [&](long idx, long rest) {
        if (idx == d + n_t) {
            if (rest == 0) emit();
            return;
        }
        for (long take = 0; take <= rest; ++take) {
            (idx < d ? l[idx] : r[idx - d]) = take;
            rec(idx + 1, rest - take);
        }
        (idx < d ? l[idx] : r[idx - d]) = 0;
    };
    rec(0, w);
}

}  // namespace

DimZReport dimz_identity_check(long d, long w_plus, long w_minus) {
    // Variables: 0 = dim chi_{Delta+,Delta-}; 1..d hooks (+); d+1..2d hooks (-);
    // then w_plus l-classes (+) and w_minus l-classes (-).
    long n_tp = w_plus, n_tm = w_minus;
    int nvars = int(1 + 2 * d + n_tp + n_tm);
    std::vector<std::string> names{"D"};
    for (long a = 0; a < d; ++a) names.push_back("h" + std::to_string(a));
    for (long a = 0; a < d; ++a) names.push_back("h'" + std::to_string(a));
    for (long i = 0; i < n_tp; ++i) names.push_back("t" + std::to_string(i + 1));
    for (long i = 0; i < n_tm; ++i) names.push_back("t'" + std::to_string(i + 1));
    auto var = [&](int i) { return MPoly::variable(i, nvars); };

    std::vector<SideTerm> plus, minus;
    enumerate_side(w_plus, d, n_tp, plus);
    enumerate_side(w_minus, d, n_tm, minus);

    MPoly lhs;
    long terms = 0;
    for (const auto& p : plus)
        for (const auto& m : minus) {
            MPoly mono = MPoly::constant(p.count * m.count, nvars);
            mono *= var(0) * var(0);
            for (long a = 0; a < d; ++a) {
                for (int k = 0; k < 2 * p.hook_exp[a]; ++k) mono *= var(int(1 + a));
                for (int k = 0; k < 2 * m.hook_exp[a]; ++k) mono *= var(int(1 + d + a));
            }
            for (long i = 0; i < n_tp; ++i)
                for (int k = 0; k < 2 * p.class_exp[i]; ++k) mono *= var(int(1 + 2 * d + i));
            for (long i = 0; i < n_tm; ++i)
                for (int k = 0; k < 2 * m.class_exp[i]; ++k) mono *= var(int(1 + 2 * d + n_tp + i));
            lhs += mono;
            ++terms;
        }

    // RHS: 2^w w+! w-! D^2 (sum_a h_a^2 + 2 sum_i t_i^2)^{w+} (primed)^{w-}
    Int c = factorial(w_plus) * factorial(w_minus);
    for (long i = 0; i < w_plus + w_minus; ++i) c *= 2;
    MPoly slot_p = MPoly::constant(0, nvars), slot_m = MPoly::constant(0, nvars);
    for (long a = 0; a < d; ++a) {
        slot_p += var(int(1 + a)) * var(int(1 + a));
        slot_m += var(int(1 + d + a)) * var(int(1 + d + a));
    }
    for (long i = 0; i < n_tp; ++i)
        slot_p += Int(2) * (var(int(1 + 2 * d + i)) * var(int(1 + 2 * d + i)));
    for (long i = 0; i < n_tm; ++i)
        slot_m +=
            Int(2) * (var(int(1 + 2 * d + n_tp + i)) * var(int(1 + 2 * d + n_tp + i)));
    MPoly rhs = c * (var(0) * var(0) * slot_p.pow(int(w_plus), nvars) *
                     slot_m.pow(int(w_minus), nvars));

    DimZReport rep;
    rep.pass = lhs == rhs;
    rep.lhs = lhs.str(names);
    rep.rhs = rhs.str(names);
    rep.terms_lhs = terms;
    return rep;
}

}  // namespace qub
