#include "qub/symbol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qub {

long ChargedSymbol::rank() const {
    long D = defect();
    return first.partition.size() + second.partition.size() + (D * D) / 4;
}

ChargedSymbol ChargedSymbol::shifted(long m) const {
    return {{first.partition, first.charge + m}, {second.partition, second.charge + m}};
}

Symbol::Symbol(const ChargedSymbol& cs) {
    ChargedSymbol s = cs;
    if (s.defect() < 0) s = s.swapped();
    s = s.shifted(-s.second.charge);
    if (s.defect() == 0 && s.first.partition < s.second.partition) s = s.swapped();
    nf_ = s;
}

std::string Symbol::str() const {
    std::ostringstream os;
    os << "{" << nf_.first.partition.str() << "@" << nf_.first.charge << " | "
       << nf_.second.partition.str() << "@" << nf_.second.charge << "}";
    return os.str();
}

Symbol symbol_from_bipartition(long t, const Partition& mu1, const Partition& mu2) {
    if (t < 0) throw std::invalid_argument("symbol_from_bipartition: t must be >= 0");
    return Symbol(ChargedSymbol{{mu1, t}, {mu2, -t - 1}});
}

std::pair<long, std::pair<Partition, Partition>> bipartition_from_symbol(const Symbol& sym) {
    long D = sym.defect();
    if (D % 2 == 0) throw std::invalid_argument("bipartition_from_symbol: defect must be odd");
    long t = (D - 1) / 2;
    // Normal form has charges (2t+1, 0); Theta_t(mu) has (t, -t-1): shift by -(t+1).
    return {t, {sym.normal_form().first.partition, sym.normal_form().second.partition}};
}

namespace {

const ChargedBetaSet& row_of(const ChargedSymbol& cs, int row) {
    return row == 0 ? cs.first : cs.second;
}

// Replaces the given row by the set (window, everything <= tail_top present)
// and renormalizes.
Symbol rebuild(const ChargedSymbol& nf, int row, std::vector<long> entries, long tail_top) {
    ChargedBetaSet nb = beta_from_entries(std::move(entries), tail_top);
    ChargedSymbol out = nf;
    (row == 0 ? out.first : out.second) = nb;
    return Symbol(out);
}

// Window of explicit entries of `cb` strictly above `floor`.
std::vector<long> window_above(const ChargedBetaSet& cb, long floor) {
    std::vector<long> out;
    long v = cb.tail_top();
    for (long x = v; x > floor; --x) out.push_back(x);
    for (int u = 0; u < cb.partition.length(); ++u) {
        long e = cb.partition.part(u) + cb.charge - u;
        if (e > v && e > floor) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), std::greater<long>());
    return out;
}

}  // namespace

std::vector<HookRef> d_hooks(const Symbol& sym, long d) {
    if (d < 1) throw std::invalid_argument("d_hooks: d must be positive");
    std::vector<HookRef> out;
    for (int r = 0; r < 2; ++r) {
        const ChargedBetaSet& cb = row_of(sym.normal_form(), r);
        for (long top : window_above(cb, cb.tail_top() - d))
            if (cb.contains(top) && !cb.contains(top - d)) out.push_back({r, top - d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Symbol remove_d_hook(const Symbol& sym, long d, const HookRef& hook) {
    const ChargedBetaSet& cb = row_of(sym.normal_form(), hook.row);
    if (!cb.contains(hook.x + d) || cb.contains(hook.x))
        throw std::invalid_argument("remove_d_hook: no such hook");
    long floor = std::min(cb.tail_top(), hook.x) - 1;
    std::vector<long> win = window_above(cb, floor);
    std::erase(win, hook.x + d);
    win.push_back(hook.x);
    return rebuild(sym.normal_form(), hook.row, std::move(win), floor);
}

std::vector<HookRef> d_cohooks(const Symbol& sym, long d) {
    if (d < 1) throw std::invalid_argument("d_cohooks: d must be positive");
    std::vector<HookRef> out;
    for (int r = 0; r < 2; ++r) {
        const ChargedBetaSet& a = row_of(sym.normal_form(), r);
        const ChargedBetaSet& b = row_of(sym.normal_form(), 1 - r);
        // x must be above b's tail; x + d must be in a.
        long floor = b.tail_top();
        for (long top : window_above(a, floor + d))
            if (top - d > floor && !b.contains(top - d)) out.push_back({r, top - d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Symbol remove_d_cohook(const Symbol& sym, long d, const HookRef& cohook) {
    const ChargedBetaSet& a = row_of(sym.normal_form(), cohook.row);
    const ChargedBetaSet& b = row_of(sym.normal_form(), 1 - cohook.row);
    if (!a.contains(cohook.x + d) || b.contains(cohook.x))
        throw std::invalid_argument("remove_d_cohook: no such cohook");
    long floor = std::min({a.tail_top(), b.tail_top(), cohook.x}) - 1;
    std::vector<long> wa = window_above(a, floor);
    std::vector<long> wb = window_above(b, floor);
    std::erase(wa, cohook.x + d);
    wb.push_back(cohook.x);
    ChargedSymbol out = sym.normal_form();
    (cohook.row == 0 ? out.first : out.second) = beta_from_entries(std::move(wa), floor);
    (cohook.row == 0 ? out.second : out.first) = beta_from_entries(std::move(wb), floor);
    return Symbol(out);
}

std::vector<HookRef> d_hook_additions(const Symbol& sym, long d, int row) {
    const ChargedBetaSet& cb = row_of(sym.normal_form(), row);
    std::vector<HookRef> out;
    for (long x : window_above(cb, cb.tail_top() - d - 1))
        if (cb.contains(x) && !cb.contains(x + d)) out.push_back({row, x});
    std::sort(out.begin(), out.end());
    return out;
}

Symbol add_d_hook(const Symbol& sym, long d, const HookRef& hook) {
    const ChargedBetaSet& cb = row_of(sym.normal_form(), hook.row);
    if (!cb.contains(hook.x) || cb.contains(hook.x + d))
        throw std::invalid_argument("add_d_hook: cannot add here");
    long floor = std::min(cb.tail_top(), hook.x) - 1;
    std::vector<long> win = window_above(cb, floor);
    std::erase(win, hook.x);
    win.push_back(hook.x + d);
    return rebuild(sym.normal_form(), hook.row, std::move(win), floor);
}

std::vector<HookRef> d_cohook_additions(const Symbol& sym, long d, int row) {
    // Take x out of the other row, land x+d in `row`.
    const ChargedBetaSet& a = row_of(sym.normal_form(), 1 - row);  // source of x
    const ChargedBetaSet& b = row_of(sym.normal_form(), row);      // target of x+d
    std::vector<HookRef> out;
    long floor = std::min(a.tail_top(), b.tail_top()) - d - 1;
    for (long x : window_above(a, floor))
        if (!b.contains(x + d)) out.push_back({row, x});
    std::sort(out.begin(), out.end());
    return out;
}

Symbol add_d_cohook(const Symbol& sym, long d, const HookRef& cohook) {
    const ChargedBetaSet& a = row_of(sym.normal_form(), 1 - cohook.row);
    const ChargedBetaSet& b = row_of(sym.normal_form(), cohook.row);
    if (!a.contains(cohook.x) || b.contains(cohook.x + d))
        throw std::invalid_argument("add_d_cohook: cannot add here");
    long floor = std::min({a.tail_top(), b.tail_top(), cohook.x}) - 1;
    std::vector<long> wa = window_above(a, floor);
    std::vector<long> wb = window_above(b, floor);
    std::erase(wa, cohook.x);
    wb.push_back(cohook.x + d);
    ChargedSymbol out = sym.normal_form();
    (cohook.row == 0 ? out.second : out.first) = beta_from_entries(std::move(wa), floor);
    (cohook.row == 0 ? out.first : out.second) = beta_from_entries(std::move(wb), floor);
    return Symbol(out);
}

Symbol d_core(const Symbol& sym, long d) {
    Symbol cur = sym;
    for (;;) {
        auto hooks = d_hooks(cur, d);
        if (hooks.empty()) return cur;
        cur = remove_d_hook(cur, d, hooks.front());
    }
}

Symbol d_cocore(const Symbol& sym, long d) {
    Symbol cur = sym;
    for (;;) {
        auto hooks = d_cohooks(cur, d);
        if (hooks.empty()) return cur;
        cur = remove_d_cohook(cur, d, hooks.front());
    }
}

bool is_d_core(const Symbol& sym, long d) { return d_hooks(sym, d).empty(); }
bool is_d_cocore(const Symbol& sym, long d) { return d_cohooks(sym, d).empty(); }

Abacus2d to_abacus(const Symbol& sym, long d) {
    if (d < 1) throw std::invalid_argument("to_abacus: d must be positive");
    Abacus2d ab;
    ab.d = d;
    ab.runners.resize(2 * d);
    for (int r = 0; r < 2; ++r) {
        const ChargedBetaSet& cb = row_of(sym.normal_form(), r);
        long tail = cb.tail_top();
        for (long j = 0; j < d; ++j)
            ab.runners[r * d + j].full_below = floor_div(tail - j, d);
        // Sporadic beads come from entries above the tail.
        for (long v : window_above(cb, tail)) {
            long j = mod_floor(v, d);
            ab.runners[r * d + j].beads.push_back((v - j) / d);
        }
        for (long j = 0; j < d; ++j) {
            auto& run = ab.runners[r * d + j];
            std::sort(run.beads.begin(), run.beads.end(), std::greater<long>());
        }
    }
    return ab;
}

Symbol from_abacus(const Abacus2d& ab) {
    long d = ab.d;
    if (d < 1 || long(ab.runners.size()) != 2 * d)
        throw std::invalid_argument("from_abacus: need 2d runners");
    ChargedBetaSet rows[2];
    for (int r = 0; r < 2; ++r) {
        for (long j = 0; j < d; ++j) {
            const auto& run = ab.runners[r * d + j];
            for (size_t k = 1; k < run.beads.size(); ++k)
                if (run.beads[k] >= run.beads[k - 1])
                    throw std::invalid_argument("from_abacus: bead rows must strictly decrease");
            if (!run.beads.empty() && run.beads.back() <= run.full_below)
                throw std::invalid_argument("from_abacus: bead inside the full region");
        }
        // Everything at or below the smallest per-runner full value is present.
        long floor_val = d * ab.runners[r * d].full_below;
        for (long j = 1; j < d; ++j)
            floor_val = std::min(floor_val, d * ab.runners[r * d + j].full_below + j);
        std::vector<long> win;
        for (long j = 0; j < d; ++j) {
            const auto& run = ab.runners[r * d + j];
            for (long i : run.beads) win.push_back(d * i + j);
            for (long i = run.full_below; d * i + j > floor_val; --i) win.push_back(d * i + j);
        }
        rows[r] = beta_from_entries(std::move(win), floor_val);
    }
    return Symbol(ChargedSymbol{rows[0], rows[1]});
}

std::string render_abacus(const Abacus2d& ab) {
    long hi = 0, lo = 0;
    bool any = false;
    for (const auto& run : ab.runners) {
        long top = run.beads.empty() ? run.full_below : run.beads.front();
        long bot = run.full_below;
        if (!any) {
            hi = top;
            lo = bot;
            any = true;
        } else {
            hi = std::max(hi, top);
            lo = std::min(lo, bot);
        }
    }
    std::ostringstream os;
    for (long i = hi + 1; i >= lo - 1; --i) {
        for (size_t r = 0; r < ab.runners.size(); ++r) {
            const auto& run = ab.runners[r];
            bool bead = i <= run.full_below ||
                        std::find(run.beads.begin(), run.beads.end(), i) != run.beads.end();
            if (r == size_t(ab.d)) os << ' ';
            os << (bead ? "●" : "·");
        }
        os << '\n';
    }
    return os.str();
}

bool is_rouquier_core(const Symbol& core, long d, long omega) {
    if (!is_d_core(core, d)) throw std::invalid_argument("is_rouquier_core: not a d-core");
    const ChargedSymbol& nf = core.normal_form();
    long m_min = -1 - std::min(nf.first.tail_top(), nf.second.tail_top());
    for (long m = m_min; m < m_min + 2 * d; ++m) {
        ChargedSymbol s = nf.shifted(m);
        std::vector<long> count(2 * d, 0);
        for (int r = 0; r < 2; ++r) {
            const ChargedBetaSet& cb = row_of(s, r);
            for (long v : window_above(cb, -1)) count[r * d + mod_floor(v, d)]++;
        }
        bool ok = true;
        for (long i = 1; i < 2 * d && ok; ++i) {
            if (i == d) continue;  // runner d is not compared with runner d-1
            if (count[i] - count[i - 1] < omega - 1) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

std::vector<Symbol> enumerate_odd_defect_symbols(long rank) {
    std::vector<Symbol> out;
    for (long t = 0; t * (t + 1) <= rank; ++t) {
        long rest = rank - t * (t + 1);
        for (long a = 0; a <= rest; ++a)
            for (const auto& mu1 : partitions_of(a))
                for (const auto& mu2 : partitions_of(rest - a))
                    out.push_back(symbol_from_bipartition(t, mu1, mu2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qub
