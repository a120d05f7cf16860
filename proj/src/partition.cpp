#include "qub/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qub {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t u = 0; u < parts_.size(); ++u) {
        if (parts_[u] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (u > 0 && parts_[u] > parts_[u - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> conj(parts_[0], 0);
    for (long p : parts_)
        for (long j = 0; j < p; ++j) conj[j]++;
    return Partition(conj);
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

std::vector<long> ChargedBetaSet::entries(int count) const {
    return beta_set(partition, charge, count);
}

bool ChargedBetaSet::contains(long v) const {
    if (v <= tail_top()) return true;
    for (int u = 0; u < partition.length(); ++u)
        if (partition.part(u) + charge - u == v) return true;
    return false;
}

long ChargedMultiPartition::size() const {
    long n = 0;
    for (const auto& p : components) n += p.size();
    return n;
}

std::vector<long> beta_set(const Partition& lambda, long s, int count) {
    if (count < 1) throw std::invalid_argument("beta_set: count must be positive");
    std::vector<long> out;
    out.reserve(count);
    for (int u = 1; u <= count; ++u) out.push_back(lambda.part(u - 1) + s + 1 - u);
    return out;
}

ChargedBetaSet partition_from_beta(const std::vector<long>& head) {
    for (size_t i = 1; i < head.size(); ++i)
        if (head[i] >= head[i - 1])
            throw std::invalid_argument("partition_from_beta: entries must strictly decrease");
    if (head.empty()) throw std::invalid_argument("partition_from_beta: empty description");
    long k = long(head.size());
    long s = head.back() + k - 1;  // forced by the consecutive tail
    std::vector<long> parts;
    for (long u = 1; u <= k; ++u) {
        long lam = head[u - 1] - s - 1 + u;
        if (lam < 0) throw std::invalid_argument("partition_from_beta: inconsistent gap structure");
        if (lam > 0) parts.push_back(lam);
    }
    return {Partition(parts), s};
}

ChargedBetaSet beta_from_entries(std::vector<long> entries, long tail_top) {
    std::sort(entries.begin(), entries.end(), std::greater<long>());
    // Entries at or below the tail are redundant.
    while (!entries.empty() && entries.back() <= tail_top) entries.pop_back();
    entries.push_back(tail_top);
    entries.push_back(tail_top - 1);
    return partition_from_beta(entries);
}

ChargedBetaSet beta_from_quotient(const ChargedMultiPartition& quotient) {
    int l = quotient.levels();
    if (l < 1) throw std::invalid_argument("beta_from_quotient: need at least one component");
    if (quotient.charges.size() != quotient.components.size())
        throw std::invalid_argument("beta_from_quotient: component/charge length mismatch");
    // Floor below which the union p - l + l*beta_{s_p} is a consecutive run.
    long floor = 0;
    for (int p = 1; p <= l; ++p) {
        long t = p - l + l * (quotient.charges[p - 1] - quotient.components[p - 1].length());
        if (p == 1 || t < floor) floor = t;
    }
    long tail_top = floor - l;
    std::vector<long> window;
    for (int p = 1; p <= l; ++p) {
        const auto& comp = quotient.components[p - 1];
        long sp = quotient.charges[p - 1];
        // Materialize down past the common floor; everything lower is in the tail.
        long need_y = (tail_top - (p - l)) / l - 2;
        int depth = int(std::max<long>(comp.length() + 1, sp + 1 - need_y));
        for (long y : beta_set(comp, sp, depth)) {
            long x = p - l + l * y;
            if (x > tail_top) window.push_back(x);
        }
    }
    return beta_from_entries(window, tail_top);
}

CoreQuotient e_core_and_quotient(const Partition& lambda, long s, int e) {
    if (e < 1) throw std::invalid_argument("e_core_and_quotient: e must be positive");
    int depth = lambda.length() + e + 1;
    std::vector<long> entries = beta_set(lambda, s, depth);
    // Split into residue classes: x = p - e + e*y with p in 1..e determined by x mod e.
    std::vector<std::vector<long>> cls(e);
    for (long x : entries) {
        long p = mod_floor(x, e);
        if (p == 0) p = e;
        cls[p - 1].push_back((x - p + e) / e);
    }
    ChargedMultiPartition quot;
    quot.components.resize(e);
    quot.charges.resize(e);
    for (int p = 0; p < e; ++p) {
        auto& ys = cls[p];
        std::sort(ys.begin(), ys.end(), std::greater<long>());
        // The materialized window may cut the class mid-run; entries below the
        // guaranteed-full floor of beta_s(lambda) are consecutive, so feed the
        // head plus one synthetic tail step.
        ChargedBetaSet cb = beta_from_entries(ys, ys.empty() ? 0 : ys.back() - 1);
        quot.components[p] = cb.partition;
        quot.charges[p] = cb.charge;
    }
    // Core: same charges, empty components.
    ChargedMultiPartition core_q;
    core_q.components.assign(e, Partition{});
    core_q.charges = quot.charges;
    ChargedBetaSet core_set = beta_from_quotient(core_q);
    CoreQuotient out;
    out.core = core_set.partition;
    out.quotient = quot;
    out.weight = quot.size();
    return out;
}

long content_of(const Node& node, const std::vector<long>& charges) {
    if (node.comp < 1 || node.comp > int(charges.size()))
        throw std::invalid_argument("content_of: component out of range");
    return charges[node.comp - 1] + node.col - node.row;
}

AddRemove addable_removable_nodes(const std::vector<Partition>& comps,
                                  const std::vector<long>& charges, long c, long e) {
    AddRemove out;
    auto matches = [&](long cont) { return e == 0 ? cont == c : mod_floor(cont - c, e) == 0; };
    for (int p = 1; p <= int(comps.size()); ++p) {
        const Partition& lam = comps[p - 1];
        int len = lam.length();
        for (int r = 1; r <= len + 1; ++r) {
            long row_len = r <= len ? lam.part(r - 1) : 0;
            long above = r == 1 ? -1 : lam.part(r - 2);  // -1 = unbounded first row
            // addable box at (r, row_len+1) iff it keeps rows non-increasing
            if (r == 1 || row_len < above) {
                Node n{r, int(row_len + 1), p};
                if (matches(content_of(n, charges))) out.addable.push_back(n);
            }
            // removable box at (r, row_len) iff the next row is shorter
            if (r <= len && row_len > lam.part(r)) {
                Node n{r, int(row_len), p};
                if (matches(content_of(n, charges))) out.removable.push_back(n);
            }
        }
    }
    return out;
}

Int syt_count(const Partition& lambda) {
    long n = lambda.size();
    if (n == 0) return Int(1);
    Partition conj = lambda.conjugate();
    Int numer = factorial(n);
    Int denom(1);
    for (int r = 1; r <= lambda.length(); ++r)
        for (long cidx = 1; cidx <= lambda.part(r - 1); ++cidx) {
            long hook = (lambda.part(r - 1) - cidx) + (conj.part(int(cidx) - 1) - r) + 1;
            denom *= hook;
        }
    return numer / denom;
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<std::vector<Partition>> multipartitions_of(long n, int l) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(l);
    auto rec = [&](auto&& self, int p, long rest) -> void {
        if (p == l - 1) {
            for (auto& lam : partitions_of(rest)) {
                cur[p] = lam;
                out.push_back(cur);
            }
            return;
        }
        for (long k = 0; k <= rest; ++k)
            for (auto& lam : partitions_of(k)) {
                cur[p] = lam;
                self(self, p + 1, rest - k);
            }
    };
    if (l >= 1) rec(rec, 0, n);
    return out;
}

Partition partition_from_string(const std::string& csv) {
    std::vector<long> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stol(tok));
    }
    return Partition(parts);
}

}  // namespace qub
