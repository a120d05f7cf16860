#include "qub/heckeb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qub {

SignedPerm::SignedPerm(std::vector<int> img) : img_(std::move(img)) {
    int m = int(img_.size());
    std::vector<bool> seen(m + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > m || seen[a]) throw std::invalid_argument("SignedPerm: not a permutation");
        seen[a] = true;
    }
}

SignedPerm SignedPerm::identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    return SignedPerm(img);
}

int SignedPerm::apply(int i) const {
    if (i > 0) return img_[i - 1];
    return -img_[-i - 1];
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= int(img_.size()); ++i) img[i - 1] = apply(o.apply(i));
    return SignedPerm(img);
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= int(img_.size()); ++i) {
        int v = img_[i - 1];
        img[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return SignedPerm(img);
}

bool SignedPerm::is_identity() const {
    for (int i = 1; i <= int(img_.size()); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

long SignedPerm::length() const {
    long inv = 0, neg = 0;
    int m = int(img_.size());
    for (int i = 0; i < m; ++i) {
        if (img_[i] < 0) neg += -img_[i];
        for (int j = i + 1; j < m; ++j)
            if (img_[i] > img_[j]) ++inv;
    }
    return inv + neg;
}

SignedPerm SignedPerm::gen_t1(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    img[0] = -1;
    return SignedPerm(img);
}

SignedPerm SignedPerm::gen_s(int m, int i) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 2], img[i - 1]);
    return SignedPerm(img);
}

std::vector<SignedPerm> SignedPerm::all(int m) {
    std::vector<SignedPerm> out;
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 1);
    std::sort(base.begin(), base.end());
    do {
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> img = base;
            for (int k = 0; k < m; ++k)
                if (mask & (1 << k)) img[k] = -img[k];
            out.emplace_back(img);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

long HeckeParams::basis_dim() const {
    long d = 1;
    for (int i = 1; i <= m_plus; ++i) d *= 2 * i;
    for (int i = 1; i <= m_minus; ++i) d *= 2 * i;
    return d;
}

Laurent HeckeAlgebra::gen_parameter(int g) const {
    if (g < params.m_plus)
        return g == 0 ? Laurent::q_power(2 * params.t_plus + 1) : Laurent::q_power(1);
    int h = g - params.m_plus;
    return h == 0 ? Laurent::q_power(2 * params.t_minus + 1) : Laurent::q_power(1);
}

BWord HeckeAlgebra::gen_word(int g) const {
    BWord w{SignedPerm::identity(params.m_plus), SignedPerm::identity(params.m_minus)};
    if (g < params.m_plus)
        w.plus = g == 0 ? SignedPerm::gen_t1(params.m_plus)
                        : SignedPerm::gen_s(params.m_plus, g + 1);
    else {
        int h = g - params.m_plus;
        w.minus = h == 0 ? SignedPerm::gen_t1(params.m_minus)
                         : SignedPerm::gen_s(params.m_minus, h + 1);
    }
    return w;
}

HeckeElement HeckeAlgebra::one() const {
    return basis({SignedPerm::identity(params.m_plus), SignedPerm::identity(params.m_minus)});
}

HeckeElement HeckeAlgebra::basis(const BWord& w) const {
    HeckeElement e;
    e.params = params;
    e.terms[w] = Laurent(Rat(1));
    return e;
}

HeckeElement HeckeAlgebra::scalar(const Laurent& c) const {
    HeckeElement e = one();
    if (c.is_zero())
        e.terms.clear();
    else
        e.terms.begin()->second = c;
    return e;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
    if (!(a.params == b.params)) throw std::invalid_argument("Hecke add: parameter mismatch");
    HeckeElement r = a;
    for (const auto& [w, c] : b.terms) {
        auto it = r.terms.find(w);
        if (it == r.terms.end()) {
            if (!c.is_zero()) r.terms[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

HeckeElement HeckeAlgebra::scale(const Laurent& c, const HeckeElement& a) const {
    HeckeElement r;
    r.params = a.params;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : a.terms) r.terms[w] = c * k;
    return r;
}

HeckeElement HeckeAlgebra::mul_gen(int g, const HeckeElement& a) const {
    BWord gw = gen_word(g);
    Laurent Q = gen_parameter(g);
    Laurent Qm1 = Q - Laurent(Rat(1));
    HeckeElement r;
    r.params = params;
    auto addterm = [&](const BWord& w, const Laurent& c) {
        if (c.is_zero()) return;
        auto it = r.terms.find(w);
        if (it == r.terms.end())
            r.terms[w] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    };
    for (const auto& [w, c] : a.terms) {
        BWord prod{gw.plus.compose(w.plus), gw.minus.compose(w.minus)};
        if (prod.length() > w.length()) {
            addterm(prod, c);
        } else {
            addterm(prod, Q * c);
            addterm(w, Qm1 * c);
        }
    }
    return r;
}

namespace {

// Left descent decomposition: w = g1 g2 ... gk (reduced).
std::vector<int> reduced_word(const HeckeAlgebra& alg, const BWord& w) {
    std::vector<int> gens;
    BWord cur = w;
    long len = cur.length();
    while (len > 0) {
        bool found = false;
        for (int g = 0; g < alg.num_generators(); ++g) {
            BWord gw = alg.gen_word(g);
            BWord next{gw.plus.compose(cur.plus), gw.minus.compose(cur.minus)};
            if (next.length() < len) {
                gens.push_back(g);
                cur = next;
                len = next.length();
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("reduced_word: no descent found");
    }
    return gens;
}

}  // namespace

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
    if (!(a.params == b.params)) throw std::invalid_argument("Hecke multiply: parameter mismatch");
    HeckeElement result;
    result.params = params;
    for (const auto& [wa, ca] : a.terms) {
        std::vector<int> gens = reduced_word(*this, wa);
        HeckeElement cur = b;
        for (auto it = gens.rbegin(); it != gens.rend(); ++it) cur = mul_gen(*it, cur);
        result = add(result, scale(ca, cur));
    }
    return result;
}

std::vector<HeckeElement> HeckeAlgebra::x_generators() const {
    std::vector<HeckeElement> xs;
    // X_1 = (-1)^{t} q^{-t-1} T_{v_1}; X_{k+1} = q^{-1} T_{v_{k+1}} X_k T_{v_{k+1}}.
    auto build_factor = [&](int m, long t, int gen_offset) {
        if (m == 0) return;
        Rat sign = mod_floor(t, 2) == 0 ? Rat(1) : Rat(-1);
        HeckeElement last = scale(Laurent(sign, -t - 1), basis(gen_word(gen_offset)));
        xs.push_back(last);
        for (int k = 1; k < m; ++k) {
            HeckeElement tk = basis(gen_word(gen_offset + k));
            last = scale(Laurent(Rat(1), -1), multiply(tk, multiply(last, tk)));
            xs.push_back(last);
        }
    };
    build_factor(params.m_plus, params.t_plus, 0);
    build_factor(params.m_minus, params.t_minus, params.m_plus);
    return xs;
}

std::vector<BWord> HeckeAlgebra::basis_words() const {
    std::vector<BWord> words;
    for (const auto& p : SignedPerm::all(params.m_plus))
        for (const auto& m : SignedPerm::all(params.m_minus)) words.push_back({p, m});
    std::sort(words.begin(), words.end());
    return words;
}

QMat HeckeAlgebra::regular_matrix(const HeckeElement& a, const Rat& q0) const {
    std::vector<BWord> words = basis_words();
    std::map<BWord, int> index;
    for (int i = 0; i < int(words.size()); ++i) index[words[i]] = i;
    QMat m(int(words.size()), int(words.size()));
    for (int j = 0; j < int(words.size()); ++j) {
        HeckeElement col = multiply(a, basis(words[j]));
        for (const auto& [w, c] : col.terms) m(index.at(w), j) = c.eval(q0);
    }
    return m;
}

RegularRep regular_representation(const HeckeParams& params, const Rat& q0) {
    if (q0 == 0) throw std::invalid_argument("regular_representation: q0 must be nonzero");
    HeckeAlgebra alg(params);
    RegularRep rep;
    rep.params = params;
    rep.q0 = q0;
    rep.basis = alg.basis_words();
    for (int g = 0; g < alg.num_generators(); ++g)
        rep.gen_mats.push_back(alg.regular_matrix(alg.basis(alg.gen_word(g)), q0));
    for (const auto& x : alg.x_generators()) rep.x_mats.push_back(alg.regular_matrix(x, q0));
    return rep;
}

namespace {

// Candidate eigenvalues (+-q0)^{t or -1-t} * q0^j, |j| <= m.
std::vector<Rat> eigen_candidates(const HeckeParams& params, const Rat& q0) {
    std::set<Rat> cand;
    auto mq = -q0;
    int m = params.m_plus + params.m_minus;
    for (long t : {params.t_plus, params.t_minus}) {
        for (long base : {t, -1 - t}) {
            Rat b = rat_pow(mq, base);
            for (int j = -m; j <= m; ++j) cand.insert(b * rat_pow(q0, j));
        }
    }
    return {cand.begin(), cand.end()};
}

// Splits the column span of basis B into generalized eigenspaces of op.
std::vector<std::pair<QMat, Rat>> split_space(const QMat& B, const QMat& op,
                                              const std::vector<Rat>& candidates) {
    int dim = B.cols();
    QMat R = solve(B, op * B);  // op restricted to span(B)
    std::vector<std::pair<QMat, Rat>> out;
    int found = 0;
    for (const Rat& lam : candidates) {
        QMat shifted = R;
        for (int i = 0; i < dim; ++i) shifted(i, i) -= lam;
        // Grow the kernel power until it stabilizes; the shifted operator is
        // usually semisimple here, so this stops after one step.
        QMat power = shifted;
        QMat ker = power.kernel();
        if (ker.cols() == 0) continue;
        for (;;) {
            power = power * shifted;
            QMat next = power.kernel();
            if (next.cols() == ker.cols()) break;
            ker = next;
        }
        out.emplace_back(B * ker, lam);
        found += ker.cols();
    }
    if (found != dim)
        throw std::domain_error("eigenspace_idempotents: irrational eigenvalue at this q0");
    return out;
}

}  // namespace

std::vector<EigenBlock> eigenspace_idempotents(const RegularRep& rep) {
    int n = rep.basis.empty() ? 0 : rep.x_mats.empty() ? 0 : rep.x_mats[0].rows();
    if (rep.x_mats.empty()) {
        // no X generators at all (m = 0): single block, identity projector
        EigenBlock blk;
        blk.projector = QMat::identity(int(rep.basis.size()));
        blk.dim = int(rep.basis.size());
        return {blk};
    }
    std::vector<Rat> candidates = eigen_candidates(rep.params, rep.q0);
    std::vector<std::pair<QMat, std::vector<Rat>>> spaces;
    spaces.emplace_back(QMat::identity(n), std::vector<Rat>{});
    for (const QMat& x : rep.x_mats) {
        std::vector<std::pair<QMat, std::vector<Rat>>> next;
        for (auto& [B, tup] : spaces)
            for (auto& [B2, lam] : split_space(B, x, candidates)) {
                auto t2 = tup;
                t2.push_back(lam);
                next.emplace_back(B2, t2);
            }
        spaces = std::move(next);
    }
    // Assemble projectors via the change of basis to the block decomposition.
    QMat P(n, n);
    int col = 0;
    std::vector<std::pair<int, int>> ranges;
    for (auto& [B, tup] : spaces) {
        ranges.emplace_back(col, B.cols());
        for (int j = 0; j < B.cols(); ++j, ++col)
            for (int i = 0; i < n; ++i) P(i, col) = B(i, j);
    }
    QMat Pinv = P.inverse();
    std::vector<EigenBlock> out;
    for (size_t t = 0; t < spaces.size(); ++t) {
        auto [start, len] = ranges[t];
        QMat E(n, n);
        for (int k = start; k < start + len; ++k) E(k, k) = 1;
        EigenBlock blk;
        blk.tuple = spaces[t].second;
        blk.projector = P * E * Pinv;
        blk.dim = len;
        out.push_back(std::move(blk));
    }
    return out;
}

std::vector<Rat> x_spectrum(const RegularRep& rep, int which_x) {
    auto blocks = eigenspace_idempotents(rep);
    std::set<Rat> vals;
    for (const auto& b : blocks) vals.insert(b.tuple.at(which_x));
    return {vals.begin(), vals.end()};
}

namespace {

QuiverVertex vertex_for(const Rat& lam, const Rat& q0, Side side, int range) {
    for (int sign : {+1, -1})
        for (int j = -range; j <= range; ++j)
            if (lam == Rat(sign) * rat_pow(q0, j)) return QuiverVertex{side, sign, j};
    throw std::domain_error("vertex_for: eigenvalue is not +-q0^j in range");
}

}  // namespace

KlrData klr_transform(const HeckeParams& params, const Rat& q0, int factor) {
    // Work inside the chosen factor alone.
    HeckeParams sub = factor > 0 ? HeckeParams{params.t_plus, 0, params.m_plus, 0}
                                 : HeckeParams{params.t_minus, 0, params.m_minus, 0};
    int m = sub.m_plus;
    long t = sub.t_plus;
    Side side = factor > 0 ? Side::unprimed : Side::primed;
    RegularRep rep = regular_representation(sub, q0);
    int n = int(rep.basis.size());
    auto blocks = eigenspace_idempotents(rep);

    KlrData out;
    out.spec = build_quiver({}, {});
    for (const auto& b : blocks) {
        out.tuples.push_back(b.tuple);
        out.e.push_back(b.projector);
        for (const Rat& lam : b.tuple)
            if (!out.vertex_of.count(lam))
                out.vertex_of[lam] = vertex_for(lam, q0, side, int(t) + m + 2);
    }
    QMat I = QMat::identity(n);
    // x_a = sum over blocks of (k_a^{-1} X_a - 1) e(k)
    for (int a = 0; a < m; ++a) {
        QMat xa(n, n);
        for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
            const Rat& k = blocks[bidx].tuple[a];
            QMat term = (Rat(1) / k) * rep.x_mats[a] - I;
            xa += term * blocks[bidx].projector;
        }
        out.x.push_back(xa);
    }
    // tau_a = sum over blocks of the three-case transform; T_a is the image
    // of the affine generator, i.e. the (a+1)-st generator of the factor.
    for (int a = 0; a + 1 <= m - 1; ++a) {
        const QMat& T = rep.gen_mats[a + 1];
        const QMat& Xa = rep.x_mats[a];
        const QMat& Xb = rep.x_mats[a + 1];
        QMat tau(n, n);
        for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
            const Rat& ka = blocks[bidx].tuple[a];
            const Rat& kb = blocks[bidx].tuple[a + 1];
            const QMat& e = blocks[bidx].projector;
            QMat TmQ = T;
            for (int i = 0; i < n; ++i) TmQ(i, i) -= q0;
            // The rational functions of X act on the source block, where
            // qX_a - X_{a+1} is invertible by the case condition.
            if (ka == kb) {
                QMat M = q0 * Xa - Xb;
                QMat G = (M * e + (I - e)).inverse();
                tau += ka * (TmQ * (G * e));
            } else if (kb == q0 * ka) {
                QMat term = (Xa - Xb) * T + (q0 - Rat(1)) * Xb;
                tau += (Rat(1) / (q0 * ka)) * (term * e);
            } else {
                QMat M = q0 * Xa - Xb;
                QMat G = (M * e + (I - e)).inverse();
                tau += (TmQ * ((Xa - Xb) * (G * e))) + e;
            }
        }
        out.tau.push_back(tau);
    }
    return out;
}

namespace {

QMat eval_qpoly(const QPolynomial& p, const QMat& u, const QMat& v) {
    int n = u.rows();
    QMat r(n, n);
    for (const auto& term : p.terms) r += term.coef * (u.pow(term.du) * v.pow(term.dv));
    return r;
}

// (Q(u, y) - Q(w, y)) / (u - w) evaluated at matrices; valid since every
// monomial difference u^k - w^k factors.
QMat eval_qpoly_diff(const QPolynomial& p, const QMat& u, const QMat& y, const QMat& w) {
    int n = u.rows();
    QMat r(n, n);
    for (const auto& term : p.terms) {
        QMat sum(n, n);
        for (int a = 0; a + 1 <= term.du; ++a) sum += u.pow(a) * w.pow(term.du - 1 - a);
        r += term.coef * (sum * y.pow(term.dv));
    }
    return r;
}

}  // namespace

CheckReport klr_relation_check(const HeckeParams& params, const Rat& q0) {
    CheckReport rep;
    for (int factor : {+1, -1}) {
        int m = factor > 0 ? params.m_plus : params.m_minus;
        if (m == 0) continue;
        KlrData K = klr_transform(params, q0, factor);
        int n = K.e.empty() ? 0 : K.e[0].rows();
        QMat I = QMat::identity(n);
        std::string tag = factor > 0 ? "[+] " : "[-] ";
        // idempotents: orthogonal, complete
        QMat sum(n, n);
        for (size_t i = 0; i < K.e.size(); ++i) {
            sum += K.e[i];
            for (size_t j = 0; j < K.e.size(); ++j) {
                QMat prod = K.e[i] * K.e[j];
                if (i == j)
                    rep.expect(prod == K.e[i], tag + "e(k) idempotent");
                else
                    rep.expect(prod.is_zero(), tag + "e(k)e(k') = 0");
            }
        }
        rep.expect(sum == I, tag + "sum of idempotents is 1");
        // x relations
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b)
                rep.expect(K.x[a] * K.x[b] == K.x[b] * K.x[a], tag + "x_a x_b commute");
            for (size_t bi = 0; bi < K.e.size(); ++bi)
                rep.expect(K.x[a] * K.e[bi] == K.e[bi] * K.x[a], tag + "x e(k) = e(k) x");
        }
        // nilpotency of x on each block
        for (int a = 0; a < m; ++a)
            for (size_t bi = 0; bi < K.e.size(); ++bi)
                rep.expect((K.x[a] * K.e[bi]).pow(unsigned(n + 1)).is_zero(),
                           tag + "x_{a,k} nilpotent");
        auto sb_tuple = [&](const std::vector<Rat>& tup, int b) {
            auto t = tup;
            std::swap(t[b], t[b + 1]);
            return t;
        };
        auto block_index = [&](const std::vector<Rat>& tup) -> int {
            for (size_t i = 0; i < K.tuples.size(); ++i)
                if (K.tuples[i] == tup) return int(i);
            return -1;
        };
        // tau relations
        for (int b = 0; b + 1 < m; ++b) {
            QMat tau2 = K.tau[b] * K.tau[b];
            std::vector<QMat> comm;
            for (int c = 0; c < m; ++c) {
                int target = c == b ? b + 1 : (c == b + 1 ? b : c);
                comm.push_back(K.tau[b] * K.x[c] - K.x[target] * K.tau[b]);
            }
            for (size_t bi = 0; bi < K.tuples.size(); ++bi) {
                const auto& tup = K.tuples[bi];
                const QMat& e = K.e[bi];
                int swapped = block_index(sb_tuple(tup, b));
                QMat lhs = K.tau[b] * e;
                QMat rhs = swapped >= 0 ? K.e[swapped] * K.tau[b] : QMat(n, n);
                rep.expect(lhs == rhs, tag + "tau_b e(k) = e(s_b k) tau_b");
                // quadratic
                QuiverVertex s = K.vertex_of.at(tup[b]);
                QuiverVertex t2 = K.vertex_of.at(tup[b + 1]);
                QPolynomial Q = q_polynomial(K.spec, s, t2);
                QMat q_eval = eval_qpoly(Q, K.x[b], K.x[b + 1]);
                rep.expect(tau2 * e == q_eval * e, tag + "tau^2 = Q(x, x)");
                // tau x - x tau
                for (int c = 0; c < m; ++c) {
                    QMat expect(n, n);
                    if (tup[b] == tup[b + 1]) {
                        if (c == b)
                            expect = Rat(-1) * e;
                        else if (c == b + 1)
                            expect = e;
                    }
                    rep.expect(comm[c] * e == expect, tag + "tau x - x tau");
                }
            }
            for (int b2 = b + 2; b2 < m - 1; ++b2)
                rep.expect(K.tau[b] * K.tau[b2] == K.tau[b2] * K.tau[b],
                           tag + "tau_a tau_b commute");
        }
        // braid deviation
        for (int b = 0; b + 2 < m; ++b) {
            QMat braid =
                K.tau[b + 1] * K.tau[b] * K.tau[b + 1] - K.tau[b] * K.tau[b + 1] * K.tau[b];
            for (size_t bi = 0; bi < K.tuples.size(); ++bi) {
                const auto& tup = K.tuples[bi];
                const QMat& e = K.e[bi];
                QMat lhs = braid * e;
                QMat rhs(n, n);
                if (tup[b] == tup[b + 2]) {
                    QuiverVertex s = K.vertex_of.at(tup[b]);
                    QuiverVertex t2 = K.vertex_of.at(tup[b + 1]);
                    QPolynomial Q = q_polynomial(K.spec, s, t2);
                    rhs = eval_qpoly_diff(Q, K.x[b], K.x[b + 1], K.x[b + 2]) * e;
                }
                rep.expect(lhs == rhs, tag + "braid deviation");
            }
        }
    }
    return rep;
}

std::vector<SignVector> jm_set(int m_plus, int m_minus) {
    std::vector<SignVector> out;
    int m = m_plus + m_minus;
    std::vector<int> cur(m, +1);
    auto rec = [&](auto&& self, int pos, int used_minus) -> void {
        if (pos == m) {
            if (used_minus == m_minus) out.push_back(cur);
            return;
        }
        cur[pos] = +1;
        if (m - pos - 1 >= m_minus - used_minus) self(self, pos + 1, used_minus);
        if (used_minus < m_minus) {
            cur[pos] = -1;
            self(self, pos + 1, used_minus + 1);
            cur[pos] = +1;
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<int> pi_nu(const SignVector& nu) {
    int m = int(nu.size());
    int plus = 0;
    for (int v : nu) plus += v > 0;
    std::vector<int> pi(m);
    int p = 1, q = plus + 1;
    for (int i = 0; i < m; ++i) pi[i] = nu[i] > 0 ? p++ : q++;
    return pi;
}

long pi_length(const SignVector& nu) {
    long n = 0;
    for (size_t i = 0; i < nu.size(); ++i)
        for (size_t j = i + 1; j < nu.size(); ++j)
            if (nu[i] < 0 && nu[j] > 0) ++n;
    return n;
}

namespace {

// Block-sparse matrix over the direct sum of |J| copies of W.
struct BlockMat {
    std::map<std::pair<int, int>, QMat> blocks;  // (row block, col block)
};

BlockMat bmul(const BlockMat& a, const BlockMat& b) {
    BlockMat r;
    for (const auto& [ka, ma] : a.blocks)
        for (const auto& [kb, mb] : b.blocks) {
            if (ka.second != kb.first) continue;
            auto key = std::make_pair(ka.first, kb.second);
            QMat prod = ma * mb;
            auto it = r.blocks.find(key);
            if (it == r.blocks.end())
                r.blocks[key] = prod;
            else
                it->second += prod;
        }
    // drop zero blocks
    for (auto it = r.blocks.begin(); it != r.blocks.end();)
        it = it->second.is_zero() ? r.blocks.erase(it) : std::next(it);
    return r;
}

// Sorted sparse vector of (index, nonzero value).
using SparseVec = std::vector<std::pair<size_t, Rat>>;

SparseVec bvec(const BlockMat& a, int nblocks, int w) {
    SparseVec v;
    for (const auto& [k, m] : a.blocks)
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j)
                if (m(i, j) != 0)
                    v.emplace_back(((size_t(k.first) * nblocks + k.second) * w + i) * w + j,
                                   m(i, j));
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

void axpy(SparseVec& v, const Rat& c, const SparseVec& row) {
    SparseVec out;
    out.reserve(v.size() + row.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < row.size()) {
        if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, c * row[j].second);
            ++j;
        } else {
            Rat s = v[i].second + c * row[j].second;
            if (s != 0) out.emplace_back(v[i].first, s);
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

// Incremental echelon basis over Q, sparse rows.
struct Echelon {
    std::vector<SparseVec> rows;
    std::vector<size_t> pivots;
    // returns true if v was independent (and got added)
    bool insert(SparseVec v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            auto it = std::lower_bound(
                v.begin(), v.end(), pivots[r],
                [](const auto& a, size_t p) { return a.first < p; });
            if (it != v.end() && it->first == pivots[r]) axpy(v, -it->second, rows[r]);
        }
        if (v.empty()) return false;
        Rat inv = Rat(1) / v.front().second;
        for (auto& [k, x] : v) x *= inv;
        pivots.push_back(v.front().first);
        rows.push_back(std::move(v));
        return true;
    }
    long rank() const { return long(rows.size()); }
};

QMat tensor(const QMat& a, const QMat& b) {
    QMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

}  // namespace

DisconnectedReport disconnected_decomposition_check(const HeckeParams& params, const Rat& q0) {
    DisconnectedReport out;
    HeckeParams pp{params.t_plus, 0, params.m_plus, 0};
    HeckeParams pm{params.t_minus, 0, params.m_minus, 0};
    RegularRep rp = regular_representation(pp, q0);
    RegularRep rm = regular_representation(pm, q0);
    int dp = int(rp.basis.size()), dm = int(rm.basis.size());
    int w = dp * dm;
    auto nus = jm_set(params.m_plus, params.m_minus);
    int nb = int(nus.size());
    int m = params.m_plus + params.m_minus;

    QMat Ip = QMat::identity(dp), Im = QMat::identity(dm);

    // X_{a,nu} and T_{b,nu} as block matrices; mixed crossings act as the
    // identity (dimension-level model).
    std::vector<BlockMat> gens;
    auto plus_pos = [&](const SignVector& nu, int a) {
        int p = 0;
        for (int i = 0; i <= a; ++i) p += nu[i] > 0;
        return p;  // 1-based count of + among slots 0..a
    };
    auto minus_pos = [&](const SignVector& nu, int a) {
        int p = 0;
        for (int i = 0; i <= a; ++i) p += nu[i] < 0;
        return p;
    };
    std::map<SignVector, int> nu_index;
    for (int i = 0; i < nb; ++i) nu_index[nus[i]] = i;

    for (int ni = 0; ni < nb; ++ni) {
        const SignVector& nu = nus[ni];
        for (int a = 0; a < m; ++a) {
            BlockMat B;
            if (nu[a] > 0)
                B.blocks[{ni, ni}] = tensor(rp.x_mats[plus_pos(nu, a) - 1], Im);
            else
                B.blocks[{ni, ni}] = tensor(Ip, rm.x_mats[minus_pos(nu, a) - 1]);
            gens.push_back(std::move(B));
        }
        for (int b = 0; b + 1 < m; ++b) {
            BlockMat B;
            if (nu[b] == nu[b + 1]) {
                if (nu[b] > 0)
                    B.blocks[{ni, ni}] = tensor(rp.gen_mats[plus_pos(nu, b)], Im);
                else
                    B.blocks[{ni, ni}] = tensor(Ip, rm.gen_mats[minus_pos(nu, b)]);
            } else {
                SignVector snu = nu;
                std::swap(snu[b], snu[b + 1]);
                B.blocks[{nu_index.at(snu), ni}] = tensor(Ip, Im);
            }
            gens.push_back(std::move(B));
        }
    }
    // block projectors e(nu)
    for (int ni = 0; ni < nb; ++ni) {
        BlockMat B;
        B.blocks[{ni, ni}] = tensor(Ip, Im);
        gens.push_back(std::move(B));
    }

    // closure under left multiplication by generators
    Echelon ech;
    std::vector<BlockMat> basis;
    std::vector<BlockMat> frontier;
    for (const auto& g : gens) {
        if (ech.insert(bvec(g, nb, w))) {
            basis.push_back(g);
            frontier.push_back(g);
        }
    }
    while (!frontier.empty()) {
        std::vector<BlockMat> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                BlockMat prod = bmul(g, f);
                if (ech.insert(bvec(prod, nb, w))) {
                    basis.push_back(prod);
                    next.push_back(prod);
                }
            }
        frontier = std::move(next);
    }

    out.total_dim = ech.rank();
    out.expected_total = long(nb) * nb * w;
    out.report.expect(out.total_dim == out.expected_total,
                      "total dimension |J|^2 * dim(H+ (x) H-)");
    // per-pair ranks
    out.pair_ranks.assign(nb, std::vector<long>(nb, 0));
    for (int r = 0; r < nb; ++r)
        for (int c = 0; c < nb; ++c) {
            Echelon sub;
            for (const auto& bm : basis) {
                auto it = bm.blocks.find({r, c});
                if (it == bm.blocks.end()) continue;
                SparseVec v;
                for (int i = 0; i < w; ++i)
                    for (int j = 0; j < w; ++j)
                        if (it->second(i, j) != 0) v.emplace_back(size_t(i) * w + j, it->second(i, j));
                sub.insert(std::move(v));
            }
            out.pair_ranks[r][c] = sub.rank();
            out.report.expect(sub.rank() == w, "pair rank equals dim(H+ (x) H-)");
        }
    return out;
}

}  // namespace qub
