#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "qub/heckeb.hpp"

using namespace qub;

namespace {

HeckeAlgebra alg(long tp, long tm, int mp, int mm) { return HeckeAlgebra({tp, tm, mp, mm}); }

// Brute-force minimal-length w in S_m with w.nu = nu0, by BFS over adjacent
// transpositions. Action: (w.nu)_i = nu_{w^{-1}(i)}.
std::pair<std::vector<int>, long> coset_brute(const SignVector& nu) {
    int m = int(nu.size());
    SignVector nu0 = nu;
    std::sort(nu0.begin(), nu0.end(), std::greater<int>());
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 1);
    std::map<std::vector<int>, long> dist;
    std::queue<std::vector<int>> q;
    dist[id] = 0;
    q.push(id);
    while (!q.empty()) {
        auto w = q.front();
        q.pop();
        SignVector moved(m);
        for (int i = 1; i <= m; ++i) {
            // w^{-1}(i): position j with w(j) = i
            int j = int(std::find(w.begin(), w.end(), i) - w.begin());
            moved[i - 1] = nu[j];
        }
        if (moved == nu0) return {w, dist[w]};
        for (int s = 1; s < m; ++s) {
            auto next = w;  // next = s_i * w: compose on the left
            for (auto& v : next)
                if (v == s)
                    v = s + 1;
                else if (v == s + 1)
                    v = s;
            if (!dist.count(next)) {
                dist[next] = dist[w] + 1;
                q.push(next);
            }
        }
    }
    return {id, 0};
}

}  // namespace

TEST_CASE("signed permutation lengths match word search") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<SignedPerm> gens;
        gens.push_back(SignedPerm::gen_t1(m));
        for (int i = 2; i <= m; ++i) gens.push_back(SignedPerm::gen_s(m, i));
        // BFS word lengths
        std::map<SignedPerm, long> dist;
        std::queue<SignedPerm> q;
        SignedPerm e = SignedPerm::identity(m);
        dist[e] = 0;
        q.push(e);
        while (!q.empty()) {
            SignedPerm w = q.front();
            q.pop();
            for (const auto& g : gens) {
                SignedPerm gw = g.compose(w);
                if (!dist.count(gw)) {
                    dist[gw] = dist[w] + 1;
                    q.push(gw);
                }
            }
        }
        CHECK(dist.size() == size_t(HeckeParams{0, 0, m, 0}.basis_dim()));
        for (const auto& [w, d] : dist) CHECK(w.length() == d);
    }
}

TEST_CASE("quadratic relations of the first and later generators") {
    for (long tp : {0L, 1L, 2L})
        for (long tm : {0L, 1L}) {
            HeckeAlgebra A = alg(tp, tm, 2, 2);
            for (int g = 0; g < A.num_generators(); ++g) {
                HeckeElement T = A.basis(A.gen_word(g));
                HeckeElement lhs = A.multiply(T, T);
                Laurent Q = A.gen_parameter(g);
                HeckeElement rhs =
                    A.add(A.scale(Q - Laurent(Rat(1)), T), A.scalar(Q));
                CHECK(lhs == rhs);
            }
            // identity is neutral
            HeckeElement x = A.basis(A.gen_word(0));
            CHECK(A.multiply(A.one(), x) == x);
            CHECK(A.multiply(x, A.one()) == x);
        }
}

TEST_CASE("braid and cross-factor commutation relations, symbolically") {
    HeckeAlgebra A = alg(1, 0, 2, 2);
    auto T = [&](int g) { return A.basis(A.gen_word(g)); };
    // braid within the plus factor: T_{v1} T_{v2} T_{v1} T_{v2} = T_{v2} T_{v1} T_{v2} T_{v1}
    HeckeElement a = A.multiply(T(0), A.multiply(T(1), A.multiply(T(0), T(1))));
    HeckeElement b = A.multiply(T(1), A.multiply(T(0), A.multiply(T(1), T(0))));
    CHECK(a == b);
    // plus and minus generators commute
    for (int g : {0, 1})
        for (int h : {2, 3})
            CHECK(A.multiply(T(g), T(h)) == A.multiply(T(h), T(g)));
}

TEST_CASE("all defining relations, symbolically at m = (2,2)") {
    HeckeAlgebra A = alg(1, 0, 2, 2);
    auto T = [&](int g) { return A.basis(A.gen_word(g)); };
    for (int g = 0; g < 4; ++g) {
        Laurent Q = A.gen_parameter(g);
        CHECK(A.multiply(T(g), T(g)) ==
              A.add(A.scale(Q - Laurent(Rat(1)), T(g)), A.scalar(Q)));
    }
    // order-4 braids inside each factor
    auto b4 = [&](int g, int h) {
        return A.multiply(T(g), A.multiply(T(h), A.multiply(T(g), T(h)))) ==
               A.multiply(T(h), A.multiply(T(g), A.multiply(T(h), T(g))));
    };
    CHECK(b4(0, 1));
    CHECK(b4(2, 3));
    // cross-factor commutation for every generator pair
    for (int g : {0, 1})
        for (int h : {2, 3}) CHECK(A.multiply(T(g), T(h)) == A.multiply(T(h), T(g)));
}

TEST_CASE("length-additive products concatenate") {
    HeckeAlgebra A = alg(0, 0, 2, 1);
    auto words = A.basis_words();
    for (const auto& w : words) {
        for (int g = 0; g < A.num_generators(); ++g) {
            BWord gw{A.gen_word(g).plus.compose(w.plus), A.gen_word(g).minus.compose(w.minus)};
            if (gw.length() == w.length() + 1) {
                HeckeElement prod = A.multiply(A.basis(A.gen_word(g)), A.basis(w));
                REQUIRE(prod.terms.size() == 1);
                CHECK(prod.terms.begin()->first == gw);
                CHECK(prod.terms.begin()->second == Laurent(Rat(1)));
            }
        }
    }
}

TEST_CASE("X generators commute and satisfy the stated quadratic") {
    for (long t : {0L, 1L, 2L}) {
        HeckeAlgebra A = alg(t, 0, 3, 0);
        auto xs = A.x_generators();
        REQUIRE(xs.size() == 3);
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                CHECK(A.multiply(xs[i], xs[j]) == A.multiply(xs[j], xs[i]));
        // X_1^2 - (-1)^t (q^t - q^{-t-1}) X_1 - q^{-1} = 0, so the two
        // eigenvalues multiply to -q^{-1}.
        HeckeElement sq = A.multiply(xs[0], xs[0]);
        Rat sgn = t % 2 == 0 ? Rat(1) : Rat(-1);
        Laurent coef = Laurent(sgn, t) - Laurent(sgn, -t - 1);
        HeckeElement rhs = A.add(A.scale(coef, xs[0]), A.scalar(Laurent(Rat(1), -1)));
        CHECK(sq == rhs);
    }
}

TEST_CASE("regular representation satisfies the defining relations") {
    for (auto [tp, tm, mp, mm] : std::vector<std::tuple<long, long, int, int>>{
             {0, 0, 1, 0}, {0, 0, 2, 1}, {1, 0, 2, 0}, {1, 1, 1, 1}}) {
        HeckeParams P{tp, tm, mp, mm};
        RegularRep rep = regular_representation(P, Rat(3));
        int n = int(rep.basis.size());
        CHECK(n == P.basis_dim());
        QMat I = QMat::identity(n);
        HeckeAlgebra A(P);
        for (int g = 0; g < A.num_generators(); ++g) {
            const QMat& T = rep.gen_mats[g];
            Rat Q = A.gen_parameter(g).eval(Rat(3));
            CHECK(T * T == (Q - 1) * T + Q * I);
        }
        // braid relations: order 4 between the sign generator and its
        // neighbour, order 3 along the tail
        auto braid4 = [&](int g, int h) {
            const QMat &a = rep.gen_mats[g], &b = rep.gen_mats[h];
            return a * b * a * b == b * a * b * a;
        };
        auto braid3 = [&](int g, int h) {
            const QMat &a = rep.gen_mats[g], &b = rep.gen_mats[h];
            return a * b * a == b * a * b;
        };
        if (mp >= 2) CHECK(braid4(0, 1));
        if (mp >= 3) CHECK(braid3(1, 2));
        if (mm >= 2) CHECK(braid4(mp, mp + 1));
        // cross-factor commutation
        for (int g = 0; g < mp; ++g)
            for (int h = mp; h < mp + mm; ++h)
                CHECK(rep.gen_mats[g] * rep.gen_mats[h] == rep.gen_mats[h] * rep.gen_mats[g]);
        // generators invertible
        for (const auto& T : rep.gen_mats) CHECK(T.rank() == n);
    }
}

TEST_CASE("m=(1,0), t=0, q0=3: 2x2-style regular rep with eigenvalues 1, -1/3") {
    RegularRep rep = regular_representation({0, 0, 1, 0}, Rat(3));
    CHECK(rep.basis.size() == 2);
    auto spec = x_spectrum(rep, 0);
    REQUIRE(spec.size() == 2);
    CHECK(spec[0] == Rat(-1, 3));
    CHECK(spec[1] == Rat(1));
}

TEST_CASE("Hecke eigenvalue theorem: spectrum of X_1 is (-q)^t, (-q)^{-1-t}") {
    for (long t : {0L, 1L, 2L})
        for (long q0 : {3L, 5L})
            for (int m = 1; m <= 2; ++m) {
                RegularRep rep = regular_representation({t, 0, m, 0}, Rat(q0));
                auto spec = x_spectrum(rep, 0);
                std::set<Rat> expect{rat_pow(Rat(-q0), t), rat_pow(Rat(-q0), -1 - t)};
                CHECK(std::set<Rat>(spec.begin(), spec.end()) == expect);
            }
}

TEST_CASE("eigenspace idempotents are orthogonal, complete and X-stable") {
    RegularRep rep = regular_representation({0, 0, 2, 1}, Rat(3));
    auto blocks = eigenspace_idempotents(rep);
    int n = int(rep.basis.size());
    QMat sum(n, n);
    for (const auto& b : blocks) {
        sum += b.projector;
        CHECK(b.projector * b.projector == b.projector);
        for (const auto& x : rep.x_mats) CHECK(b.projector * x == x * b.projector);
    }
    CHECK(sum == QMat::identity(n));
    long total = 0;
    for (const auto& b : blocks) total += b.dim;
    CHECK(total == n);
}

TEST_CASE("KLR relation check passes at q0 = 3") {
    for (auto [tp, tm, mp, mm] : std::vector<std::tuple<long, long, int, int>>{
             {0, 0, 2, 0}, {0, 0, 3, 0}, {1, 0, 3, 0}, {1, 1, 2, 1}}) {
        CheckReport rep = klr_relation_check({tp, tm, mp, mm}, Rat(3));
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.pass);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("pi_nu against brute-force coset search") {
    for (int m = 1; m <= 6; ++m)
        for (int mp = 0; mp <= m; ++mp) {
            for (const auto& nu : jm_set(mp, m - mp)) {
                auto [w, len] = coset_brute(nu);
                CHECK(pi_nu(nu) == w);
                CHECK(pi_length(nu) == len);
            }
        }
}

TEST_CASE("jm_set sizes") {
    CHECK(jm_set(2, 1).size() == 3);
    CHECK(jm_set(3, 3).size() == 20);
    CHECK(jm_set(0, 0).size() == 1);
    CHECK(pi_length(SignVector{+1, +1, -1, -1}) == 0);
    CHECK(pi_length(SignVector{-1, +1}) == 1);
    CHECK(pi_length(SignVector{-1, +1, +1}) == 2);
}

TEST_CASE("disconnected decomposition at the dimension level") {
    for (auto [tp, tm, mp, mm] : std::vector<std::tuple<long, long, int, int>>{
             {0, 0, 1, 1}, {0, 0, 2, 1}, {0, 0, 3, 0}}) {
        DisconnectedReport rep = disconnected_decomposition_check({tp, tm, mp, mm}, Rat(3));
        INFO((rep.report.failures.empty() ? std::string("ok") : rep.report.failures.front()));
        CHECK(rep.report.pass);
        long nb = long(jm_set(mp, mm).size());
        CHECK(rep.expected_total == nb * nb * HeckeParams{tp, tm, mp, mm}.basis_dim());
        CHECK(rep.total_dim == rep.expected_total);
    }
}
