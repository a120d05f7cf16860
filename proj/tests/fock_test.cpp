#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qub/fock.hpp"

using namespace qub;

namespace {

FockSpace level1(long charge, long e) {
    return FockSpace(build_quiver(e == 0 ? std::optional<long>{} : std::optional<long>{e}, {}),
                     {{Side::unprimed, +1, charge}});
}

FockSpace level2(long c1, long c2, long e) {
    return FockSpace(build_quiver(e == 0 ? std::optional<long>{} : std::optional<long>{e}, {}),
                     {{Side::unprimed, +1, c1}, {Side::unprimed, +1, c2}});
}

QuiverVertex u(long exp, int sign = +1) { return {Side::unprimed, sign, exp}; }

}  // namespace

TEST_CASE("operator action on the vacuum") {
    FockSpace sp = level1(0, 2);
    FockElement vac = basis_element(sp, {Partition{}});
    FockElement f0 = apply_f(vac, u(0));
    CHECK(f0 == basis_element(sp, {Partition({1})}));
    FockElement f1f0 = apply_f(f0, u(1));
    CHECK(f1f0.terms.size() == 2);
    CHECK(f1f0.terms.at({Partition({2})}) == 1);
    CHECK(f1f0.terms.at({Partition({1, 1})}) == 1);
    for (long i = 0; i < 2; ++i) CHECK(apply_e(vac, u(i)).is_zero());
}

TEST_CASE("coroot and box counts") {
    FockSpace sp = level1(0, 2);
    CHECK(coroot_eigenvalue(sp, {Partition{}}, u(0)) == 1);
    CHECK(coroot_eigenvalue(sp, {Partition({1})}, u(1)) == 2);
    CHECK(m_count(sp, {Partition({1})}, u(0)) == 1);
    CHECK(m_count(sp, {Partition({1})}, u(1)) == 0);
}

TEST_CASE("mixed spaces cannot be combined") {
    FockElement a = basis_element(level1(0, 2), {Partition{}});
    FockElement b = basis_element(level1(1, 2), {Partition{}});
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
}

TEST_CASE("Chevalley relation [e_i, f_j] = delta_ij N_i") {
    for (long e = 2; e <= 4; ++e)
        for (long c1 = -1; c1 <= 2; ++c1)
            for (long c2 = -1; c2 <= 2; ++c2) {
                FockSpace sp = level2(c1, c2, e);
                for (long n = 0; n <= 4; ++n)
                    for (const auto& mp : multipartitions_of(n, 2)) {
                        FockElement v = basis_element(sp, mp);
                        for (long i = 0; i < e; ++i)
                            for (long j = 0; j < e; ++j) {
                                FockElement lhs = add(
                                    apply_e(apply_f(v, u(j)), u(i)),
                                    scale(-1, apply_f(apply_e(v, u(i)), u(j))));
                                if (i == j) {
                                    long n_i = coroot_eigenvalue(sp, mp, u(i));
                                    CHECK(lhs == scale(n_i, v));
                                } else {
                                    CHECK(lhs.is_zero());
                                }
                            }
                    }
            }
}

TEST_CASE("local nilpotency of f_i") {
    FockSpace sp = level2(0, 1, 3);
    for (long n = 0; n <= 3; ++n)
        for (const auto& mp : multipartitions_of(n, 2))
            for (long i = 0; i < 3; ++i) {
                FockElement v = basis_element(sp, mp);
                FockElement cur = apply_f(v, u(i));
                long k = 1;
                while (!cur.is_zero()) {
                    cur = apply_f(cur, u(i));
                    ++k;
                    REQUIRE(k < 20);
                }
                // N_i + #removable = #addable, and f_i^(addable+1) = 0
                long addable = coroot_eigenvalue(sp, mp, u(i)) +
                               long(apply_e(v, u(i)).terms.size());
                CHECK(k <= addable + 1);
            }
}

TEST_CASE("delta charge values") {
    CHECK(delta_charge({0}, 2) == 0);
    CHECK(delta_charge({}, 4) == 0);
    // periodicity-style shift: Delta(s+e|e) - Delta(s|e) = s
    for (long e = 2; e <= 4; ++e)
        for (long s = -4; s <= 4; ++s)
            CHECK(delta_charge({s + e}, e) - delta_charge({s}, e) == Rat(s));
}

TEST_CASE("bilinear form on fundamentals and delta") {
    QuiverSpec spec = build_quiver(2, {});
    Weight L0, L1, D;
    L0.fundamental[u(0)] = 1;
    L1.fundamental[u(1)] = 1;
    D.delta[{Side::unprimed, +1}] = 1;
    CHECK(bilinear_form(spec, L0, L0) == 0);
    CHECK(bilinear_form(spec, L1, L1) == Rat(1, 2));
    CHECK(bilinear_form(spec, D, D) == 0);
    CHECK(bilinear_form(spec, L0, D) == 1);
    CHECK(bilinear_form(spec, L0, L1) == 0);  // min(0,1) - 0 = 0
}

TEST_CASE("weights of small vectors at e=2") {
    FockSpace sp = level1(0, 2);
    Weight w0 = weight_of(sp, {Partition{}});
    CHECK(w0.fundamental.at(u(0)) == 1);
    CHECK(w0.fundamental.size() == 1);
    CHECK(w0.delta.empty());

    Weight w1 = weight_of(sp, {Partition({1})});
    CHECK(w1.fundamental.at(u(0)) == -1);
    CHECK(w1.fundamental.at(u(1)) == 2);
    CHECK(w1.delta.at({Side::unprimed, +1}) == -1);
}

TEST_CASE("weight step wt(f_i v) = wt(v) - alpha_i") {
    for (long e = 2; e <= 4; ++e) {
        FockSpace sp = level2(0, e - 1, e);
        for (long n = 0; n <= 4; ++n)
            for (const auto& mp : multipartitions_of(n, 2)) {
                Weight w = weight_of(sp, mp);
                for (long i = 0; i < e; ++i) {
                    FockElement img = apply_f(basis_element(sp, mp), u(i));
                    Weight expect = weight_add(w, weight_scale(Rat(-1), simple_root(sp.spec, u(i))));
                    for (const auto& [nmp, c] : img.terms) CHECK(weight_of(sp, nmp) == expect);
                }
            }
    }
}

TEST_CASE("infinite quiver weights omit delta") {
    FockSpace sp = level1(0, 0);
    Weight w = weight_of(sp, {Partition({2, 1})});
    CHECK(w.delta.empty());
    // weight step still holds
    FockElement img = apply_f(basis_element(sp, {Partition({2, 1})}), u(2));
    Weight expect = weight_add(w, weight_scale(Rat(-1), simple_root(sp.spec, u(2))));
    for (const auto& [nmp, c] : img.terms) CHECK(weight_of(sp, nmp) == expect);
}

TEST_CASE("weyl reflections") {
    QuiverSpec spec = build_quiver(2, {});
    Weight L0;
    L0.fundamental[u(0)] = 1;
    // reflection at the affine vertex q^0
    Weight r = weyl_reflect(spec, L0, u(0));
    CHECK(r.fundamental.at(u(0)) == -1);
    CHECK(r.fundamental.at(u(1)) == 2);
    CHECK(r.delta.at({Side::unprimed, +1}) == -1);
    // involution on a batch of weights
    QuiverSpec spec3 = build_quiver(3, {});
    FockSpace sp = level2(0, 1, 3);
    for (const auto& mp : multipartitions_of(3, 2)) {
        Weight w = weight_of(sp, mp);
        for (long i = 0; i < 3; ++i) {
            Weight rw = weyl_reflect(spec3, w, u(i));
            CHECK(weyl_reflect(spec3, rw, u(i)) == w);
        }
    }
}

TEST_CASE("reflections preserve the bilinear form") {
    QuiverSpec spec = build_quiver(3, {});
    FockSpace sp = level2(0, 1, 3);
    auto mps = multipartitions_of(4, 2);
    for (size_t a = 0; a < mps.size(); a += 3)
        for (size_t b = a; b < mps.size(); b += 4) {
            Weight wa = weight_of(sp, mps[a]);
            Weight wb = weight_of(sp, mps[b]);
            Rat form = bilinear_form(spec, wa, wb);
            for (long i = 0; i < 3; ++i) {
                Rat after = bilinear_form(spec, weyl_reflect(spec, wa, u(i)),
                                          weyl_reflect(spec, wb, u(i)));
                CHECK(after == form);
            }
        }
}

TEST_CASE("tensor split groups components and commutes with f") {
    // 4 components: charges with mixed signs -> two groups (sign +, sign -)
    QuiverSpec spec = build_quiver(3, {});
    FockSpace sp(spec, {{Side::unprimed, +1, 0},
                        {Side::unprimed, -1, 1},
                        {Side::unprimed, +1, 2},
                        {Side::unprimed, -1, -2}});
    MultiPartition mp{Partition({2}), Partition({1}), Partition{}, Partition({1, 1})};
    auto factors = tensor_split(sp, mp);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].positions == std::vector<int>({0, 2}));
    CHECK(factors[1].positions == std::vector<int>({1, 3}));
    // f_i acts only inside the factor containing i; check term counts agree
    for (int sgn : {+1, -1})
        for (long e = 0; e < 3; ++e) {
            QuiverVertex i{Side::unprimed, sgn, e};
            FockElement whole = apply_f(basis_element(sp, mp), i);
            const TensorFactor& fac = sgn > 0 ? factors[0] : factors[1];
            FockElement part = apply_f(basis_element(fac.space, fac.mp), i);
            CHECK(whole.terms.size() == part.terms.size());
        }
    // empty multipartition splits into empties
    auto ef = tensor_split(sp, MultiPartition(4));
    for (const auto& f : ef)
        for (const auto& p : f.mp) CHECK(p == Partition{});
}

TEST_CASE("specialization equivariance for a linear target") {
    QuiverSpec inf = build_quiver({}, {});
    QuiverSpec lin = build_quiver(3, {});
    FockSpace spi(inf, {{Side::unprimed, +1, 0}, {Side::unprimed, -1, -1}});
    for (long n = 0; n <= 3; ++n)
        for (const auto& mp : multipartitions_of(n, 2)) {
            FockElement v = basis_element(spi, mp);
            for (int sgn : {+1, -1})
                for (long i = 0; i < 3; ++i) {
                    QuiverVertex target{Side::unprimed, sgn, i};
                    // sum f_j over char-0 vertices j with sp(j) = target
                    FockElement sum;
                    sum.space = spi;
                    for (long jexp = -6; jexp <= 6; ++jexp) {
                        QuiverVertex j{Side::unprimed, sgn, jexp};
                        if (specialize(inf, lin, j) == lin.canonical(sgn > 0 ? target.side : target.side,
                                                                      sgn, i))
                            sum = add(sum, apply_f(v, j));
                    }
                    FockElement lhs = specialize_element(sum, lin);
                    FockElement rhs = apply_f(specialize_element(v, lin), target);
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("derivation eigenvalue is -(Delta + M at the affine vertex)") {
    FockSpace sp = level2(0, 1, 3);
    ComponentKey key{Side::unprimed, +1};
    for (const auto& mp : multipartitions_of(3, 2)) {
        Rat expect = -(delta_charge({0, 1}, 3) + Rat(m_count(sp, mp, u(0))));
        CHECK(derivation_eigenvalue(sp, mp, key) == expect);
    }
    // charges on other components do not contribute
    FockSpace mixed(build_quiver(3, {}),
                    {{Side::unprimed, +1, 0}, {Side::unprimed, -1, 1}});
    CHECK(derivation_eigenvalue(mixed, {Partition{}, Partition{}}, key) ==
          -delta_charge({0}, 3));
}
