#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qub/laurent.hpp"
#include "qub/matrix.hpp"
#include "qub/quiver.hpp"

namespace qub {

// Signed permutation of {1..m}: img[i-1] = w(i), values in {±1..±m}.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> img);
    static SignedPerm identity(int m);

    int size() const { return int(img_.size()); }
    int apply(int i) const;  // defined for i in ±1..±m
    SignedPerm compose(const SignedPerm& o) const;  // (this ∘ o)(i) = this(o(i))
    SignedPerm inverse() const;
    bool is_identity() const;

    // Coxeter length in type B with generators t1, s2..sm.
    long length() const;

    bool operator==(const SignedPerm&) const = default;
    auto operator<=>(const SignedPerm&) const = default;

    static SignedPerm gen_t1(int m);
    static SignedPerm gen_s(int m, int i);  // swaps i-1, i (2 <= i <= m)
    static std::vector<SignedPerm> all(int m);

private:
    std::vector<int> img_;
};

// Element of W_{m+} x W_{m-}.
struct BWord {
    SignedPerm plus;
    SignedPerm minus;
    long length() const { return plus.length() + minus.length(); }
    bool operator==(const BWord&) const = default;
    auto operator<=>(const BWord&) const = default;
};

struct HeckeParams {
    long t_plus = 0;
    long t_minus = 0;
    int m_plus = 0;
    int m_minus = 0;
    bool operator==(const HeckeParams&) const = default;
    long basis_dim() const;  // 2^{m+} m+! 2^{m-} m-!
};

// Generator index: 0..m_plus-1 are v_1..v_{m+}, then m_plus..m-1 are u_1..u_{m-}.
struct HeckeAlgebra;

struct HeckeElement {
    HeckeParams params;
    std::map<BWord, Laurent> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const HeckeElement&) const = default;
};

struct HeckeAlgebra {
    HeckeParams params;

    explicit HeckeAlgebra(HeckeParams p) : params(p) {}

    int num_generators() const { return params.m_plus + params.m_minus; }
    // Quadratic parameter of generator g: T_g^2 = (Q-1)T_g + Q.
    Laurent gen_parameter(int g) const;
    BWord gen_word(int g) const;

    HeckeElement one() const;
    HeckeElement basis(const BWord& w) const;
    HeckeElement scalar(const Laurent& c) const;

    HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
    HeckeElement scale(const Laurent& c, const HeckeElement& a) const;
    HeckeElement mul_gen(int g, const HeckeElement& a) const;  // T_g * a
    HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

    // Images of X_1..X_{m+} then X'_1..X'_{m-}; all pairwise commuting.
    std::vector<HeckeElement> x_generators() const;

    std::vector<BWord> basis_words() const;  // fixed order

    // Left-multiplication matrix on the T_w basis at q = q0.
    QMat regular_matrix(const HeckeElement& a, const Rat& q0) const;
};

// Regular representation bundle at a rational specialization.
struct RegularRep {
    HeckeParams params;
    Rat q0;
    std::vector<BWord> basis;
    std::vector<QMat> gen_mats;  // one per generator
    std::vector<QMat> x_mats;    // X_1..X_{m+}, X'_1..X'_{m-}
};

// Throws std::invalid_argument if q0 makes a relation denominator vanish.
RegularRep regular_representation(const HeckeParams& params, const Rat& q0);

// Simultaneous generalized eigenspace decomposition of the commuting X
// matrices. Throws std::domain_error when the spectrum is not rational
// (unsupported specialization).
struct EigenBlock {
    std::vector<Rat> tuple;  // eigenvalue per X generator
    QMat projector;
    int dim = 0;
};
std::vector<EigenBlock> eigenspace_idempotents(const RegularRep& rep);

// Spectrum of one matrix, exact. Candidates are (+-q0)^k q0^j products.
std::vector<Rat> x_spectrum(const RegularRep& rep, int which_x);

// KLR generators on one factor of the regular representation.
struct KlrData {
    QuiverSpec spec;                       // infinite quiver
    std::vector<std::vector<Rat>> tuples;  // eigen tuples per block
    std::vector<QMat> e;                   // idempotents per block
    std::vector<QMat> x;                   // x_a, a = 1..m
    std::vector<QMat> tau;                 // tau_b, b = 1..m-1
    std::map<Rat, QuiverVertex> vertex_of;
};

// factor: +1 for the B_{m+} factor, -1 for B_{m-}.
KlrData klr_transform(const HeckeParams& params, const Rat& q0, int factor);

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    long checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

CheckReport klr_relation_check(const HeckeParams& params, const Rat& q0);

// --- sign vectors and minimal coset representatives -----------------------

using SignVector = std::vector<int>;  // entries +1 / -1

std::vector<SignVector> jm_set(int m_plus, int m_minus);
// pi_nu as images pi(1..m); pi . nu = nu0 and pi has minimal length.
std::vector<int> pi_nu(const SignVector& nu);
long pi_length(const SignVector& nu);

// Rostam decomposition check at the dimension level: the block matrix model
// of e(m̄)H over |J| copies of the tensor regular representation.
struct DisconnectedReport {
    CheckReport report;
    long total_dim = 0;
    long expected_total = 0;
    std::vector<std::vector<long>> pair_ranks;  // indexed by (nu', nu)
};
DisconnectedReport disconnected_decomposition_check(const HeckeParams& params, const Rat& q0);

}  // namespace qub
