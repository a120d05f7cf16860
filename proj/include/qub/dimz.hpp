#pragma once

#include <map>
#include <string>
#include <vector>

#include "qub/rational.hpp"

namespace qub {

// Multivariate polynomial over Z in formal degree symbols.
class MPoly {
public:
    using Key = std::vector<int>;  // exponent per variable

    MPoly() = default;
    static MPoly constant(const Int& c, int nvars);
    static MPoly variable(int idx, int nvars);

    MPoly& operator+=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator*(const Int& c, MPoly a);
    MPoly pow(int e, int nvars) const;

    bool operator==(const MPoly&) const = default;
    bool is_zero() const { return terms_.empty(); }
    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Key, Int> terms_;
};

// Verifies the symbolic identity
//   sum over characters m_chi^2 = 2^w w+! w-! dim(K L f0)
// in formal degree symbols: one for the defect-zero character, one per
// d-hook class on each side, and one per l-element class pair on each side.
struct DimZReport {
    bool pass = false;
    std::string lhs;
    std::string rhs;
    long terms_lhs = 0;
};

DimZReport dimz_identity_check(long d, long w_plus, long w_minus);

}  // namespace qub
