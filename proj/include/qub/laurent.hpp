#pragma once

#include <map>
#include <sstream>
#include <stdexcept>

#include "qub/rational.hpp"

namespace qub {

// Laurent polynomial in one variable q over the exact rationals.
// Sparse: exponent -> nonzero coefficient.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    Laurent(const Rat& c, long exp) {
        if (c != 0) coeffs_[exp] = c;
    }

    static Laurent q_power(long e) { return Laurent(Rat(1), e); }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<long, Rat>& coeffs() const { return coeffs_; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }

    Rat at(long q0) const { return eval(Rat(q0)); }

    Rat eval(const Rat& q0) const {
        if (q0 == 0) throw std::invalid_argument("Laurent::eval: q0 must be nonzero");
        Rat r(0);
        for (const auto& [e, c] : coeffs_) r += c * rat_pow(q0, e);
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rat a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    void add_term(long e, const Rat& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::map<long, Rat> coeffs_;
};

}  // namespace qub
