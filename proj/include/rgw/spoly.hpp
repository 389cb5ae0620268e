#pragma once

// Exact Laurent polynomials in s = Q^{1/2} = e^{u/2}. The hooklength factor
// 2 sinh(ku/2) is s^k - s^{-k}, so every closed-surface CY invariant with
// g >= 1 lives in this ring without truncation.

#include <map>

#include "rgw/rational.hpp"

namespace rgw {

class SPoly {
  public:
    SPoly() = default;
    explicit SPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static SPoly monomial(int exp, const Rational& c) {
        SPoly p;
        if (c != 0) p.coeffs_[exp] = c;
        return p;
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void set(int exp, const Rational& c) {
        if (c == 0) coeffs_.erase(exp);
        else coeffs_[exp] = c;
    }

    SPoly& operator+=(const SPoly& o) {
        for (const auto& [e, c] : o.coeffs_) {
            Rational& v = coeffs_[e];
            v += c;
            if (v == 0) coeffs_.erase(e);
        }
        return *this;
    }
    SPoly& operator-=(const SPoly& o) {
        for (const auto& [e, c] : o.coeffs_) {
            Rational& v = coeffs_[e];
            v -= c;
            if (v == 0) coeffs_.erase(e);
        }
        return *this;
    }
    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator-(const SPoly& a) {
        SPoly r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                Rational& v = r.coeffs_[ea + eb];
                v += ca * cb;
                if (v == 0) r.coeffs_.erase(ea + eb);
            }
        return r;
    }
    SPoly& operator*=(const SPoly& o) { return *this = *this * o; }
    SPoly& operator*=(const Rational& c) {
        if (c == 0) { coeffs_.clear(); return *this; }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }
    friend SPoly operator*(SPoly a, const Rational& c) { return a *= c; }
    friend SPoly operator*(const Rational& c, SPoly a) { return a *= c; }

    friend bool operator==(const SPoly& a, const SPoly& b) = default;

    // Substitution s -> s^{-1}; negates each sinh factor.
    SPoly invert_s() const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    SPoly pow(int n) const {
        if (n < 0) throw argument_error("SPoly::pow: negative exponent");
        SPoly r(Rational(1));
        SPoly b = *this;
        while (n > 0) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            out += rational_to_string(c);
            if (e != 0) out += "*s^" + std::to_string(e);
        }
        return out;
    }

  private:
    std::map<int, Rational> coeffs_; // exponent of s -> nonzero coefficient
};

// s^k - s^{-k}, i.e. 2 sinh(ku/2).
inline SPoly sinh_factor(int k) {
    if (k < 1) throw argument_error("sinh_factor: k must be >= 1");
    SPoly p;
    p.set(k, 1);
    p.set(-k, -1);
    return p;
}

} // namespace rgw
