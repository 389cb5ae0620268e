#pragma once

// Truncated Laurent series in u with exact rational coefficients. Every
// series carries its own validity bound: coefficients of u^j are stored and
// trusted for lo() <= j < valid_to(), and arithmetic propagates the bound
// (products of truncated series are only known up to the weaker window).
// Comparisons that need coefficients beyond the bound throw truncation_error.

#include <limits>
#include <vector>

#include "rgw/rational.hpp"
#include "rgw/spoly.hpp"

namespace rgw {

inline constexpr int kDefaultUOrder = 24;
// Sentinel bound for exactly-known series (zero, or values promoted from an
// exact ring with an explicit expansion order). Kept far from INT_MAX so
// bound arithmetic cannot overflow.
inline constexpr int kExactBound = std::numeric_limits<int>::max() / 4;

class USeries {
  public:
    USeries() : lo_(0), valid_(kExactBound) {} // exact zero

    static USeries zero() { return USeries(); }

    static USeries monomial(int exp, const Rational& c, int valid = kExactBound) {
        USeries s;
        s.valid_ = valid;
        if (c != 0 && exp < valid) {
            s.lo_ = exp;
            s.coeffs_ = {c};
        }
        return s;
    }

    static USeries from_coeffs(int lo, std::vector<Rational> coeffs, int valid) {
        USeries s;
        s.lo_ = lo;
        s.coeffs_ = std::move(coeffs);
        s.valid_ = valid;
        s.normalize();
        return s;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int valid_to() const { return valid_; }
    // One past the last stored exponent; coefficients in [stored_hi, valid)
    // are zero.
    int stored_hi() const { return lo_ + static_cast<int>(coeffs_.size()); }

    Rational coeff(int exp) const {
        if (exp >= valid_)
            throw truncation_error("u-series coefficient u^" + std::to_string(exp) +
                                   " beyond truncation bound " + std::to_string(valid_));
        if (coeffs_.empty() || exp < lo_ || exp >= lo_ + static_cast<int>(coeffs_.size()))
            return 0;
        return coeffs_[exp - lo_];
    }

    bool covers(int hi_inclusive) const { return valid_ > hi_inclusive; }

    USeries truncated(int new_valid) const {
        USeries r = *this;
        if (new_valid < r.valid_) {
            r.valid_ = new_valid;
            if (!r.coeffs_.empty()) {
                int keep = new_valid - r.lo_;
                if (keep <= 0) r.coeffs_.clear();
                else if (keep < static_cast<int>(r.coeffs_.size()))
                    r.coeffs_.resize(keep);
            }
            r.normalize();
        }
        return r;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        int valid = std::min(a.valid_, b.valid_);
        if (a.is_zero()) return b.truncated(valid);
        if (b.is_zero()) return a.truncated(valid);
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::min(valid, std::max(a.lo_ + static_cast<int>(a.coeffs_.size()),
                                          b.lo_ + static_cast<int>(b.coeffs_.size())));
        std::vector<Rational> c(std::max(0, hi - lo));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.lo_ + static_cast<int>(i) < hi) c[a.lo_ + i - lo] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            if (b.lo_ + static_cast<int>(i) < hi) c[b.lo_ + i - lo] += b.coeffs_[i];
        return from_coeffs(lo, std::move(c), valid);
    }
    friend USeries operator-(const USeries& a) {
        USeries r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

    friend USeries operator*(const USeries& a, const USeries& b) {
        if (a.is_zero() || b.is_zero()) {
            USeries z;
            z.valid_ = std::min({kExactBound, a.zero_product_bound(b), b.zero_product_bound(a)});
            return z;
        }
        // Coefficients of the product are trusted where every contributing
        // pair is: below min(valid_a + lo_b, valid_b + lo_a).
        int valid = std::min(clamp_add(a.valid_, b.lo_), clamp_add(b.valid_, a.lo_));
        int lo = a.lo_ + b.lo_;
        int n = std::max(0, std::min(valid - lo, static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1));
        std::vector<Rational> c(n);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                int pos = static_cast<int>(i + j);
                if (pos >= n) break;
                c[pos] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(lo, std::move(c), valid);
    }

    USeries& operator+=(const USeries& o) { return *this = *this + o; }
    USeries& operator-=(const USeries& o) { return *this = *this - o; }
    USeries& operator*=(const USeries& o) { return *this = *this * o; }
    USeries& operator*=(const Rational& c) {
        if (c == 0) return *this = zero().truncated(valid_);
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    friend USeries operator*(USeries a, const Rational& c) { return a *= c; }
    friend USeries operator*(const Rational& c, USeries a) { return a *= c; }

    // Multiplicative inverse; requires a nonzero leading coefficient. The
    // result is valid below valid_to() - 2*lo().
    USeries inverse() const {
        if (is_zero())
            throw argument_error("USeries::inverse: series is zero (not invertible)");
        if (valid_ >= kExactBound && coeffs_.size() > 1)
            throw truncation_error(
                "USeries::inverse: exact non-monomial has an infinite inverse; "
                "truncate to a finite order first");
        const Rational c0 = coeffs_[0];
        const int v = lo_;
        int out_valid = clamp_add(valid_, -2 * v);
        int terms = out_valid - (-v);
        if (terms <= 0)
            throw truncation_error("USeries::inverse: no valid window left");
        // x = c0 u^v (1 + w); 1/x = c0^{-1} u^{-v} sum (-w)^n.
        USeries w = from_coeffs(1, tail_over_leading(), clamp_add(valid_, -v));
        USeries acc = monomial(0, 1, out_valid + v); // series in u, valuation 0
        USeries term = monomial(0, 1, out_valid + v);
        for (int n = 1; n < terms; ++n) {
            term = term * (-w);
            if (term.is_zero()) break;
            acc += term;
        }
        Rational inv_c0 = rat(c0.get_den(), c0.get_num());
        USeries shift = monomial(-v, inv_c0, kExactBound);
        return (shift * acc).truncated(out_valid);
    }

    USeries pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        USeries r = monomial(0, 1, kExactBound);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // Substitution u -> -u.
    USeries negate_u() const {
        USeries r = *this;
        for (size_t i = 0; i < r.coeffs_.size(); ++i)
            if ((r.lo_ + static_cast<int>(i)) % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    // Equality of the coefficient windows both series actually cover.
    friend bool operator==(const USeries& a, const USeries& b) {
        int hi = std::min(a.valid_, b.valid_);
        int lo = std::min(a.lo_, b.lo_);
        for (int e = lo; e < hi; ++e)
            if (a.coeff(e) != b.coeff(e)) return false;
        return true;
    }

    // Strict equality over an explicitly requested window [lo, hi].
    static bool equal_on(const USeries& a, const USeries& b, int lo, int hi) {
        if (!a.covers(hi) || !b.covers(hi))
            throw truncation_error("equal_on: window [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "] exceeds truncation");
        for (int e = lo; e <= hi; ++e)
            if (a.coeff(e) != b.coeff(e)) return false;
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rational_to_string(coeffs_[i]);
            int e = lo_ + static_cast<int>(i);
            if (e != 0) out += "*u^" + std::to_string(e);
        }
        out += " + O(u^" + std::to_string(valid_ >= kExactBound ? 9999 : valid_) + ")";
        return out;
    }

  private:
    int lo_;
    int valid_; // exclusive upper bound of trusted exponents
    std::vector<Rational> coeffs_; // coeffs_[i] is the coefficient of u^{lo_+i}

    static int clamp_add(int a, int b) {
        long long s = static_cast<long long>(a) + b;
        if (s > kExactBound) return kExactBound;
        if (s < -kExactBound) return -kExactBound;
        return static_cast<int>(s);
    }
    int zero_product_bound(const USeries& other) const {
        // this is zero: product vanishes identically but the bound still
        // reflects how far the zero is certified.
        return clamp_add(valid_, other.is_zero() ? 0 : other.lo_);
    }
    std::vector<Rational> tail_over_leading() const {
        std::vector<Rational> t(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) t[i - 1] = coeffs_[i] / coeffs_[0];
        return t;
    }
    void normalize() {
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            lo_ = 0;
            return;
        }
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
            lo_ += static_cast<int>(lead);
        }
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

// Ring homomorphism on the exact subring: s^m -> e^{mu/2}, expanded through
// u^order. sinh_factor(k) maps to the odd series ku + (ku)^3/24 + ...
inline USeries to_u_series(const SPoly& p, int order) {
    if (order < 0) throw argument_error("to_u_series: negative order");
    std::vector<Rational> acc(order + 1);
    for (const auto& [m, c] : p.coeffs()) {
        // e^{mu/2}: term_j = (m/2)^j / j!
        Rational t = 1;
        for (int j = 0; j <= order; ++j) {
            if (j > 0) t *= rat(m, 2 * j);
            acc[j] += c * t;
        }
    }
    return USeries::from_coeffs(0, std::move(acc), order + 1);
}

inline USeries invert_u(const USeries& x) { return x.inverse(); }

} // namespace rgw
