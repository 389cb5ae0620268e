#pragma once

// Generating functions in the formal degree variable q, truncated at a fixed
// q-degree, with Scalar coefficients. exp/log are mutually inverse up to the
// truncation and require constant term 0 / 1 respectively.

#include <map>

#include "rgw/scalar.hpp"

namespace rgw {

inline constexpr int kDefaultQOrder = 10;

class QSeries {
  public:
    explicit QSeries(int dmax = kDefaultQOrder, Rational c0 = 0)
        : dmax_(dmax), c0_(std::move(c0)) {
        if (dmax < 1) throw argument_error("QSeries: dmax must be >= 1");
    }

    int dmax() const { return dmax_; }
    const Rational& constant_term() const { return c0_; }
    void set_constant(const Rational& c) { c0_ = c; }

    Scalar coeff(int d) const {
        if (d == 0) return Scalar(c0_);
        if (d < 1 || d > dmax_)
            throw argument_error("QSeries: degree " + std::to_string(d) +
                                 " outside truncation " + std::to_string(dmax_));
        auto it = terms_.find(d);
        return it == terms_.end() ? Scalar() : it->second;
    }
    void set_coeff(int d, Scalar s) {
        if (d < 1 || d > dmax_) {
            if (d == 0) throw argument_error("QSeries: use set_constant for q^0");
            return; // beyond truncation, dropped
        }
        if (s.is_zero()) terms_.erase(d);
        else terms_[d] = std::move(s);
    }
    const std::map<int, Scalar>& terms() const { return terms_; }

    QSeries& operator+=(const QSeries& o) {
        c0_ += o.c0_;
        for (const auto& [d, s] : o.terms_)
            if (d <= dmax_) set_coeff(d, coeff(d) + s);
        return *this;
    }
    QSeries& operator-=(const QSeries& o) {
        c0_ -= o.c0_;
        for (const auto& [d, s] : o.terms_)
            if (d <= dmax_) set_coeff(d, coeff(d) - s);
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.dmax_, b.dmax_), a.c0_ * b.c0_);
        for (int d = 1; d <= r.dmax_; ++d) {
            Scalar acc;
            if (a.c0_ != 0) acc += b.coeff_or_zero(d) * a.c0_;
            if (b.c0_ != 0) acc += a.coeff_or_zero(d) * b.c0_;
            for (const auto& [i, sa] : a.terms_) {
                if (i >= d) break;
                auto it = b.terms_.find(d - i);
                if (it != b.terms_.end()) acc += sa * it->second;
            }
            r.set_coeff(d, acc);
        }
        return r;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries& operator*=(const Rational& c) {
        c0_ *= c;
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [d, s] : terms_) s *= c;
        return *this;
    }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        if (a.c0_ != b.c0_) return false;
        int dm = std::min(a.dmax_, b.dmax_);
        for (int d = 1; d <= dm; ++d)
            if (!(a.coeff_or_zero(d) == b.coeff_or_zero(d))) return false;
        return true;
    }

  private:
    int dmax_;
    Rational c0_;
    std::map<int, Scalar> terms_;

    Scalar coeff_or_zero(int d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Scalar() : it->second;
    }
};

// exp of a q-series with zero constant term.
inline QSeries exp_q(const QSeries& f) {
    if (f.constant_term() != 0)
        throw argument_error("exp_q: constant term must be 0");
    QSeries r(f.dmax(), 1);
    QSeries power = f; // running f^n
    Int nfact = 1;
    for (int n = 1; n <= f.dmax(); ++n) {
        if (n > 1) power = power * f;
        nfact *= n;
        QSeries term = power;
        term *= rat(Int(1), nfact);
        r += term;
    }
    return r;
}

// log of a q-series with constant term 1.
inline QSeries log_q(const QSeries& g) {
    if (g.constant_term() != 1)
        throw argument_error("log_q: constant term must be 1");
    QSeries h = g;
    h.set_constant(0);
    QSeries r(g.dmax(), 0);
    QSeries power = h;
    for (int n = 1; n <= g.dmax(); ++n) {
        if (n > 1) power = power * h;
        QSeries term = power;
        term *= rat((n % 2 == 1) ? 1 : -1, n);
        r += term;
    }
    return r;
}

} // namespace rgw
