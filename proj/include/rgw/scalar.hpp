#pragma once

// Scalars of the TQFT ground ring: Laurent polynomials in the equivariant
// parameter t whose coefficients live either in the exact s-Laurent ring
// (s = Q^{1/2}) or in its truncated u-expansion. t is never expanded; the
// two coefficient views coexist and mixing promotes exact to expanded.

#include <map>

#include "rgw/spoly.hpp"
#include "rgw/useries.hpp"

namespace rgw {

// Expansion slack applied when an exact coefficient meets a truncated one,
// so the product's validity window is limited by the truncated side only.
inline constexpr int kExpandSlack = 64;
inline constexpr int kMaxExpandOrder = 512;

class SCoeff {
  public:
    SCoeff() : expanded_(false) {}
    /*implicit*/ SCoeff(SPoly p) : expanded_(false), p_(std::move(p)) {}
    /*implicit*/ SCoeff(USeries u) : expanded_(true), u_(std::move(u)) {}
    /*implicit*/ SCoeff(const Rational& c) : expanded_(false), p_(c) {}

    bool expanded() const { return expanded_; }
    bool is_zero() const { return expanded_ ? u_.is_zero() : p_.is_zero(); }
    const SPoly& poly() const {
        if (expanded_) throw argument_error("SCoeff: expanded view has no exact poly");
        return p_;
    }
    const USeries& series() const {
        if (!expanded_) throw argument_error("SCoeff: exact view has no u-series");
        return u_;
    }

    USeries expand(int order) const {
        if (expanded_) return u_;
        return to_u_series(p_, order);
    }
    SCoeff expanded_view(int order) const { return SCoeff(expand(order)); }

    friend SCoeff operator+(const SCoeff& a, const SCoeff& b) {
        if (!a.expanded_ && !b.expanded_) return SCoeff(a.p_ + b.p_);
        auto [x, y] = promote(a, b);
        return SCoeff(x + y);
    }
    friend SCoeff operator-(const SCoeff& a, const SCoeff& b) {
        if (!a.expanded_ && !b.expanded_) return SCoeff(a.p_ - b.p_);
        auto [x, y] = promote(a, b);
        return SCoeff(x - y);
    }
    friend SCoeff operator-(const SCoeff& a) {
        if (!a.expanded_) return SCoeff(-a.p_);
        return SCoeff(-a.series());
    }
    friend SCoeff operator*(const SCoeff& a, const SCoeff& b) {
        if (!a.expanded_ && !b.expanded_) return SCoeff(a.p_ * b.p_);
        auto [x, y] = promote(a, b);
        return SCoeff(x * y);
    }
    friend SCoeff operator*(const SCoeff& a, const Rational& c) {
        if (!a.expanded_) return SCoeff(a.p_ * c);
        USeries u = a.u_;
        u *= c;
        return SCoeff(u);
    }
    friend SCoeff operator*(const Rational& c, const SCoeff& a) { return a * c; }
    SCoeff& operator+=(const SCoeff& o) { return *this = *this + o; }
    SCoeff& operator-=(const SCoeff& o) { return *this = *this - o; }
    SCoeff& operator*=(const SCoeff& o) { return *this = *this * o; }

    friend bool operator==(const SCoeff& a, const SCoeff& b) {
        if (!a.expanded_ && !b.expanded_) return a.p_ == b.p_;
        auto [x, y] = promote(a, b);
        return x == y;
    }

    std::string to_string() const { return expanded_ ? u_.to_string() : p_.to_string(); }

  private:
    bool expanded_;
    SPoly p_;
    USeries u_;

    static std::pair<USeries, USeries> promote(const SCoeff& a, const SCoeff& b) {
        if (a.expanded_ && b.expanded_) return {a.u_, b.u_};
        const SCoeff& ex = a.expanded_ ? b : a; // the exact one
        const USeries& tr = a.expanded_ ? a.u_ : b.u_;
        int order;
        if (tr.valid_to() >= kExactBound) {
            if (!tr.is_zero())
                throw truncation_error("SCoeff: cannot mix exact poly with an "
                                       "untruncated nonzero u-series");
            order = kDefaultUOrder + kExpandSlack;
        } else {
            order = std::min(tr.valid_to() - 1 + kExpandSlack, kMaxExpandOrder);
        }
        if (order < 0) order = 0;
        USeries e = to_u_series(ex.p_, order);
        return a.expanded_ ? std::make_pair(tr, e) : std::make_pair(e, tr);
    }
};

// Sparse Laurent polynomial in t with SCoeff coefficients.
class Scalar {
  public:
    Scalar() = default;
    /*implicit*/ Scalar(const Rational& c) {
        if (c != 0) coeffs_.emplace(0, SCoeff(c));
    }
    static Scalar t_monomial(int texp, SCoeff c) {
        Scalar s;
        if (!c.is_zero()) s.coeffs_.emplace(texp, std::move(c));
        return s;
    }

    const std::map<int, SCoeff>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    SCoeff coeff(int texp) const {
        auto it = coeffs_.find(texp);
        return it == coeffs_.end() ? SCoeff() : it->second;
    }

    // Nonzero scalars supported on a single power of t report that exponent.
    bool is_t_monomial() const { return coeffs_.size() == 1; }
    int t_exponent() const {
        if (!is_t_monomial())
            throw argument_error("Scalar: not a single t-power (" +
                                 std::to_string(coeffs_.size()) + " terms)");
        return coeffs_.begin()->first;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend Scalar operator*(const Scalar& a, const Rational& c) {
        Scalar r;
        if (c == 0) return r;
        for (const auto& [e, v] : a.coeffs_) r.coeffs_.emplace(e, v * c);
        return r;
    }
    friend Scalar operator*(const Rational& c, const Scalar& a) { return a * c; }
    Scalar& operator*=(const Rational& c) { return *this = *this * c; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        // Compare termwise; a missing term compares equal to a zero-valued one
        // only if the other side's term is zero (normalized maps never store
        // zeros in the exact view, but truncated zeros can linger).
        auto ia = a.coeffs_.begin();
        auto ib = b.coeffs_.begin();
        while (ia != a.coeffs_.end() || ib != b.coeffs_.end()) {
            if (ib == b.coeffs_.end() || (ia != a.coeffs_.end() && ia->first < ib->first)) {
                if (!ia->second.is_zero()) return false;
                ++ia;
            } else if (ia == a.coeffs_.end() || ib->first < ia->first) {
                if (!ib->second.is_zero()) return false;
                ++ib;
            } else {
                if (!(ia->second == ib->second)) return false;
                ++ia;
                ++ib;
            }
        }
        return true;
    }

    Scalar expanded_view(int order) const {
        Scalar r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c.expanded_view(order));
        return r;
    }

    bool fully_exact() const {
        for (const auto& [e, c] : coeffs_)
            if (c.expanded()) return false;
        return true;
    }

    // s -> s^{-1} on every exact coefficient (u -> -u in the expanded view).
    Scalar flip_su() const {
        Scalar r;
        for (const auto& [e, c] : coeffs_) {
            if (c.expanded()) r.coeffs_.emplace(e, SCoeff(c.series().negate_u()));
            else r.coeffs_.emplace(e, SCoeff(c.poly().invert_s()));
        }
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (!out.empty()) out += "  +  ";
            if (e != 0) out += "t^" + std::to_string(e) + " * ";
            out += "(" + c.to_string() + ")";
        }
        return out;
    }

  private:
    std::map<int, SCoeff> coeffs_;

    void add_term(int e, const SCoeff& c) {
        if (c.is_zero() && !c.expanded()) return;
        auto [it, fresh] = coeffs_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero() && !it->second.expanded()) coeffs_.erase(it);
        }
    }
};

} // namespace rgw
