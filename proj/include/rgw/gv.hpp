#pragma once

// Extraction of real and complex BPS states from the CY generating functions
// and verification of the local real Gopakumar-Vafa structure.
//
// The complex side is computed natively in the sinh-ring: under u -> iu each
// 2 sin(k u/2) picks up a factor i, which collapses to (-1)^{d(g-1)} on the
// degree-d partition-sum term and to (-1)^{h-1} on the (2 sinh)^{2h-2} basis
// element. No trigonometric or complex arithmetic appears anywhere.
//
// Extraction is a back-substitution in two triangular families:
//   real side    (2 sinh(u/2))^{h-1}  starting at u^{h-1},  k odd covers only,
//   complex side (2 sinh(u/2))^{2h-2} starting at u^{2h-2}, all k covers.
// Extracted values are exact rationals; non-integers are recorded as
// failures, never rounded.

#include <functional>
#include <sstream>

#include "rgw/qseries.hpp"
#include "rgw/tqft.hpp"

namespace rgw {

// In-memory bank of degree contexts, optionally fed by a table loader (the
// CLI plugs in the disk cache).
class ContextBank {
  public:
    using Loader = std::function<CharacterTable(int)>;
    explicit ContextBank(Loader loader = {}, int maxd = kDefaultMaxDegree)
        : loader_(std::move(loader)), maxd_(maxd) {}

    const DegreeContext& get(int d) {
        auto it = ctxs_.find(d);
        if (it != ctxs_.end()) return *it->second;
        check_degree(d, maxd_);
        auto ctx = std::make_shared<DegreeContext>(
            loader_ ? DegreeContext::make(loader_(d))
                    : DegreeContext::make(d, maxd_));
        return *ctxs_.emplace(d, std::move(ctx)).first->second;
    }
    int max_degree() const { return maxd_; }

  private:
    Loader loader_;
    int maxd_;
    std::map<int, std::shared_ptr<const DegreeContext>> ctxs_;
};

// (2 sinh(ku/2))^n as a truncated u-series covering exponents < order+1.
inline USeries sinh_power(int k, int n, int order) {
    if (n >= 0) return to_u_series(sinh_factor(k).pow(n), order);
    int work = order + 2 * (-n) * k + 4;
    return to_u_series(sinh_factor(k).pow(-n), work).inverse().truncated(order + 1);
}

struct BpsTable {
    int genus = 0;
    bool real_side = true;
    std::map<std::pair<int, int>, Rational> entries; // (d, h) -> n_{d,h}

    struct Report {
        std::vector<std::string> integrality_failures;
        std::vector<std::string> parity_failures;
        std::vector<std::string> vanishing_failures;
        std::vector<std::string> support_failures;
        std::map<int, int> max_h; // per degree: largest h with nonzero entry
        bool ok() const {
            return integrality_failures.empty() && parity_failures.empty() &&
                   vanishing_failures.empty() && support_failures.empty();
        }
    } report;

    Rational value(int d, int h) const {
        auto it = entries.find({d, h});
        return it == entries.end() ? Rational(0) : it->second;
    }
    void set(int d, int h, const Rational& n) {
        if (n == 0) return;
        entries[{d, h}] = n;
        auto [it, fresh] = report.max_h.emplace(d, h);
        if (!fresh && h > it->second) it->second = h;
    }
};

namespace detail {

// The u-series content of a CY q-coefficient (t-free by construction).
inline USeries cy_coefficient(const Scalar& s, int order) {
    if (s.is_zero()) return USeries::zero().truncated(order + 1);
    if (!s.is_t_monomial() || s.t_exponent() != 0)
        throw verification_error("CY series coefficient is not t-free: " + s.to_string());
    return s.coeff(0).expand(order);
}

inline int lowest_nonzero(const USeries& u, int from) {
    if (u.is_zero()) return u.valid_to();
    for (int e = std::min(from, u.lo()); e < u.valid_to(); ++e)
        if (u.coeff(e) != 0) return e;
    return u.valid_to();
}

} // namespace detail

// Z_g = 1 + sum_d RGW_d(g|g-1) q^d, coefficients expanded through u^order.
inline QSeries real_cy_partition_series(ContextBank& bank, int g, int dmax, int order) {
    QSeries z(dmax, 1);
    for (int d = 1; d <= dmax; ++d) {
        Scalar s = closed_invariant(bank.get(d), g, g - 1, order);
        z.set_coeff(d, s.expanded_view(order));
    }
    return z;
}

// Z^C at iu: 1 + sum_d (-1)^{d(g-1)} sum_{rho |- d} prod_box
// (2 sinh(h(box) u/2))^{2g-2} q^d. Needs only hook data, no characters.
inline QSeries complex_cy_partition_series(int g, int dmax, int order,
                                           int maxd = kDefaultMaxDegree) {
    QSeries z(dmax, 1);
    for (int d = 1; d <= dmax; ++d) {
        USeries acc = USeries::zero().truncated(order + 1);
        for (const auto& rho : partitions_of(d, maxd)) {
            StructureMonomial m = StructureMonomial::one();
            for (int h : hooks(rho)) m.sinh_pows[h] += 2 * g - 2;
            for (auto it = m.sinh_pows.begin(); it != m.sinh_pows.end();)
                it = it->second == 0 ? m.sinh_pows.erase(it) : std::next(it);
            if (d % 2 == 1 && (g - 1) % 2 != 0) m.c = -m.c; // (-1)^{d(g-1)}
            Scalar s = m.to_scalar(order);
            acc += detail::cy_coefficient(s, order);
        }
        z.set_coeff(d, Scalar::t_monomial(0, SCoeff(acc)));
    }
    return z;
}

// Shared triangular solve. basis_start(h) is the leading u-exponent of the
// h-th basis element, basis(h, k) the k-cover basis series, and covers(k)
// says which multiple-cover indices participate.
struct ExtractionShape {
    std::function<int(int)> basis_start;
    std::function<USeries(int h, int k)> basis;
    std::function<bool(int)> covers;
};

inline BpsTable extract_bps(const QSeries& connected, int g, int hmax, int order,
                            bool real_side, const ExtractionShape& shape) {
    BpsTable table;
    table.genus = g;
    table.real_side = real_side;
    const int dmax = connected.dmax();
    for (int d = 1; d <= dmax; ++d) {
        USeries resid = detail::cy_coefficient(connected.coeff(d), order);
        // subtract multiple covers of lower degrees
        for (int k = 2; k <= d; ++k) {
            if (d % k != 0 || !shape.covers(k)) continue;
            for (int h = 0; h <= hmax; ++h) {
                Rational n = table.value(d / k, h);
                if (n == 0) continue;
                USeries term = shape.basis(h, k);
                term *= n / k;
                resid -= term;
            }
        }
        // back-substitute against the k = 1 basis, lowest exponent first
        const int floor_exp = shape.basis_start(0);
        while (true) {
            int e = detail::lowest_nonzero(resid, floor_exp);
            if (e >= resid.valid_to()) break; // zero on the whole trusted window
            if (e < floor_exp)
                throw verification_error(
                    "bps extraction: residual at q^" + std::to_string(d) +
                    " has u-exponent " + std::to_string(e) + " below the basis");
            int h = -1;
            for (int cand = 0; cand <= hmax; ++cand)
                if (shape.basis_start(cand) == e) { h = cand; break; }
            if (h < 0) {
                std::ostringstream os;
                os << "d=" << d << ": residual exponent u^" << e
                   << " outside the basis family (support touched hmax="
                   << hmax << "?): " << resid.to_string();
                table.report.support_failures.push_back(os.str());
                break;
            }
            USeries b = shape.basis(h, 1);
            Rational lead = b.coeff(e);
            Rational n = resid.coeff(e) / lead;
            table.set(d, h, n);
            b *= n;
            resid -= b;
        }
    }
    for (const auto& [dh, n] : table.entries)
        if (!is_integer(n))
            table.report.integrality_failures.push_back(
                "n(d=" + std::to_string(dh.first) + ",h=" + std::to_string(dh.second) +
                ") = " + rational_to_string(n));
    return table;
}

inline ExtractionShape real_shape(int order) {
    return {
        [](int h) { return h - 1; },
        [order](int h, int k) { return sinh_power(k, h - 1, order); },
        [](int k) { return k % 2 == 1; },
    };
}

// Complex basis carries the (-1)^{h-1} from 2 sin(k iu/2) = 2i sinh(ku/2).
inline ExtractionShape complex_shape(int order) {
    return {
        [](int h) { return 2 * h - 2; },
        [order](int h, int k) {
            USeries b = sinh_power(k, 2 * h - 2, order);
            if (h % 2 == 0) b *= Rational(-1);
            return b;
        },
        [](int) { return true; },
    };
}

// Complex BPS states of the level (g-1, g-1) theory.
inline BpsTable extract_complex_bps(int g, int dmax, int hmax, int order,
                                    int maxd = kDefaultMaxDegree) {
    QSeries z = complex_cy_partition_series(g, dmax, order, maxd);
    QSeries conn = log_q(z);
    return extract_bps(conn, g, hmax, order, false, complex_shape(order));
}

// Doublet contribution rebuilt from the complex BPS table:
//   sum_d D_g q^{2d} = 1/2 sum_{d,h} n^C_{d,h} (-1)^{h-1}
//                      sum_k (1/k) (2 sinh(ku/2))^{2h-2} q^{2kd}.
inline QSeries doublet_series_from_complex(const BpsTable& cx, int dmax, int order) {
    QSeries out(dmax, 0);
    for (const auto& [dh, n] : cx.entries) {
        auto [d, h] = dh;
        for (int k = 1; 2 * k * d <= dmax; ++k) {
            USeries term = sinh_power(k, 2 * h - 2, order);
            Rational c = n / (2 * k);
            if (h % 2 == 0) c = -c;
            term *= c;
            int deg = 2 * k * d;
            Scalar prev = out.coeff(deg);
            out.set_coeff(deg, prev + Scalar::t_monomial(0, SCoeff(term)));
        }
    }
    return out;
}

// C_g = log(Z_g) - D_g with D_g rebuilt from the complex side.
inline QSeries connected_real_series(ContextBank& bank, int g, int dmax, int order,
                                     int hmax_cx) {
    QSeries z = real_cy_partition_series(bank, g, dmax, order);
    QSeries conn = log_q(z);
    if (dmax >= 2) {
        BpsTable cx = extract_complex_bps(g, dmax / 2, hmax_cx, order, bank.max_degree());
        if (!cx.report.integrality_failures.empty())
            throw verification_error("complex BPS used for the doublet term "
                                     "failed integrality");
        conn -= doublet_series_from_complex(cx, dmax, order);
    }
    return conn;
}

inline BpsTable extract_real_bps(const QSeries& connected, int g, int hmax, int order) {
    // Basis triangularity: (2 sinh(u/2))^{h-1} starts at u^{h-1} with
    // coefficient 1. Asserted before every solve.
    for (int h = 0; h <= hmax; ++h)
        if (sinh_power(1, h - 1, order).coeff(h - 1) != 1)
            throw verification_error("real basis is not unitriangular at h=" +
                                     std::to_string(h));
    return extract_bps(connected, g, hmax, order, true, real_shape(order));
}

// Re-synthesis of the connected series from an extracted table.
inline QSeries resynthesize(const BpsTable& table, int dmax, int order) {
    QSeries out(dmax, 0);
    const ExtractionShape shape =
        table.real_side ? real_shape(order) : complex_shape(order);
    for (const auto& [dh, n] : table.entries) {
        auto [d, h] = dh;
        for (int k = 1; k * d <= dmax; ++k) {
            if (!shape.covers(k)) continue;
            USeries term = shape.basis(h, k);
            term *= n / k;
            int deg = k * d;
            Scalar prev = out.coeff(deg);
            out.set_coeff(deg, prev + Scalar::t_monomial(0, SCoeff(term)));
        }
    }
    return out;
}

struct GvConfig {
    int genus = 0;
    int dmax = 5;
    int hmax = -1;   // default: the provable support bound below
    int uorder = -1; // default chosen from hmax
    int maxd = kDefaultMaxDegree;

    // The q^d coefficient of log Z is a Laurent polynomial of u-degree at
    // most (2g-2) d(d+1)/2 (single-row hook sums dominate), so the complex
    // support can reach h = (g-1) d(d+1)/2 + 1. Anything smaller makes the
    // extraction fail loudly on support.
    int effective_hmax() const {
        if (hmax >= 0) return hmax;
        int bound = std::max(0, genus - 1) * dmax * (dmax + 1) / 2 + 2;
        return std::max(genus + 2 * dmax, bound);
    }
    int effective_uorder() const {
        return uorder >= 0 ? uorder
                           : std::max(kDefaultUOrder, 2 * effective_hmax() + 2 * dmax + 8);
    }
};

struct GvReport {
    BpsTable real_table;
    BpsTable complex_table;
    bool resynthesis_ok = false;
    std::vector<std::string> failures;
    bool pass() const {
        return failures.empty() && real_table.report.ok() && resynthesis_ok;
    }
};

// Runs the whole pipeline for one genus: build the connected series, extract
// both BPS tables, and check integrality, parity, vanishing, clause (c) and
// re-synthesis.
inline GvReport gv_verify(ContextBank& bank, const GvConfig& cfg) {
    const int g = cfg.genus;
    const int hmax = cfg.effective_hmax();
    const int order = cfg.effective_uorder();
    GvReport rep;

    QSeries conn = connected_real_series(bank, g, cfg.dmax, order, hmax);
    rep.real_table = extract_real_bps(conn, g, hmax, order);
    rep.complex_table = extract_complex_bps(g, cfg.dmax, hmax, order, cfg.maxd);

    auto& fails = rep.failures;
    for (const auto& f : rep.real_table.report.integrality_failures)
        fails.push_back("real integrality: " + f);
    for (const auto& f : rep.real_table.report.support_failures)
        fails.push_back("real support: " + f);
    for (const auto& f : rep.complex_table.report.integrality_failures)
        fails.push_back("complex integrality: " + f);
    for (const auto& f : rep.complex_table.report.support_failures)
        fails.push_back("complex support: " + f);

    // parity n^R = n^C mod 2, entrywise over the union of supports
    auto keys = rep.real_table.entries;
    for (const auto& [dh, n] : rep.complex_table.entries) keys.emplace(dh, n);
    for (const auto& [dh, unused] : keys) {
        Rational nr = rep.real_table.value(dh.first, dh.second);
        Rational nc = rep.complex_table.value(dh.first, dh.second);
        if (!is_integer(nr) || !is_integer(nc)) continue; // already reported
        if ((nr.get_num() - nc.get_num()) % 2 != 0) {
            rep.real_table.report.parity_failures.push_back(
                "(d=" + std::to_string(dh.first) + ",h=" + std::to_string(dh.second) +
                "): n_R=" + rational_to_string(nr) + " n_C=" + rational_to_string(nc));
            fails.push_back("parity: " + rep.real_table.report.parity_failures.back());
        }
    }

    // vanishing n^R_{d,h} = 0 when d(g-1) + h - 1 is odd
    for (const auto& [dh, n] : rep.real_table.entries) {
        auto [d, h] = dh;
        if (((d * (g - 1) + h - 1) % 2 + 2) % 2 == 1 && n != 0) {
            rep.real_table.report.vanishing_failures.push_back(
                "(d=" + std::to_string(d) + ",h=" + std::to_string(h) +
                "): n=" + rational_to_string(n));
            fails.push_back("vanishing: " +
                            rep.real_table.report.vanishing_failures.back());
        }
    }

    // connected covers of a genus-g surface have genus >= g
    for (const auto& [dh, n] : rep.real_table.entries)
        if (dh.second < g && n != 0)
            fails.push_back("support below h=g at (d=" + std::to_string(dh.first) +
                            ",h=" + std::to_string(dh.second) + ")");

    // clause (c): n_{1,h} = delta_{h,g}
    for (int h = 0; h <= hmax; ++h) {
        Rational expect = (h == g) ? 1 : 0;
        if (rep.real_table.value(1, h) != expect) {
            fails.push_back("clause (c): n(1," + std::to_string(h) + ") = " +
                            rational_to_string(rep.real_table.value(1, h)));
        }
    }

    rep.resynthesis_ok = (resynthesize(rep.real_table, cfg.dmax, order) == conn);
    if (!rep.resynthesis_ok) fails.push_back("re-synthesis mismatch");
    return rep;
}

} // namespace rgw
