#pragma once

#include <vector>

#include "unicol/poly.hpp"

namespace unicol {

/// Identifies a residue disc of P^1 over Q_p: a Teichmueller class 0..p-1 or
/// the infinity disc (chart t = 1/z).
struct DiscId {
    long cls = 0;
    bool at_inf = false;

    bool operator==(const DiscId& o) const { return at_inf == o.at_inf && (at_inf || cls == o.cls); }
    bool operator!=(const DiscId& o) const { return !(*this == o); }
    bool operator<(const DiscId& o) const {
        if (at_inf != o.at_inf) return !at_inf;
        return cls < o.cls;
    }
    static DiscId inf() { return DiscId{0, true}; }
};

/// Truncated power series on a residue disc in the local parameter
/// t = z - c (or t = 1/z on the infinity chart).  tail_exp bounds the dropped
/// tail: |f(t) - trunc(t)| <= p^(-tail_exp) at points with v(t) >= 1.
class DiscSeries {
  public:
    DiscSeries() = default;
    DiscSeries(DiscId disc, Padic center, Poly coeffs, long trunc_deg);

    static DiscSeries zero(DiscId disc, const Padic& center, long trunc_deg, long p);
    static DiscSeries one(DiscId disc, const Padic& center, long trunc_deg, long p);
    /// log(1 + w(t)) for a series w with strictly positive coefficient
    /// valuations and w(0) = 0-or-positive-valuation constant term allowed.
    static DiscSeries log1p(const DiscSeries& w);

    const DiscId& disc() const { return disc_; }
    const Padic& center() const { return center_; }
    long trunc_deg() const { return trunc_; }
    long prime() const { return p_; }
    const Poly& poly() const { return c_; }
    Padic coeff(long k) const { return c_.coeff(k); }
    long tail_exp() const { return tail_; }
    void set_tail_exp(long t) { tail_ = t; }

    DiscSeries operator-() const;
    DiscSeries operator+(const DiscSeries& o) const;
    DiscSeries operator-(const DiscSeries& o) const;
    DiscSeries operator*(const DiscSeries& o) const;
    DiscSeries operator*(const Padic& a) const;
    DiscSeries& operator+=(const DiscSeries& o) { return *this = *this + o; }
    DiscSeries& operator-=(const DiscSeries& o) { return *this = *this - o; }

    DiscSeries derivative() const;
    /// Term-by-term integral with constant 0; coefficient n+1 loses v_p(n+1).
    DiscSeries formal_integral() const;
    /// Multiplicative inverse; requires unit constant term.
    DiscSeries inverse() const;
    DiscSeries pow(long e) const;

    /// Evaluate at a point with v(point - center) >= 1 (v(1/point) >= 1 at
    /// infinity); reported precision is capped by the tail bound.
    Padic evaluate(const Padic& point) const;
    /// Evaluate at local parameter value t, v(t) >= 1.
    Padic evaluate_local(const Padic& t) const;

    bool is_zero_mod_precision() const { return c_.is_zero_mod_precision(); }

    /// min over n of v(a_n) + n: a bound exponent for |f| at v(t) >= 1.
    long sup_exponent() const;

  private:
    void require_compatible(const DiscSeries& o) const;
    DiscId disc_;
    Padic center_;
    Poly c_;
    long trunc_ = 0;
    long p_ = 0;
    long tail_ = 0;
};

/// Truncated power series in two local parameters (s, t) on a product of
/// residue discs; mixed truncation at degree D in each variable.
class BivariateSeries {
  public:
    BivariateSeries() = default;
    BivariateSeries(DiscId dS, DiscId dz, Padic cS, Padic cz, long trunc_deg, long p);

    long trunc_deg() const { return trunc_; }
    long prime() const { return p_; }
    const DiscId& disc_s() const { return dS_; }
    const DiscId& disc_z() const { return dz_; }
    Padic coeff(long i, long j) const;
    void set_coeff(long i, long j, const Padic& a);

    BivariateSeries operator-() const;
    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries operator*(const Padic& a) const;

    BivariateSeries d_ds() const;
    BivariateSeries d_dt() const;

    /// f(t, t): only meaningful when both factors are the same disc.
    DiscSeries restrict_diagonal() const;

    /// Build from univariate series in s resp. t.
    static BivariateSeries from_s(const DiscSeries& f, DiscId dz, const Padic& cz, long trunc);
    static BivariateSeries from_t(const DiscSeries& f, DiscId dS, const Padic& cS, long trunc);

    bool is_zero_mod_precision() const;
    /// Minimal agreement valuation against another series, coefficientwise.
    long max_coeff_discrepancy(const BivariateSeries& o) const;

  private:
    DiscId dS_, dz_;
    Padic cS_, cz_;
    long trunc_ = 0;
    long p_ = 0;
    std::vector<Padic> c_; // (trunc+1)^2 row-major, c_[i*(trunc+1)+j] = s^i t^j
};

} // namespace unicol
