#include "unicol/series.hpp"

#include <algorithm>

namespace unicol {

DiscSeries::DiscSeries(DiscId disc, Padic center, Poly coeffs, long trunc_deg)
    : disc_(disc), center_(std::move(center)), c_(std::move(coeffs)), trunc_(trunc_deg), p_(c_.prime()) {
    if (p_ == 0) p_ = center_.prime();
    if (c_.degree() > trunc_) {
        Poly t(p_);
        for (long k = 0; k <= trunc_; ++k) t.set_coeff(k, c_.coeff(k));
        c_ = t;
    }
    tail_ = trunc_ + 1 + std::min(0L, c_.min_coeff_valuation());
}

DiscSeries DiscSeries::zero(DiscId disc, const Padic& center, long trunc_deg, long p) {
    DiscSeries s(disc, center, Poly(p), trunc_deg);
    s.p_ = p;
    s.tail_ = Padic::kPrecInf;
    return s;
}

DiscSeries DiscSeries::one(DiscId disc, const Padic& center, long trunc_deg, long p) {
    DiscSeries s = zero(disc, center, trunc_deg, p);
    s.c_ = Poly::constant(Padic::from_int(p, 1, 1 << 12));
    return s;
}

void DiscSeries::require_compatible(const DiscSeries& o) const {
    if (disc_ != o.disc_ || trunc_ != o.trunc_)
        throw DomainError("disc series: center/truncation mismatch");
}

DiscSeries DiscSeries::operator-() const {
    DiscSeries r = *this;
    r.c_ = -c_;
    return r;
}

DiscSeries DiscSeries::operator+(const DiscSeries& o) const {
    require_compatible(o);
    DiscSeries r = *this;
    r.c_ = c_ + o.c_;
    r.tail_ = std::min(tail_, o.tail_);
    return r;
}

DiscSeries DiscSeries::operator-(const DiscSeries& o) const { return *this + (-o); }

long DiscSeries::sup_exponent() const {
    long m = 0;
    bool seen = false;
    const auto& cs = c_.coeffs();
    for (size_t n = 0; n < cs.size(); ++n) {
        if (cs[n].is_zero()) continue;
        long e = cs[n].valuation() + static_cast<long>(n);
        if (!seen || e < m) m = e, seen = true;
    }
    return seen ? m : 0;
}

DiscSeries DiscSeries::operator*(const DiscSeries& o) const {
    require_compatible(o);
    DiscSeries r = *this;
    Poly prod(p_);
    const auto& a = c_.coeffs();
    const auto& b = o.c_.coeffs();
    std::vector<Padic> out(std::min<size_t>(trunc_ + 1, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1),
                           Padic::zero(p_));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_exact_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(trunc_); ++j)
            out[i + j] += a[i] * b[j];
    }
    r.c_ = Poly(p_, std::move(out));
    r.tail_ = std::min(tail_ + o.sup_exponent(), o.tail_ + sup_exponent());
    return r;
}

DiscSeries DiscSeries::operator*(const Padic& x) const {
    DiscSeries r = *this;
    r.c_ = c_ * x;
    r.tail_ = tail_ + std::min(0L, x.is_zero() ? 0L : x.valuation());
    return r;
}

DiscSeries DiscSeries::derivative() const {
    DiscSeries r = *this;
    r.c_ = c_.derivative();
    return r;
}

DiscSeries DiscSeries::formal_integral() const {
    DiscSeries r = *this;
    Poly anti = c_.antiderivative();
    // drop the degree trunc_+1 coefficient to stay at the truncation degree
    Poly t(p_);
    for (long k = 0; k <= trunc_; ++k) t.set_coeff(k, anti.coeff(k));
    r.c_ = t;
    long loss = 0;
    for (long n = trunc_ + 1; n >= 1; n /= p_) ++loss;
    r.tail_ = tail_ - loss + 1;
    return r;
}

DiscSeries DiscSeries::inverse() const {
    Padic c0 = c_.coeff(0);
    if (c0.is_zero() || c0.valuation() != 0) throw DomainError("series inverse: constant term not a unit");
    DiscSeries r = zero(disc_, center_, trunc_, p_);
    Padic inv0 = c0.inverse();
    Poly out = Poly::constant(inv0);
    // Newton-free direct recursion: b_n = -inv0 * sum_{k=1..n} a_k b_{n-k}
    for (long n = 1; n <= trunc_; ++n) {
        Padic s = Padic::zero(p_);
        for (long k = 1; k <= n; ++k) s += c_.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -(inv0 * s));
    }
    r.c_ = out;
    r.tail_ = trunc_ + 1 + std::min(0L, out.min_coeff_valuation());
    return r;
}

DiscSeries DiscSeries::pow(long e) const {
    DiscSeries r = one(disc_, center_, trunc_, p_);
    if (e < 0) return inverse().pow(-e);
    DiscSeries b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

DiscSeries DiscSeries::log1p(const DiscSeries& w) {
    Padic c0 = w.coeff(0);
    if (!c0.is_zero() && c0.valuation() < 1)
        throw DomainError("log1p: argument not congruent to 0 mod p");
    DiscSeries acc = zero(w.disc(), w.center(), w.trunc_deg(), w.prime());
    if (w.is_zero_mod_precision()) return acc;
    if (w.sup_exponent() < 1) throw DomainError("log1p: series does not converge on the disc");
    long target = w.poly().min_coeff_precision();
    if (target >= Padic::kPrecInf) target = w.trunc_deg() + 32;
    target += 4; // margin for the 1/n losses
    DiscSeries wp = w;
    for (long n = 1; wp.sup_exponent() <= target && n <= 8 * (target + 8); ++n) {
        Padic den = Padic::from_int(w.prime(), n, 1 << 12);
        DiscSeries term = wp * den.inverse();
        if (n % 2 == 0) term = -term;
        acc += term;
        wp = wp * w;
    }
    return acc;
}

Padic DiscSeries::evaluate_local(const Padic& t) const {
    if (!t.is_zero() && t.valuation() < 1)
        throw DomainError("evaluate: point outside guaranteed-convergence region (v(t) >= 1 required)");
    Padic acc = c_.eval(t);
    return acc.truncate(std::min(acc.abs_precision(), tail_));
}

Padic DiscSeries::evaluate(const Padic& point) const {
    Padic t = disc_.at_inf ? point.inverse() : point - center_;
    return evaluate_local(t);
}

BivariateSeries::BivariateSeries(DiscId dS, DiscId dz, Padic cS, Padic cz, long trunc_deg, long p)
    : dS_(dS), dz_(dz), cS_(std::move(cS)), cz_(std::move(cz)), trunc_(trunc_deg), p_(p),
      c_((trunc_deg + 1) * (trunc_deg + 1), Padic::zero(p)) {}

Padic BivariateSeries::coeff(long i, long j) const {
    if (i < 0 || j < 0 || i > trunc_ || j > trunc_) return Padic::zero(p_);
    return c_[i * (trunc_ + 1) + j];
}

void BivariateSeries::set_coeff(long i, long j, const Padic& a) {
    if (i < 0 || j < 0 || i > trunc_ || j > trunc_) return;
    c_[i * (trunc_ + 1) + j] = a;
}

BivariateSeries BivariateSeries::operator-() const {
    BivariateSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    BivariateSeries r = *this;
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const { return *this + (-o); }

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    BivariateSeries r(dS_, dz_, cS_, cz_, trunc_, p_);
    for (long i = 0; i <= trunc_; ++i)
        for (long j = 0; j <= trunc_; ++j) {
            Padic a = coeff(i, j);
            if (a.is_exact_zero()) continue;
            for (long k = 0; i + k <= trunc_; ++k)
                for (long l = 0; j + l <= trunc_; ++l) {
                    Padic b = o.coeff(k, l);
                    if (b.is_exact_zero()) continue;
                    r.set_coeff(i + k, j + l, r.coeff(i + k, j + l) + a * b);
                }
        }
    return r;
}

BivariateSeries BivariateSeries::operator*(const Padic& a) const {
    BivariateSeries r = *this;
    for (auto& x : r.c_) x = x * a;
    return r;
}

BivariateSeries BivariateSeries::d_ds() const {
    BivariateSeries r(dS_, dz_, cS_, cz_, trunc_, p_);
    for (long i = 0; i + 1 <= trunc_; ++i)
        for (long j = 0; j <= trunc_; ++j)
            r.set_coeff(i, j, coeff(i + 1, j) * Padic::from_int(p_, i + 1, 1 << 12));
    return r;
}

BivariateSeries BivariateSeries::d_dt() const {
    BivariateSeries r(dS_, dz_, cS_, cz_, trunc_, p_);
    for (long i = 0; i <= trunc_; ++i)
        for (long j = 0; j + 1 <= trunc_; ++j)
            r.set_coeff(i, j, coeff(i, j + 1) * Padic::from_int(p_, j + 1, 1 << 12));
    return r;
}

DiscSeries BivariateSeries::restrict_diagonal() const {
    if (dS_ != dz_) throw DomainError("restrict_diagonal: different discs");
    Poly out(p_);
    for (long n = 0; n <= trunc_; ++n) {
        Padic s = Padic::zero(p_);
        for (long i = 0; i <= n; ++i) s += coeff(i, n - i);
        out.set_coeff(n, s);
    }
    return DiscSeries(dz_, cz_, out, trunc_);
}

BivariateSeries BivariateSeries::from_s(const DiscSeries& f, DiscId dz, const Padic& cz, long trunc) {
    BivariateSeries r(f.disc(), dz, f.center(), cz, trunc, f.prime());
    for (long i = 0; i <= trunc; ++i) r.set_coeff(i, 0, f.coeff(i));
    return r;
}

BivariateSeries BivariateSeries::from_t(const DiscSeries& f, DiscId dS, const Padic& cS, long trunc) {
    BivariateSeries r(dS, f.disc(), cS, f.center(), trunc, f.prime());
    for (long j = 0; j <= trunc; ++j) r.set_coeff(0, j, f.coeff(j));
    return r;
}

bool BivariateSeries::is_zero_mod_precision() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

long BivariateSeries::max_coeff_discrepancy(const BivariateSeries& o) const {
    long worst = Padic::kPrecInf;
    for (long i = 0; i <= trunc_; ++i)
        for (long j = 0; j <= trunc_; ++j)
            worst = std::min(worst, coeff(i, j).agreement_valuation(o.coeff(i, j)));
    return worst;
}

} // namespace unicol
