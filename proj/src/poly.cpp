#include "unicol/poly.hpp"

#include <sstream>

namespace unicol {

void Poly::trim() {
    // Trailing zeros-to-precision do not contribute a degree.
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Padic& a) {
    Poly r(a.prime());
    r.c_ = {a};
    r.trim();
    return r;
}

Poly Poly::monomial(const Padic& a, long k) {
    Poly r(a.prime());
    if (a.is_zero()) return r;
    r.c_.assign(k + 1, Padic::zero(a.prime()));
    r.c_[k] = a;
    return r;
}

Poly Poly::linear_root(const Padic& r0) {
    Poly r(r0.prime());
    r.c_ = {-r0, Padic::from_int(r0.prime(), 1, r0.is_zero() ? 64 : r0.rel_precision() + 8)};
    return r;
}

Poly Poly::from_ints(long p, const std::vector<long>& cs, long prec) {
    std::vector<Padic> v;
    v.reserve(cs.size());
    for (long x : cs) v.push_back(Padic::from_int(p, x, prec));
    return Poly(p, std::move(v));
}

Padic Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Padic::zero(p_);
    return c_[k];
}

void Poly::set_coeff(long k, const Padic& a) {
    if (k >= static_cast<long>(c_.size())) c_.resize(k + 1, Padic::zero(p_));
    c_[k] = a;
    trim();
}

Poly Poly::operator-() const {
    Poly r(p_);
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(-a);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(p_ ? p_ : o.p_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(p_ ? p_ : o.p_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Padic::zero(r.p_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Padic& a) const {
    Poly r(p_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * a);
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    Poly q(p_), r = *this;
    long dd = d.degree();
    if (r.degree() < dd) return {q, r};
    q.c_.assign(r.degree() - dd + 1, Padic::zero(p_));
    Padic inv_lc = d.lc().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
        long k = r.degree() - dd;
        Padic f = r.lc() * inv_lc;
        q.c_[k] = f;
        for (long i = 0; i <= dd; ++i) r.set_coeff(k + i, r.coeff(k + i) - f * d.coeff(i));
    }
    q.trim();
    return {q, r};
}

Poly Poly::derivative() const {
    Poly r(p_);
    if (degree() < 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Padic::from_int(p_, static_cast<long>(i), c_[i].is_zero() ? 64 : c_[i].rel_precision() + 8));
    r.trim();
    return r;
}

Poly Poly::antiderivative() const {
    Poly r(p_);
    if (is_zero()) return r;
    r.c_.assign(c_.size() + 1, Padic::zero(p_));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i + 1] = c_[i] / Padic::from_int(p_, static_cast<long>(i) + 1, 64 + (c_[i].is_zero() ? 0 : c_[i].rel_precision()));
    r.trim();
    return r;
}

Padic Poly::eval(const Padic& x) const {
    Padic acc = Padic::zero(p_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::taylor_shift(const Padic& c) const {
    // repeated synthetic division by (z - (-c)) computes f(z+c)
    if (is_zero() || c.is_zero()) return *this;
    std::vector<Padic> a = c_;
    std::vector<Padic> out(a.size(), Padic::zero(p_));
    for (size_t k = 0; k < a.size(); ++k) {
        // divide a by (z - (-c)) i.e. evaluate tail at -(-c) = shift base
        for (long i = static_cast<long>(a.size()) - 2; i >= static_cast<long>(k); --i)
            a[i] = a[i] + c * a[i + 1];
        out[k] = a[k];
        // next round works on the quotient stored in a[k+1..]
    }
    return Poly(p_, std::move(out));
}

Poly Poly::compose_pow(long e) const {
    Poly r(p_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * e + 1, Padic::zero(p_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * e] = c_[i];
    r.trim();
    return r;
}

Poly Poly::reverse(long n) const {
    Poly r(p_);
    r.c_.assign(n + 1, Padic::zero(p_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (static_cast<long>(i) > n) throw DomainError("reverse: degree exceeds n");
        r.c_[n - i] = c_[i];
    }
    r.trim();
    return r;
}

long Poly::min_coeff_valuation() const {
    long m = 0;
    bool seen = false;
    for (const auto& a : c_) {
        if (a.is_zero()) continue;
        if (!seen || a.valuation() < m) m = a.valuation(), seen = true;
    }
    return seen ? m : 0;
}

long Poly::min_coeff_precision() const {
    long m = Padic::kPrecInf;
    for (const auto& a : c_) m = std::min(m, a.abs_precision());
    return m;
}

bool Poly::is_zero_mod_precision() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> bezout_coprime(const Poly& f, const Poly& g) {
    // extended Euclid; our uses have unit resultants up to bounded valuation,
    // losses are carried by the coefficients themselves.
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(Padic::from_int(f.prime(), 1, 1 << 12));
    Poly s1(f.prime());
    Poly t0(f.prime());
    Poly t1 = s0;
    while (!r1.is_zero() && !r1.is_zero_mod_precision()) {
        auto [q, r2] = r0.divrem(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw DomainError("bezout_coprime: inputs not coprime at working precision");
    Padic inv = r0.coeff(0).inverse();
    return {s0 * inv, t0 * inv};
}

} // namespace unicol
