#include "unicol/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace unicol {

mpz_class pow_p(long p, long e) {
    if (e < 0) throw DomainError("pow_p: negative exponent");
    if (e >= Padic::kPrecInf / 2) throw PrecisionError("pow_p: exponent overflow");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

long remove_p(mpz_class& n, long p) {
    if (n == 0) throw DomainError("remove_p: zero");
    mpz_class q, r;
    long v = 0;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

void Padic::require_same_prime(const Padic& o) const {
    if (p_ != o.p_) throw DomainError("prime mismatch");
}

Padic Padic::make(long p, const mpz_class& value, long known_prec) {
    if (known_prec <= 0) return zero(p, std::max(known_prec, 0L));
    if (known_prec >= kPrecInf) known_prec = kPrecInf / 2; // exactness only for zero
    mpz_class m = pow_p(p, known_prec);
    mpz_class r = value % m;
    if (r < 0) r += m;
    if (r == 0) return zero(p, known_prec);
    long v = remove_p(r, p);
    long rel = known_prec - v;
    r %= pow_p(p, rel);
    return Padic(p, v, r, rel);
}

Padic Padic::from_int(long p, const mpz_class& n, long prec) {
    if (n == 0) return zero(p);
    return make(p, n, prec);
}

Padic Padic::from_ratio(long p, long num, long den, long prec) {
    if (den == 0) throw DomainError("from_ratio: zero denominator");
    Padic n = from_int(p, num, prec + 64);
    Padic d = from_int(p, den, prec + 64);
    return (n / d).truncate(prec);
}

mpz_class Padic::lift(long prec) const {
    if (prec > abs_precision()) throw PrecisionError("lift beyond known precision");
    if (is_zero() || prec <= 0) return 0;
    if (v_ < 0) throw DomainError("lift: negative valuation");
    if (v_ >= prec) return 0;
    mpz_class r = (unit_ % pow_p(p_, prec - v_)) * pow_p(p_, v_);
    return r;
}

Padic Padic::operator-() const {
    if (is_zero()) return *this;
    mpz_class m = pow_p(p_, prec_);
    return Padic(p_, v_, m - unit_, prec_);
}

Padic Padic::operator+(const Padic& o) const {
    require_same_prime(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    long m = std::min({is_zero() ? 0 : v_, o.is_zero() ? 0 : o.v_, 0L});
    if (m < 0) return (shift(-m) + o.shift(-m)).shift(m);
    long n = std::min(abs_precision(), o.abs_precision());
    return make(p_, lift(n) + o.lift(n), n);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
    require_same_prime(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    if (is_zero() || o.is_zero()) {
        // O(p^N) * u p^v = O(p^(N+v)); O(p^N1)*O(p^N2) = O(p^(N1+N2)).
        long n;
        if (is_zero() && o.is_zero())
            n = prec_ + o.prec_;
        else if (is_zero())
            n = prec_ + o.v_;
        else
            n = o.prec_ + v_;
        return zero(p_, std::min(n, kPrecInf / 2));
    }
    long rel = std::min(prec_, o.prec_);
    mpz_class u = (unit_ * o.unit_) % pow_p(p_, rel);
    return Padic(p_, v_ + o.v_, u, rel);
}

Padic Padic::inverse() const {
    if (is_zero()) throw DomainError("division by zero (to tracked precision)");
    mpz_class m = pow_p(p_, prec_);
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t()))
        throw DomainError("inverse: unit not invertible");
    return Padic(p_, -v_, inv, prec_);
}

Padic Padic::operator/(const Padic& o) const {
    require_same_prime(o);
    if (o.is_zero()) throw DomainError("division by zero (to tracked precision)");
    if (is_exact_zero()) return *this;
    if (is_zero()) return zero(p_, prec_ - o.v_);
    long rel = std::min(prec_, o.prec_);
    mpz_class m = pow_p(p_, rel);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), o.unit_.get_mpz_t(), m.get_mpz_t());
    mpz_class u = (unit_ * inv) % m;
    return Padic(p_, v_ - o.v_, u, rel);
}

Padic Padic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Padic r = is_zero() ? from_int(p_, 1, 64) : Padic(p_, 0, 1, prec_);
    Padic b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Padic Padic::shift(long k) const {
    if (is_exact_zero()) return *this;
    if (is_zero()) return zero(p_, prec_ + k);
    return Padic(p_, v_ + k, unit_, prec_);
}

Padic Padic::truncate(long prec) const {
    if (abs_precision() <= prec) return *this;
    if (is_zero()) return zero(p_, prec);
    long rel = prec - v_;
    if (rel <= 0) return zero(p_, prec);
    mpz_class u = unit_ % pow_p(p_, rel);
    if (u == 0) return zero(p_, prec); // unreachable for units; keeps invariants tight
    return Padic(p_, v_, u, rel);
}

bool Padic::equals_mod_precision(const Padic& o) const {
    require_same_prime(o);
    return (*this - o).is_zero();
}

long Padic::agreement_valuation(const Padic& o) const {
    require_same_prime(o);
    long n = std::min(abs_precision(), o.abs_precision());
    if (n >= kPrecInf) n = 1 << 14;
    Padic d = truncate(n) - o.truncate(n);
    return d.is_zero() ? d.abs_precision() : d.valuation();
}

std::vector<long> Padic::unit_digits() const {
    std::vector<long> ds;
    if (is_zero()) return ds;
    mpz_class u = unit_;
    for (long i = 0; i < prec_; ++i) {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
        ds.push_back(r.get_si());
        u = q;
    }
    return ds;
}

std::string Padic::str() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "0";
        if (!is_exact_zero()) os << " + O(" << p_ << "^" << prec_ << ")";
        return os.str();
    }
    os << unit_.get_str();
    if (v_ != 0) os << "*" << p_ << "^" << v_;
    os << " + O(" << p_ << "^" << abs_precision() << ")";
    return os.str();
}

std::string Padic::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    if (is_zero())
        j["v"] = "inf";
    else
        j["v"] = v_;
    j["digits"] = unit_digits();
    j["prec"] = is_exact_zero() ? -1 : abs_precision();
    return j.dump();
}

Padic Padic::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    long p = j.at("p").get<long>();
    long prec = j.at("prec").get<long>();
    if (j.at("v").is_string()) {
        if (prec < 0) return zero(p);
        return zero(p, prec);
    }
    long v = j.at("v").get<long>();
    mpz_class u = 0, pk = 1;
    for (long d : j.at("digits").get<std::vector<long>>()) {
        u += d * pk;
        pk *= p;
    }
    return Padic::make(p, u, prec - v).shift(v);
}

std::ostream& operator<<(std::ostream& os, const Padic& x) { return os << x.str(); }

Padic teichmueller(long p, long cls, long prec) {
    if (cls < 0 || cls >= p) throw DomainError("teichmueller: class out of range");
    if (cls == 0) return Padic::zero(p);
    mpz_class m = pow_p(p, prec);
    mpz_class x = cls, prev;
    for (long i = 0; i <= prec + 1; ++i) {
        prev = x;
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (x == prev) break;
    }
    return Padic::make(p, x, prec);
}

Padic log_unit(const Padic& u) {
    if (u.is_zero() || u.valuation() != 0) throw DomainError("log_unit: not a unit");
    long p = u.prime();
    long prec = u.rel_precision();
    Padic up = u.pow(p - 1);
    Padic x = up - Padic::from_int(p, 1, prec);
    // log(1+x) = sum (-1)^(n+1) x^n / n on v(x) >= 1.
    Padic acc = Padic::zero(p, prec);
    if (!x.is_zero()) {
        Padic xp = x;
        for (long n = 1;; ++n) {
            if (xp.is_zero() || xp.valuation() >= prec + 2) break;
            Padic term = xp / Padic::from_int(p, n, prec + 8);
            if (n % 2 == 0) term = -term;
            acc += term;
            xp = xp * x;
        }
    }
    return acc / Padic::from_int(p, p - 1, prec + 8);
}

} // namespace unicol
