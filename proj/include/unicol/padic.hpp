#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "unicol/errors.hpp"

namespace unicol {

/// Element of Q_p at bounded precision: u * p^v with u a unit known modulo
/// p^(N_abs - v).  Zero is the distinguished value v = +inf carrying the
/// ambient absolute precision (still "exact zero" when abs_prec() == kPrecInf).
class Padic {
  public:
    static constexpr long kValInf = std::numeric_limits<long>::max() / 4;
    static constexpr long kPrecInf = std::numeric_limits<long>::max() / 4;

    Padic() : p_(0), v_(kValInf), prec_(kPrecInf) {}

    /// Exact zero (known to all precisions).
    static Padic zero(long p) { return Padic(p, kValInf, 0, kPrecInf); }
    /// Zero known only modulo p^prec.
    static Padic zero(long p, long prec) { return Padic(p, kValInf, 0, prec); }
    /// Integer value, known modulo p^prec.
    static Padic from_int(long p, const mpz_class& n, long prec);
    static Padic from_int(long p, long n, long prec) { return from_int(p, mpz_class(n), prec); }
    /// num/den at precision prec; den must be nonzero.
    static Padic from_ratio(long p, long num, long den, long prec);
    /// Normalize an integer residue known modulo p^known_prec.
    static Padic make(long p, const mpz_class& value, long known_prec);

    long prime() const { return p_; }
    bool is_zero() const { return v_ >= kValInf; }
    bool is_exact_zero() const { return is_zero() && prec_ >= kPrecInf; }
    long valuation() const { return v_; }         // kValInf for zero
    long abs_precision() const { return is_zero() ? prec_ : v_ + prec_; }
    long rel_precision() const { return is_zero() ? 0 : prec_; }
    const mpz_class& unit() const { return unit_; }

    /// Residue modulo p^prec (prec <= abs_precision()).
    mpz_class lift(long prec) const;
    mpz_class lift() const { return lift(abs_precision()); }

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic& operator+=(const Padic& o) { return *this = *this + o; }
    Padic& operator-=(const Padic& o) { return *this = *this - o; }
    Padic& operator*=(const Padic& o) { return *this = *this * o; }
    Padic& operator/=(const Padic& o) { return *this = *this / o; }

    Padic inverse() const;
    Padic pow(long e) const;
    /// Multiply by p^k (exact shift of the valuation).
    Padic shift(long k) const;
    /// Forget precision beyond p^prec.
    Padic truncate(long prec) const;

    /// v(a - b) >= min abs precision, i.e. equal as far as both are known.
    bool equals_mod_precision(const Padic& o) const;
    /// Valuation of the difference, clamped to the common known precision.
    long agreement_valuation(const Padic& o) const;

    std::string str() const;
    std::string to_json() const;
    static Padic from_json(const std::string& text);

    /// Little-endian base-p digits of the unit part (rel_precision() of them).
    std::vector<long> unit_digits() const;

  private:
    Padic(long p, long v, mpz_class u, long rel_prec)
        : p_(p), v_(v), unit_(std::move(u)), prec_(rel_prec) {}

    void require_same_prime(const Padic& o) const;

    long p_;
    long v_;          // valuation, kValInf for zero
    mpz_class unit_;  // in [1, p^prec_), coprime to p; 0 for zero
    long prec_;       // relative precision of the unit; abs prec for zero
};

std::ostream& operator<<(std::ostream& os, const Padic& x);

/// p^e as an mpz.
mpz_class pow_p(long p, long e);

/// Valuation of n (n != 0) with respect to p; also divides it out.
long remove_p(mpz_class& n, long p);

/// Teichmueller lift of the residue class cls in [0, p-1] at precision prec:
/// the fixed point of x -> x^p congruent to cls mod p.  teich(0) is exact 0.
Padic teichmueller(long p, long cls, long prec);

/// Iwasawa logarithm of a unit u: (1/(p-1)) * log(u^(p-1)) via the series
/// log(1+x) on v(x) >= 1.  Errors on non-units.
Padic log_unit(const Padic& u);

} // namespace unicol
