#pragma once

#include <utility>
#include <vector>

#include "unicol/padic.hpp"

namespace unicol {

/// Dense polynomial over Q_p with per-coefficient tracked precision.
/// Coefficients that are zero-to-precision are kept; trailing ones are
/// trimmed for degree purposes.
class Poly {
  public:
    Poly() : p_(0) {}
    explicit Poly(long p) : p_(p) {}
    Poly(long p, std::vector<Padic> cs) : p_(p), c_(std::move(cs)) { trim(); }
    static Poly constant(const Padic& a);
    static Poly monomial(const Padic& a, long k);
    /// z - r
    static Poly linear_root(const Padic& r);
    static Poly from_ints(long p, const std::vector<long>& cs, long prec);

    long prime() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Padic>& coeffs() const { return c_; }
    Padic coeff(long k) const;
    const Padic& lc() const { return c_.back(); }
    void set_coeff(long k, const Padic& a);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Padic& a) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Quotient and remainder; requires nonzero divisor (division by its
    /// leading coefficient tracks any precision loss).
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly derivative() const;
    /// Antiderivative with constant 0; coefficient n loses v_p(n+1) digits.
    Poly antiderivative() const;
    Padic eval(const Padic& x) const;
    /// f(z + c) by repeated synthetic division.
    Poly taylor_shift(const Padic& c) const;
    /// f(z^e)
    Poly compose_pow(long e) const;
    /// z^n f(1/z) for n >= degree.
    Poly reverse(long n) const;

    /// Minimal valuation over coefficients (0 for the zero polynomial).
    long min_coeff_valuation() const;
    /// Minimal absolute precision over coefficients.
    long min_coeff_precision() const;
    bool is_zero_mod_precision() const;

    std::string str() const;

  private:
    void trim();
    long p_;
    std::vector<Padic> c_;
};

/// Extended gcd for coprime f, g: returns (s, t) with s f + t g = 1.
/// Throws DomainError if the gcd is not a unit at working precision.
std::pair<Poly, Poly> bezout_coprime(const Poly& f, const Poly& g);

} // namespace unicol
