#pragma once

// Exact arithmetic in the cyclotomic fields Q(w_n), w_n = exp(2*pi*i/n).
// Elements are stored in the power basis 1, w, ..., w^{phi(n)-1} after
// reduction modulo the n-th cyclotomic polynomial, so equality is
// coefficient comparison once orders are unified. No floating point.

#include <optional>
#include <vector>

#include "equik/rational.hpp"

namespace equik {

// Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)).
const std::vector<Int>& cyclotomic_poly(long n);

long euler_phi(long n);

// Returns (p, r) if n = p^r for a prime p and r >= 1.
std::optional<std::pair<long, long>> prime_power(long n);

class CycNum {
  public:
    CycNum() : order_(1), c_(1, Rat(0)) {}
    explicit CycNum(const Rat& q) : order_(1), c_(1, q) {}
    explicit CycNum(long v) : order_(1), c_(1, Rat(v)) {}

    // w_n^k in canonical form.
    static CycNum root(long n, long k);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Value when the element lies in Q; nullopt otherwise.
    std::optional<Rat> as_rational() const;

    CycNum lifted(long n) const;  // re-express in Q(w_n), order_ | n

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a);
    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

    CycNum inv() const;  // throws on zero
    CycNum pow(long e) const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;

  private:
    CycNum(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
    void reduce_(std::vector<Rat>& raw);  // mod Phi_order

    long order_;
    std::vector<Rat> c_;  // length phi(order_)
};

// Exact values of trigonometric constants at rational multiples of pi.
// All live in Q(w_{lcm(4, 2b)}).
CycNum sin_pi(long a, long b);  // sin(pi*a/b)
CycNum cos_pi(long a, long b);  // cos(pi*a/b)
CycNum csc_pi(long a, long b);  // throws at poles
CycNum cot_pi(long a, long b);  // throws at poles

// Exponent vector c_0..c_{p^r-1} for the cyclotomic unit product.
struct ExpVector {
    long modulus = 2;  // p^r
    std::vector<long> c;

    long sum() const;
};

// prod_k (1 + w^k)^{c_k}; requires sum(c) == 0. For p = 2 the value is
// undefined (nullopt) when c_{2^{r-1}} != 0, since that factor vanishes.
std::optional<CycNum> unit_product(const ExpVector& e);

// The number-theoretic conditions equivalent to unit_product == 1.
bool unit_criterion(const ExpVector& e);

}  // namespace equik
