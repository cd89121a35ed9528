#pragma once

// Canonical-form arithmetic in the representation rings attached to the
// twisted products of Pin(2) with cyclic groups:
//
//   R(G^ev_m)  = Z[c,h,z]/(c^2-1, ch-h, z^m-1),         z = zeta
//   R(G^odd_m) = Z[c, xh, x^2]/(c^2-1, c(xh)-xh, x^2m-1), x = xi,
//
// together with R(Z_m), R(Z_2m), R(Pin(2)) and the symmetric image of
// RO(Z_m). Elements are stored as  a(x) + b(x)*c + sum_k r_k(x) h^k  with
// polynomials reduced mod x^M - 1 (M = m for even parity, 2m for odd).
// Odd-parity elements keep the xi-power of each h-term inside r_k, i.e.
// the stored h^k coefficient is supported on xi-powers congruent to k
// mod 2 (the xi^{2j+1} h convention).

#include <map>
#include <string>
#include <vector>

#include "equik/cyclotomic.hpp"
#include "equik/lattice.hpp"

namespace equik::repring {

using lattice::Parity;

enum class RingKind { Pin2, TwistedEven, TwistedOdd, Zm, Z2m };

struct GroupTag {
    RingKind kind = RingKind::TwistedEven;
    long m = 2;  // the cyclic order parameter (ignored for Pin2)

    long modulus() const;  // polynomial modulus M
    friend bool operator==(const GroupTag& a, const GroupTag& b) {
        return a.kind == b.kind && a.m == b.m;
    }
};

using Poly = std::vector<Int>;  // coefficients mod x^M - 1, length M

class RingElem {
  public:
    RingElem() = default;
    explicit RingElem(GroupTag g);

    static RingElem constant(GroupTag g, long v);

    GroupTag group() const { return g_; }
    const Poly& scalar() const { return scalar_; }
    const Poly& ctilde_part() const { return ctilde_; }
    const std::map<long, Poly>& h_parts() const { return hpow_; }

    bool is_zero() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a);
    RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
    RingElem& operator*=(const RingElem& b) { return *this = *this * b; }
    RingElem pow(long e) const;

    friend bool operator==(const RingElem& a, const RingElem& b);
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    std::string str() const;

    // building blocks (validated against the group kind)
    static RingElem x_power(GroupTag g, long k);  // zeta^k / xi^k
    static RingElem ctilde(GroupTag g);
    static RingElem h_term(GroupTag g, long k, long xpow);  // x^xpow h^k

  private:
    GroupTag g_;
    Poly scalar_, ctilde_;
    std::map<long, Poly> hpow_;
    void prune_();
};

// Generators: w_k = 1 - zeta^k c (even) / 1 - xi^{2k} c (odd);
// z_k = 1 - zeta^k h + zeta^{2k}; z_{k+1/2} = 1 - xi^{2k+1} h + xi^{4k+2}.
RingElem gen_w(GroupTag g, long k);
RingElem gen_z(GroupTag g, long k);  // index k means z_k (even) or z_{k+1/2} (odd)

// w^s * z^t for exponent vectors (the Euler class of s*C + t*H).
RingElem euler_class(GroupTag g, const std::vector<long>& s, const std::vector<long>& t);

// Group elements where characters are evaluated: j^jpart * e^{i phi} * g^a,
// with phi = 0 or a formal generic angle.
struct GroupElement {
    bool j = false;
    long a = 0;
    bool generic_phi = false;
};

// Character value; generic-phi elements give a polynomial in the formal
// variable X = e^{i phi} + e^{-i phi}.
struct TracePoly {
    std::vector<CycNum> coeff;  // coeff[k] multiplies X^k

    CycNum at2() const;  // specialize X = 2 (phi = 0)
};

TracePoly trace_generic(const RingElem& x, const GroupElement& g);
CycNum trace(const RingElem& x, const GroupElement& g);

// Restriction maps of the wrap-box: to Pin(2), and to the cyclic subgroup.
RingElem restrict_to_pin2(const RingElem& x);
RingElem restrict_to_cyclic(const RingElem& x);  // Z_m (even) / Z_2m (odd)

// Tabulated induction from Pin(2) to G*_{2^r}.
RingElem induct_pin2(const RingElem& pin2_elem, GroupTag target);

// Symmetric vectors: complexification image of RO(Z_m), as coordinate
// vectors (s_0, ..., s_{m-1}) with s_k = s_{m-k}.
struct ROElem {
    long m = 2;
    std::vector<Rat> coeff;  // r_0, r_1, ..., r_{floor((m-1)/2)} [, r_{m/2}]
};

std::vector<Rat> complexify(const ROElem& r);  // symmetric length-m vector

RingElem parse_ring_expr(GroupTag g, const std::string& expr);

}  // namespace equik::repring
