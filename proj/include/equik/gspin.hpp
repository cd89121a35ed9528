#pragma once

// The fixed-point side of the G-Spin theorem: exact characters of the
// S-invariant assembled from R(alpha,beta) = csc(alpha/2)csc(beta/2) and
// S(psi) = cot(psi/2)csc(psi/2) terms, the character <-> vector discrete
// Fourier transform over Q(w_2m), correction terms from equivariant spin
// fillings, and the parity classification of spin lifts.
//
// Angles are rational turns a/N (fractions of 2*pi), so every character is
// an exact cyclotomic number and no floating point enters.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "equik/cyclotomic.hpp"
#include "equik/lattice.hpp"

namespace equik::gspin {

using lattice::Parity;

struct Turn {
    long num = 0;
    long den = 1;  // angle = 2*pi*num/den
};

struct IsolatedPoint {
    long k = 1;  // contributes to the character at mu^k, 1 <= k <= 2m-1, k != m
    Turn alpha, beta;
    int sign = 1;
};

struct SurfaceComponent {
    long k = 1;
    long self_int = 0;
    Turn psi;
    int sign = 1;
};

struct FixedPointData {
    long m = 2;
    Parity lift = Parity::Even;  // spin-lift type (epsilon = +1 / -1)
    Rat sigma = Rat(0);          // signature of the filling
    std::vector<IsolatedPoint> isolated;
    std::vector<SurfaceComponent> surfaces;
};

struct CharVector {
    long m = 2;
    Parity lift = Parity::Even;
    std::vector<CycNum> chars;  // values at mu^0 .. mu^{2m-1}
};

// Characters of the S-invariant; throws on an angle at a pole.
CharVector s_characters(const FixedPointData& d);

// The vector version: R_j (even lift) or R_{j+1/2} (odd lift); every
// component must be rational or the data is inconsistent.
std::vector<Rat> char_to_vector(const CharVector& c);
CharVector vector_to_char(long m, Parity lift, const std::vector<Rat>& v);

// D-folded S-vector; independent of the choice of spin lift.
std::vector<Rat> frakS_vector(const FixedPointData& d);

// Characters with the opposite spin lift (flips signs at odd mu-powers).
FixedPointData spin_flip(const FixedPointData& d);

struct Correction {
    CharVector chars;
    std::vector<Rat> vec;
};

// n(Y) = Spin(W) + S(W)/8 from a filling; spin_coeffs are the integer
// coefficients of the equivariant index in R(Z_2m), parity-matching and
// symmetric.
Correction correction_from_filling(const std::vector<Int>& spin_coeffs, const FixedPointData& d);

// Allowed spin-lift parities per the fixed-point classification. dims
// holds the dimensions of the components of the sigma^{m/2}-fixed set.
std::vector<Parity> classify_spin_lift_parity(int manifold_dim, long m,
                                              const std::vector<int>& fixed_set_dims,
                                              std::optional<bool> quotient_spin);

// JSON encoding of a filling description used by the CLI.
FixedPointData filling_from_json(const std::string& text);
std::string filling_to_json(const FixedPointData& d);
std::vector<Int> spin_coeffs_from_json(const std::string& text);  // optional field

// Random but internally consistent data: base components whose angles
// scale with k, which is exactly the shape the fixed-point sets of an
// honest action take. Used by the property suites.
FixedPointData random_fixed_point_data(long m, Parity lift, std::mt19937& rng);

}  // namespace equik::gspin
