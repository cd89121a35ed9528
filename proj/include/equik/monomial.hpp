#pragma once

// The multiplicative monoid W_m of w-monomials in R(G*_m). Equality inside
// w_0*W_m is decided by the prime-power criterion on folded exponent
// vectors, with an exact character-comparison oracle available for every m.

#include <functional>
#include <vector>

#include "equik/cyclotomic.hpp"

namespace equik::monomial {

using Vec = std::vector<long>;

// w^a == w^b in w_0*W_{p^r}? Requires m = p^r prime power and a0, b0 >= 1.
bool equal_in_w0w(const Vec& a, const Vec& b, long m);

// Same question decided by comparing exact traces at j*gamma^l; valid for
// any m >= 2. Kept as the independent oracle for equal_in_w0w.
bool trace_oracle_equal(const Vec& a, const Vec& b, long m);

// Dispatch: criterion for prime powers, trace comparison otherwise.
bool monoid_equal(const Vec& a, const Vec& b, long m);

// Lexicographically minimal presentation of w^a (x_0 < x_1 < ... < x_{m-1});
// requires a0 >= 1. Closed forms for m = 2, 3, 4; class search otherwise.
Vec normal_form(const Vec& a, long m);

// All presentations of w^a (finite; total degree is conserved).
std::vector<Vec> presentations(const Vec& a, long m);

// true when x^a precedes x^b in the monomial lex order (equal total degree).
bool lex_less(const Vec& a, const Vec& b);

// Iterates all c >= 0 with |c| = total over m slots.
void for_each_composition(long total, long m, const std::function<void(const Vec&)>& fn);

}  // namespace equik::monomial
