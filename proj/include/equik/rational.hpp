#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace equik {

using Int = mpz_class;
using Rat = mpq_class;

// Renders a reduced rational as "a" or "a/b" with b > 0.
inline std::string rat_str(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

// Floor of a rational, as an Int.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace equik
