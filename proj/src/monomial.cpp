#include "equik/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace equik::monomial {

namespace {

long vsum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void check_args(const Vec& a, const Vec& b, long m) {
    if ((long)a.size() != m || (long)b.size() != m)
        throw std::invalid_argument("exponent vectors must have length m");
    if (a[0] < 1 || b[0] < 1) throw std::invalid_argument("w_0-exponent must be >= 1");
}

std::mutex g_pres_mutex;
std::map<std::pair<long, Vec>, std::vector<Vec>> g_pres_cache;

}  // namespace

bool lex_less(const Vec& a, const Vec& b) {
    // With x_0 < x_1 < ... and equal degree, the earlier word is the one
    // carrying more weight on the smaller variables.
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

void for_each_composition(long total, long m, const std::function<void(const Vec&)>& fn) {
    Vec v(m, 0);
    std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx == m - 1) {
            v[idx] = left;
            fn(v);
            return;
        }
        for (long x = 0; x <= left; ++x) {
            v[idx] = x;
            rec(idx + 1, left - x);
        }
    };
    if (m <= 0) return;
    rec(0, total);
}

bool equal_in_w0w(const Vec& a, const Vec& b, long m) {
    check_args(a, b, m);
    auto pr = prime_power(m);
    if (!pr) throw std::invalid_argument("equal_in_w0w: m must be a prime power");
    auto [p, r] = *pr;
    if (vsum(a) != vsum(b)) return false;
    long T = 1;
    for (long t = 0; t < r; ++t) {
        T *= p;
        ExpVector diff{T, std::vector<long>(T, 0)};
        std::vector<long> fa(T, 0), fb(T, 0);
        for (long i = 0; i < m; ++i) {
            fa[i % T] += a[i];
            fb[i % T] += b[i];
        }
        if (p == 2) {
            // the factor (1 + w_{2^{t+1}}^{2^t}) vanishes: trace-zero patterns
            // must match, and the unit condition applies only off the zero set
            bool za = fa[T / 2] != 0, zb = fb[T / 2] != 0;
            if (za != zb) return false;
            if (za) continue;
        }
        for (long k = 0; k < T; ++k) diff.c[k] = fa[k] - fb[k];
        if (!unit_criterion(diff)) return false;
    }
    return true;
}

bool trace_oracle_equal(const Vec& a, const Vec& b, long m) {
    check_args(a, b, m);
    if (vsum(a) != vsum(b)) return false;  // trace at j is 2^{|a|}
    for (long l = 1; l < m; ++l) {
        // trace at j*gamma^l: prod_k (1 + w_m^{kl})^{a_k}
        auto vanishes = [&](const Vec& v) {
            if (m % 2 != 0) return false;
            for (long k = 0; k < m; ++k)
                if (v[k] > 0 && (k * l) % m == m / 2) return true;
            return false;
        };
        bool za = vanishes(a), zb = vanishes(b);
        if (za != zb) return false;
        if (za) continue;
        CycNum pa(1), pb(1);
        for (long k = 0; k < m; ++k) {
            if (a[k] > 0) pa *= (CycNum(1) + CycNum::root(m, k * l)).pow(a[k]);
            if (b[k] > 0) pb *= (CycNum(1) + CycNum::root(m, k * l)).pow(b[k]);
        }
        if (pa != pb) return false;
    }
    return true;
}

bool monoid_equal(const Vec& a, const Vec& b, long m) {
    if (prime_power(m)) return equal_in_w0w(a, b, m);
    return trace_oracle_equal(a, b, m);
}

std::vector<Vec> presentations(const Vec& a, long m) {
    check_args(a, a, m);
    {
        std::lock_guard<std::mutex> lock(g_pres_mutex);
        auto it = g_pres_cache.find({m, a});
        if (it != g_pres_cache.end()) return it->second;
    }
    std::vector<Vec> out;
    long total = vsum(a);
    auto pr = prime_power(m);
    bool fix_a0 = pr && pr->first != 2;  // a_0 is conserved for odd p
    if (fix_a0) {
        for_each_composition(total - a[0], m - 1, [&](const Vec& tail) {
            Vec b(m);
            b[0] = a[0];
            std::copy(tail.begin(), tail.end(), b.begin() + 1);
            if (monoid_equal(a, b, m)) out.push_back(b);
        });
    } else {
        for_each_composition(total, m, [&](const Vec& b) {
            if (b[0] < 1) return;
            if (monoid_equal(a, b, m)) out.push_back(b);
        });
    }
    std::sort(out.begin(), out.end());
    {
        std::lock_guard<std::mutex> lock(g_pres_mutex);
        g_pres_cache.emplace(std::make_pair(m, a), out);
    }
    return out;
}

Vec normal_form(const Vec& a, long m) {
    check_args(a, a, m);
    if (m == 2) {
        if (a[1] == 0) return a;
        return Vec{a[0] + a[1] - 1, 1};
    }
    if (m == 3) {
        return Vec{a[0], a[1] + 3 * (a[2] / 3), a[2] % 3};
    }
    if (m == 4) {
        long s = vsum(a);
        if (a[2] >= 1 && a[1] + a[3] >= 1) return Vec{s - 2, 1, 1, 0};
        if (a[2] >= 1) return Vec{a[0] + a[2] - 1, 0, 1, 0};
        return Vec{a[0], a[1] + 4 * (a[3] / 4), 0, a[3] % 4};
    }
    std::vector<Vec> cls = presentations(a, m);
    const Vec* best = &cls.front();
    for (const Vec& cand : cls)
        if (lex_less(cand, *best)) best = &cand;
    return *best;
}

}  // namespace equik::monomial
