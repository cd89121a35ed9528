#include "equik/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace equik {

namespace {

// Exact division of integer polynomials, quotient only; b monic.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    for (long i = (long)a.size() - 1; i >= (long)b.size() - 1; --i) {
        Int f = a[i];
        if (f == 0) continue;
        long shift = i - ((long)b.size() - 1);
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    return q;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<Int>> g_phi_cache;

}  // namespace

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::optional<std::pair<long, long>> prime_power(long n) {
    if (n < 2) return std::nullopt;
    long p = 0;
    long m = n;
    for (long d = 2; d * d <= n; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::make_pair(n, 1L);
    long r = 0;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, r);
}

const std::vector<Int>& cyclotomic_poly(long n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so
    // all proper divisors are already cached.
    std::vector<long> divs;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) divs.push_back(d);
    for (long d : divs) {
        if (!g_phi_cache.count(d)) {
            // recurse without the lock already held twice: fill directly
            std::vector<Int> xn(d + 1, Int(0));
            xn[0] = -1;
            xn[d] = 1;
            std::vector<Int> acc = xn;
            for (long e = 1; e < d; ++e)
                if (d % e == 0) acc = poly_div_exact(acc, g_phi_cache.at(e));
            g_phi_cache.emplace(d, std::move(acc));
        }
    }
    std::vector<Int> xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    std::vector<Int> acc = xn;
    for (long d : divs) acc = poly_div_exact(acc, g_phi_cache.at(d));
    auto res = g_phi_cache.emplace(n, std::move(acc));
    return res.first->second;
}

void CycNum::reduce_(std::vector<Rat>& raw) {
    const std::vector<Int>& phi = cyclotomic_poly(order_);
    long deg = (long)phi.size() - 1;
    for (long i = (long)raw.size() - 1; i >= deg; --i) {
        Rat f = raw[i];
        if (f == 0) continue;
        raw[i] = 0;
        for (long j = 0; j < deg; ++j) raw[i - deg + j] -= f * Rat(phi[j]);
    }
    raw.resize(deg);
    for (auto& q : raw) q.canonicalize();
    c_ = std::move(raw);
}

CycNum CycNum::root(long n, long k) {
    if (n < 1) throw std::invalid_argument("root: order must be >= 1");
    k %= n;
    if (k < 0) k += n;
    CycNum z;
    z.order_ = n;
    std::vector<Rat> raw(n, Rat(0));
    raw[k] = 1;
    z.reduce_(raw);
    return z;
}

bool CycNum::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_.empty() ? Rat(0) : c_[0];
}

CycNum CycNum::lifted(long n) const {
    if (n == order_) return *this;
    if (n % order_ != 0) throw std::invalid_argument("lifted: not a multiple of order");
    long s = n / order_;
    CycNum z;
    z.order_ = n;
    std::vector<Rat> raw((c_.size() - 1) * s + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * s] = c_[i];
    z.reduce_(raw);
    return z;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    long n = lcm_long(a.order_, b.order_);
    CycNum x = a.lifted(n), y = b.lifted(n);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        x.c_[i] += y.c_[i];
        x.c_[i].canonicalize();
    }
    return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator-(const CycNum& a) {
    CycNum x = a;
    for (auto& q : x.c_) q = -q;
    return x;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    long n = lcm_long(a.order_, b.order_);
    CycNum x = a.lifted(n), y = b.lifted(n);
    std::vector<Rat> raw(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            raw[i + j] += x.c_[i] * y.c_[j];
        }
    }
    CycNum z;
    z.order_ = n;
    z.reduce_(raw);
    return z;
}

bool operator==(const CycNum& a, const CycNum& b) {
    long n = lcm_long(a.order_, b.order_);
    return a.lifted(n).c_ == b.lifted(n).c_;
}

CycNum CycNum::inv() const {
    if (is_zero()) throw std::domain_error("inv: division by zero");
    // Extended Euclid in Q[x] against Phi_n, which is irreducible over Q.
    const std::vector<Int>& phi_i = cyclotomic_poly(order_);
    std::vector<Rat> r0(phi_i.begin(), phi_i.end());
    std::vector<Rat> r1(c_);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // s tracks the coefficient of *this
    auto deg = [](const std::vector<Rat>& p) { return (long)p.size() - 1; };
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<Rat> q(deg(r0) - deg(r1) + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (long i = deg(rem); i >= deg(r1); --i) {
            Rat f = rem[i] / r1.back();
            if (f == 0) continue;
            q[i - deg(r1)] = f;
            for (long j = 0; j <= deg(r1); ++j) {
                rem[i - deg(r1) + j] -= f * r1[j];
                rem[i - deg(r1) + j].canonicalize();
            }
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                s2[i + j] -= q[i] * s1[j];
                s2[i + j].canonicalize();
            }
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("inv: gcd degenerated");
    Rat lead = r1[0];
    CycNum z;
    z.order_ = order_;
    std::vector<Rat> raw = s1;
    for (auto& q : raw) {
        q /= lead;
        q.canonicalize();
    }
    z.reduce_(raw);
    return z;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum acc(Rat(1));
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[i]);
        if (i >= 1) os << "*w" << order_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycNum sin_pi(long a, long b) {
    if (b <= 0) throw std::invalid_argument("sin_pi: b must be positive");
    long n = lcm_long(4, 2 * b);
    // sin(pi a/b) = (w_{2b}^a - w_{2b}^{-a}) / (2i)
    CycNum num = CycNum::root(2 * b, a) - CycNum::root(2 * b, -a);
    CycNum two_i = CycNum::root(4, 1) * CycNum(2);
    return (num * two_i.inv()).lifted(n);
}

CycNum cos_pi(long a, long b) {
    if (b <= 0) throw std::invalid_argument("cos_pi: b must be positive");
    long n = lcm_long(4, 2 * b);
    CycNum num = CycNum::root(2 * b, a) + CycNum::root(2 * b, -a);
    return (num * CycNum(Rat(1, 2))).lifted(n);
}

CycNum csc_pi(long a, long b) {
    CycNum s = sin_pi(a, b);
    if (s.is_zero()) throw std::domain_error("csc_pi: pole at integer multiple of pi");
    return s.inv();
}

CycNum cot_pi(long a, long b) {
    CycNum s = sin_pi(a, b);
    if (s.is_zero()) throw std::domain_error("cot_pi: pole at integer multiple of pi");
    return cos_pi(a, b) * s.inv();
}

long ExpVector::sum() const {
    long s = 0;
    for (long v : c) s += v;
    return s;
}

std::optional<CycNum> unit_product(const ExpVector& e) {
    auto pr = prime_power(e.modulus);
    if (!pr || (long)e.c.size() != e.modulus)
        throw std::invalid_argument("unit_product: modulus must be a prime power matching c");
    if (e.sum() != 0) throw std::invalid_argument("unit_product: exponents must sum to zero");
    auto [p, r] = *pr;
    if (p == 2) {
        long half = e.modulus / 2;
        if (e.c[half] != 0) return std::nullopt;  // factor 1 + w^{2^{r-1}} = 0
    }
    CycNum acc(Rat(1));
    for (long k = 0; k < e.modulus; ++k) {
        if (e.c[k] == 0) continue;
        CycNum f = CycNum(1) + CycNum::root(e.modulus, k);
        acc *= f.pow(e.c[k]);
    }
    return acc;
}

bool unit_criterion(const ExpVector& e) {
    auto pr = prime_power(e.modulus);
    if (!pr || (long)e.c.size() != e.modulus)
        throw std::invalid_argument("unit_criterion: modulus must be a prime power matching c");
    if (e.sum() != 0) throw std::invalid_argument("unit_criterion: exponents must sum to zero");
    auto [p, r] = *pr;
    long M = e.modulus;
    auto at = [&](long k) {
        k %= M;
        if (k < 0) k += M;
        return e.c[k];
    };
    if (p != 2) {
        if (at(0) != 0) return false;
        Int acc = 0;
        for (long k = 1; k <= (M - 1) / 2; ++k) acc += Int(k) * (at(k) - at(-k));
        if (acc % (2 * M) != 0) return false;
        // index/2 means multiplication by the inverse of 2 in Z_M
        long inv2 = (M + 1) / 2;  // 2 * (M+1)/2 = M + 1 = 1 mod M
        for (long k = 2; k <= (M - 1) / 2; ++k) {
            if (k % p == 0) continue;
            Int lhs = 0, rhs = 0;
            long kp = k;
            for (long s = 0; s < r; ++s) {
                lhs += at(kp) + at(-kp);
                long kph = (long)((__int128)kp * inv2 % M);
                rhs += at(kph) + at(-kph);
                kp = (long)((__int128)kp * p % M);
            }
            if (lhs != rhs) return false;
        }
        return true;
    }
    // p == 2
    long half = M / 2;
    if (at(half) != 0) return false;
    if (r == 1) return at(0) == 0;  // product is 2^{c_0}
    Int acc = 0;
    for (long k = 1; k <= half - 1; ++k) acc += Int(k) * (at(k) - at(-k));
    if (acc % (2 * M) != 0) return false;
    for (long k = 1; k <= half - 1; k += 2) {
        Int lhs = 0;
        long k2s = k;
        for (long s = 0; s <= r - 2; ++s) {
            lhs += at(k2s + half) + at(-k2s - half);
            k2s *= 2;
        }
        if (lhs != Int(-2) * at(0)) return false;
    }
    return true;
}

}  // namespace equik
