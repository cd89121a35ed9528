#include "equik/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equik::lattice {

namespace {

Vec plus_e0(const Vec& v) {
    Vec w = v;
    w[0] += 1;
    return w;
}

Vec minus_e0(const Vec& v) {
    Vec w = v;
    w[0] -= 1;
    return w;
}

bool leq_componentwise(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<Rat> dfold(Parity par, const std::vector<Rat>& v, long m) {
    std::vector<Rat> out(m, Rat(0));
    for (long i = 0; i < (long)v.size(); ++i) {
        long j = (par == Parity::Even) ? (2 * i) % m : (2 * i + 1) % m;
        out[j] += v[i];
        out[j].canonicalize();
    }
    return out;
}

Vec dfold_int(Parity par, const Vec& v, long m) {
    Vec out(m, 0);
    for (long i = 0; i < (long)v.size(); ++i) {
        long j = (par == Parity::Even) ? (2 * i) % m : (2 * i + 1) % m;
        out[j] += v[i];
    }
    return out;
}

std::vector<long> dcoords(Parity par, long m) {
    std::vector<long> out;
    if (m % 2 == 1) {
        out.resize(m);
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    for (long j = (par == Parity::Even) ? 0 : 1; j < m; j += 2) out.push_back(j);
    return out;
}

LatPoint::LatPoint(long m, Vec v) : m_(m) {
    if ((long)v.size() != m) throw std::invalid_argument("LatPoint: wrong length");
    for (long x : v)
        if (x < 0) throw std::invalid_argument("LatPoint: negative exponent");
    v_ = minus_e0(monomial::normal_form(plus_e0(v), m));
}

long LatPoint::grade() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

std::string LatPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << "]";
    return os.str();
}

std::vector<Vec> lat_class(const LatPoint& x) {
    std::vector<Vec> out;
    for (const Vec& p : monomial::presentations(plus_e0(x.rep()), x.m())) out.push_back(minus_e0(p));
    return out;
}

bool lat_leq(const LatPoint& a, const LatPoint& b) {
    if (a.m() != b.m()) throw std::invalid_argument("lat_leq: mixed lattices");
    if (a.grade() > b.grade()) return false;
    auto ca = lat_class(a), cb = lat_class(b);
    for (const Vec& x : ca)
        for (const Vec& y : cb)
            if (leq_componentwise(x, y)) return true;
    return false;
}

LatPoint lat_add(const LatPoint& a, const LatPoint& b) {
    if (a.m() != b.m()) throw std::invalid_argument("lat_add: mixed lattices");
    Vec v = a.rep();
    for (size_t i = 0; i < v.size(); ++i) v[i] += b.rep()[i];
    return LatPoint(a.m(), v);
}

namespace {

std::vector<LatPoint> minima_of(std::vector<LatPoint> pts) {
    std::vector<LatPoint> out;
    for (const LatPoint& p : pts) {
        bool dominated = false;
        for (const LatPoint& q : pts) {
            if (q == p) continue;
            if (lat_leq(q, p)) {
                // strictly below, or an equal duplicate we keep only once
                if (!lat_leq(p, q)) {
                    dominated = true;
                    break;
                }
            }
        }
        if (!dominated && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

std::vector<LatPoint> pair_candidates(const LatPoint& a, const LatPoint& b, bool join) {
    std::vector<LatPoint> cands;
    for (const Vec& u : lat_class(a)) {
        for (const Vec& v : lat_class(b)) {
            Vec w(u.size());
            for (size_t j = 0; j < u.size(); ++j)
                w[j] = join ? std::max(u[j], v[j]) : std::min(u[j], v[j]);
            LatPoint cp(a.m(), w);
            if (std::find(cands.begin(), cands.end(), cp) == cands.end()) cands.push_back(cp);
        }
    }
    return cands;
}

std::vector<LatPoint> bound_set(const std::vector<LatPoint>& s, bool join) {
    if (s.empty()) return {};
    std::vector<LatPoint> acc{s[0]};
    for (size_t i = 1; i < s.size(); ++i) {
        std::vector<LatPoint> next;
        for (const LatPoint& x : acc)
            for (const LatPoint& c : pair_candidates(x, s[i], join))
                if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
        acc = next;
    }
    // keep the extreme ones
    std::vector<LatPoint> out;
    for (const LatPoint& p : acc) {
        bool beaten = false;
        for (const LatPoint& q : acc) {
            if (q == p) continue;
            if (join ? (lat_leq(q, p) && !lat_leq(p, q)) : (lat_leq(p, q) && !lat_leq(q, p))) {
                beaten = true;
                break;
            }
        }
        if (!beaten && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

std::optional<LatPoint> extremum(const std::vector<LatPoint>& s, bool join) {
    if (s.empty()) return std::nullopt;  // +infinity
    std::vector<LatPoint> b = bound_set(s, join);
    if (b.size() != 1)
        throw std::domain_error(join ? "lat_join: no unique candidate upper bound"
                                     : "lat_meet: no unique candidate lower bound");
    return b[0];
}

}  // namespace

std::vector<LatPoint> lat_upper_minima(const std::vector<LatPoint>& s) {
    return bound_set(s, true);
}
std::vector<LatPoint> lat_lower_maxima(const std::vector<LatPoint>& s) {
    return bound_set(s, false);
}

std::optional<LatPoint> lat_join(const std::vector<LatPoint>& s) { return extremum(s, true); }
std::optional<LatPoint> lat_meet(const std::vector<LatPoint>& s) { return extremum(s, false); }

bool lat_st_eq(const LatPoint& a, const LatPoint& b, Parity par) {
    if (a.m() != b.m()) throw std::invalid_argument("lat_st_eq: mixed lattices");
    long m = a.m();
    if (m % 2 == 1) return a == b;  // stabilization is the identity for odd m
    Vec shift(m, 0);
    for (long j : dcoords(par, m)) shift[j] = 1;
    Vec va = a.rep(), vb = b.rep();
    long bound = a.grade() + b.grade() + 2 * m + 4;
    for (long k = 0; k <= bound; ++k) {
        if (LatPoint(m, va) == LatPoint(m, vb)) return true;
        for (long j = 0; j < m; ++j) {
            va[j] += shift[j];
            vb[j] += shift[j];
        }
    }
    return false;
}

std::string MinSetN::str() const {
    if (infinite) return "{+inf}";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << pts[i].str();
    os << "}";
    return os.str();
}

MinSetN minima(long m, const std::vector<LatPoint>& generators) {
    MinSetN s;
    s.m = m;
    if (generators.empty()) {
        s.infinite = true;
        return s;
    }
    s.pts = minima_of(generators);
    return s;
}

bool minset_eq(const MinSetN& a, const MinSetN& b) {
    if (a.infinite != b.infinite) return false;
    if (a.pts.size() != b.pts.size()) return false;
    for (const LatPoint& p : a.pts)
        if (std::find(b.pts.begin(), b.pts.end(), p) == b.pts.end()) return false;
    return true;
}

LatPoint pin2_induction_element(long r, long k) {
    if (r < 1) throw std::invalid_argument("pin2_induction_element: r >= 1");
    long m = 1L << r;
    Vec v(m, 0);
    v[0] = k;
    for (long j = 0; j < r; ++j) v[1L << j] += 1;
    return LatPoint(m, v);
}

std::pair<long, long> project_pi(const LatPoint& x) {
    auto pr = prime_power(x.m());
    if (!pr || pr->first == 2)
        throw std::invalid_argument("project_pi: m must be an odd prime power");
    long rest = 0;
    for (size_t i = 1; i < x.rep().size(); ++i) rest += x.rep()[i];
    return {x.rep()[0], rest};
}

QPoint::QPoint(long m, Parity par, std::vector<Rat> v) : m_(m), par_(par), v_(std::move(v)) {
    if ((long)v_.size() != m) throw std::invalid_argument("QPoint: wrong length");
    for (auto& q : v_) q.canonicalize();
    std::vector<long> dc = dcoords(par, m);
    for (long j = 0; j < m; ++j) {
        if (std::find(dc.begin(), dc.end(), j) != dc.end()) continue;
        if (!is_integer(v_[j]) || v_[j] < 0)
            throw std::invalid_argument("QPoint: non-doubling coordinate must be natural");
    }
}

Rat QPoint::grade() const {
    Rat s(0);
    for (const auto& q : v_) s += q;
    s.canonicalize();
    return s;
}

QPoint QPoint::shifted(const std::vector<Rat>& d) const {
    if ((long)d.size() != m_) throw std::invalid_argument("shifted: wrong length");
    std::vector<Rat> v = v_;
    for (long j = 0; j < m_; ++j) {
        v[j] += d[j];
        v[j].canonicalize();
    }
    return QPoint(m_, par_, v);  // constructor re-checks the cone condition
}

std::string QPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (long j = 0; j < m_; ++j) os << (j ? "," : "") << rat_str(v_[j]);
    os << "]";
    return os.str();
}

QPoint embed_q(const LatPoint& x, Parity par) {
    std::vector<Rat> v;
    for (long c : x.rep()) v.emplace_back(c);
    return QPoint(x.m(), par, v);
}

namespace {

// Clears both points into N^m by one doubling-supported shift; returns
// integer vectors plus the per-step shift used by the bounded search.
struct Cleared {
    bool comparable = false;
    Vec a, b, step;
};

Cleared clear_pair(const QPoint& a, const QPoint& b) {
    Cleared out;
    long m = a.m();
    std::vector<long> dc = dcoords(a.parity(), m);
    Vec va(m, 0), vb(m, 0), step(m, 0);
    for (long j = 0; j < m; ++j) {
        bool is_dc = std::find(dc.begin(), dc.end(), j) != dc.end();
        Rat diff = a.rep()[j] - b.rep()[j];
        diff.canonicalize();
        if (!is_dc) {
            va[j] = (long)a.rep()[j].get_num().get_si();
            vb[j] = (long)b.rep()[j].get_num().get_si();
            continue;
        }
        if (!is_integer(diff)) return out;  // no common integral shift exists
        // c_j = u_j - a_j with natural u_j >= max(0, a_j - b_j)
        Int u = rat_ceil(a.rep()[j] - b.rep()[j]);
        if (u < 0) u = 0;
        va[j] = (long)u.get_si();
        Rat bj = b.rep()[j] + (Rat(u) - a.rep()[j]);
        bj.canonicalize();
        vb[j] = (long)bj.get_num().get_si();
        step[j] = 1;
    }
    out.comparable = true;
    out.a = va;
    out.b = vb;
    out.step = step;
    return out;
}

long shift_bound(long m) { return (m % 2 == 1) ? 4 : 2 * m + 2; }

}  // namespace

bool q_leq(const QPoint& a, const QPoint& b) {
    if (a.m() != b.m() || a.parity() != b.parity())
        throw std::invalid_argument("q_leq: mixed lattices");
    if (a.grade() > b.grade()) return false;
    Cleared c = clear_pair(a, b);
    if (!c.comparable) return false;
    long m = a.m();
    for (long k = 0; k <= shift_bound(m); ++k) {
        if (lat_leq(LatPoint(m, c.a), LatPoint(m, c.b))) return true;
        for (long j = 0; j < m; ++j) {
            c.a[j] += c.step[j];
            c.b[j] += c.step[j];
        }
    }
    return false;
}

bool q_eq(const QPoint& a, const QPoint& b) { return q_leq(a, b) && q_leq(b, a); }

QPoint q_add(const QPoint& a, const QPoint& b) {
    if (a.m() != b.m() || a.parity() != b.parity())
        throw std::invalid_argument("q_add: mixed lattices");
    std::vector<Rat> v = a.rep();
    for (long j = 0; j < a.m(); ++j) {
        v[j] += b.rep()[j];
        v[j].canonicalize();
    }
    return QPoint(a.m(), a.parity(), v);
}

std::pair<Rat, Rat> project_pi_q(const QPoint& x) {
    auto pr = prime_power(x.m());
    if (!pr || pr->first == 2)
        throw std::invalid_argument("project_pi_q: m must be an odd prime power");
    Rat rest(0);
    for (long j = 1; j < x.m(); ++j) rest += x.rep()[j];
    rest.canonicalize();
    return {x.rep()[0], rest};
}

std::string MinSetQ::str() const {
    if (infinite) return "{+inf}";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << pts[i].str();
    os << "}";
    return os.str();
}

MinSetQ minima_q(long m, Parity par, const std::vector<QPoint>& generators) {
    MinSetQ s;
    s.m = m;
    s.par = par;
    if (generators.empty()) {
        s.infinite = true;
        return s;
    }
    for (const QPoint& p : generators) {
        bool dominated = false;
        for (const QPoint& q : generators) {
            if (&q == &p) continue;
            if (q_leq(q, p) && !q_leq(p, q)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        bool dup = false;
        for (const QPoint& kept : s.pts) dup |= q_eq(kept, p);
        if (!dup) s.pts.push_back(p);
    }
    return s;
}

MinSetQ minset_to_q(const MinSetN& s, Parity par) {
    MinSetQ out;
    out.m = s.m;
    out.par = par;
    out.infinite = s.infinite;
    for (const LatPoint& p : s.pts) out.pts.push_back(embed_q(p, par));
    return out;
}

MinSetQ minset_shift(const MinSetQ& s, const std::vector<Rat>& d) {
    MinSetQ out = s;
    out.pts.clear();
    for (const QPoint& p : s.pts) out.pts.push_back(p.shifted(d));
    return out;
}

bool minset_q_eq(const MinSetQ& a, const MinSetQ& b) {
    if (a.infinite != b.infinite) return false;
    if (a.pts.size() != b.pts.size()) return false;
    for (const QPoint& p : a.pts) {
        bool found = false;
        for (const QPoint& q : b.pts) found |= q_eq(p, q);
        if (!found) return false;
    }
    return true;
}

namespace {

std::optional<QPoint> q_extremum(const MinSetQ& s, bool join) {
    if (s.infinite || s.pts.empty()) return std::nullopt;
    // Reduce to N^m after one common clearing shift, then shift back.
    long m = s.m;
    std::vector<long> dc = dcoords(s.par, m);
    std::vector<Rat> shift(m, Rat(0));
    for (long j : dc) {
        Rat v0 = s.pts[0].rep()[j];
        Rat lo = v0;
        for (const QPoint& p : s.pts) {
            Rat d = p.rep()[j] - v0;
            d.canonicalize();
            if (!is_integer(d)) throw std::invalid_argument("q_extremum: incomparable grid");
            lo = std::min(lo, p.rep()[j]);
        }
        // shift = -v0 (mod 1) and large enough that the lowest point clears 0
        shift[j] = Rat(rat_ceil(v0 - lo)) - v0;
        shift[j].canonicalize();
    }
    std::vector<LatPoint> lifted;
    for (const QPoint& p : s.pts) {
        QPoint q = p.shifted(shift);
        Vec v(m);
        for (long j = 0; j < m; ++j) {
            if (!is_integer(q.rep()[j]) || q.rep()[j] < 0)
                throw std::logic_error("q_extremum: clearing failed");
            v[j] = (long)q.rep()[j].get_num().get_si();
        }
        lifted.emplace_back(m, v);
    }
    auto ext = join ? lat_join(lifted) : lat_meet(lifted);
    if (!ext) return std::nullopt;
    std::vector<Rat> back(m, Rat(0));
    for (long j = 0; j < m; ++j) back[j] = -shift[j];
    return embed_q(*ext, s.par).shifted(back);
}

}  // namespace

std::optional<QPoint> q_join(const MinSetQ& s) { return q_extremum(s, true); }
std::optional<QPoint> q_meet(const MinSetQ& s) { return q_extremum(s, false); }

}  // namespace equik::lattice
