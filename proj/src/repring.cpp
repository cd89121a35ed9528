#include "equik/repring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace equik::repring {

namespace {

bool poly_zero(const Poly& p) {
    for (const Int& c : p)
        if (c != 0) return false;
    return true;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, long M) {
    Poly r(M, Int(0));
    for (long i = 0; i < M; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < M; ++j) {
            if (b[j] == 0) continue;
            r[(i + j) % M] += a[i] * b[j];
        }
    }
    return r;
}

Poly poly_const(long M, long v) {
    Poly r(M, Int(0));
    r[0] = v;
    return r;
}

bool has_parity(const Poly& p, long parity2) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0 && (long)(i % 2) != parity2) return false;
    return true;
}

CycNum poly_eval(const Poly& p, long M, long a) {
    CycNum acc(0);
    for (long i = 0; i < M; ++i) {
        if (p[i] == 0) continue;
        acc += CycNum(Rat(p[i])) * CycNum::root(M, i * a);
    }
    return acc;
}

}  // namespace

long GroupTag::modulus() const {
    switch (kind) {
        case RingKind::Pin2: return 1;
        case RingKind::TwistedEven: return m;
        case RingKind::TwistedOdd: return 2 * m;
        case RingKind::Zm: return m;
        case RingKind::Z2m: return 2 * m;
    }
    return 1;
}

RingElem::RingElem(GroupTag g) : g_(g) {
    scalar_.assign(g.modulus(), Int(0));
    ctilde_.assign(g.modulus(), Int(0));
}

RingElem RingElem::constant(GroupTag g, long v) {
    RingElem e(g);
    e.scalar_[0] = v;
    return e;
}

void RingElem::prune_() {
    for (auto it = hpow_.begin(); it != hpow_.end();)
        it = poly_zero(it->second) ? hpow_.erase(it) : std::next(it);
    if (g_.kind == RingKind::Zm || g_.kind == RingKind::Z2m) {
        if (!poly_zero(ctilde_) || !hpow_.empty())
            throw std::logic_error("cyclic-group element acquired Pin(2) parts");
    }
    if (g_.kind == RingKind::TwistedOdd) {
        if (!has_parity(scalar_, 0) || !has_parity(ctilde_, 0))
            throw std::logic_error("odd-parity scalar must live on even xi-powers");
        for (const auto& [k, p] : hpow_)
            if (!has_parity(p, k % 2))
                throw std::logic_error("odd-parity h-term has wrong xi-support");
    }
}

bool RingElem::is_zero() const {
    return poly_zero(scalar_) && poly_zero(ctilde_) && hpow_.empty();
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    if (!(a.g_ == b.g_)) throw std::invalid_argument("RingElem: mixed groups");
    RingElem r(a.g_);
    r.scalar_ = poly_add(a.scalar_, b.scalar_);
    r.ctilde_ = poly_add(a.ctilde_, b.ctilde_);
    r.hpow_ = a.hpow_;
    for (const auto& [k, p] : b.hpow_) {
        auto it = r.hpow_.find(k);
        if (it == r.hpow_.end())
            r.hpow_.emplace(k, p);
        else
            it->second = poly_add(it->second, p);
    }
    r.prune_();
    return r;
}

RingElem operator-(const RingElem& a) {
    RingElem r = a;
    r.scalar_ = poly_neg(r.scalar_);
    r.ctilde_ = poly_neg(r.ctilde_);
    for (auto& [k, p] : r.hpow_) p = poly_neg(p);
    return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
    if (!(a.g_ == b.g_)) throw std::invalid_argument("RingElem: mixed groups");
    long M = a.g_.modulus();
    RingElem r(a.g_);
    // (a1 + b1 c + sum r_k h^k)(a2 + b2 c + sum s_l h^l), with c^2 = 1,
    // c h = h: the h-part absorbs every c.
    r.scalar_ = poly_add(poly_mul(a.scalar_, b.scalar_, M), poly_mul(a.ctilde_, b.ctilde_, M));
    r.ctilde_ = poly_add(poly_mul(a.scalar_, b.ctilde_, M), poly_mul(a.ctilde_, b.scalar_, M));
    auto add_h = [&](long k, const Poly& p) {
        auto it = r.hpow_.find(k);
        if (it == r.hpow_.end())
            r.hpow_.emplace(k, p);
        else
            it->second = poly_add(it->second, p);
    };
    Poly a_flat = poly_add(a.scalar_, a.ctilde_);  // c acts trivially on h-terms
    Poly b_flat = poly_add(b.scalar_, b.ctilde_);
    for (const auto& [l, q] : b.hpow_) add_h(l, poly_mul(a_flat, q, M));
    for (const auto& [k, p] : a.hpow_) add_h(k, poly_mul(p, b_flat, M));
    for (const auto& [k, p] : a.hpow_)
        for (const auto& [l, q] : b.hpow_) add_h(k + l, poly_mul(p, q, M));
    r.prune_();
    return r;
}

RingElem RingElem::pow(long e) const {
    if (e < 0) throw std::invalid_argument("RingElem::pow: negative exponent");
    RingElem acc = constant(g_, 1);
    RingElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const RingElem& a, const RingElem& b) {
    return a.g_ == b.g_ && a.scalar_ == b.scalar_ && a.ctilde_ == b.ctilde_ && a.hpow_ == b.hpow_;
}

std::string RingElem::str() const {
    const char* var = (g_.kind == RingKind::TwistedOdd || g_.kind == RingKind::Z2m) ? "xi" : "zeta";
    auto poly_str = [&](const Poly& p) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            if (!first) os << (p[i] > 0 ? " + " : " - ");
            else if (p[i] < 0) os << "-";
            Int av = abs(p[i]);
            if (av != 1 || i == 0) os << av.get_str();
            if (i >= 1) {
                if (av != 1) os << "*";
                os << var;
                if (i >= 2) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    };
    std::ostringstream os;
    bool any = false;
    if (!poly_zero(scalar_)) {
        os << poly_str(scalar_);
        any = true;
    }
    if (!poly_zero(ctilde_)) {
        if (any) os << " + ";
        os << "(" << poly_str(ctilde_) << ")*c";
        any = true;
    }
    for (const auto& [k, p] : hpow_) {
        if (any) os << " + ";
        os << "(" << poly_str(p) << ")*h^" << k;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

RingElem RingElem::x_power(GroupTag g, long k) {
    if (g.kind == RingKind::Pin2) throw std::invalid_argument("x_power: Pin(2) has no x");
    if (g.kind == RingKind::TwistedOdd && k % 2 != 0)
        throw std::invalid_argument("x_power: odd xi-power is not a ring element by itself");
    RingElem e(g);
    long M = g.modulus();
    k %= M;
    if (k < 0) k += M;
    e.scalar_[k] = 1;
    return e;
}

RingElem RingElem::ctilde(GroupTag g) {
    if (g.kind == RingKind::Zm || g.kind == RingKind::Z2m)
        throw std::invalid_argument("ctilde: not in a cyclic-group ring");
    RingElem e(g);
    e.ctilde_[0] = 1;
    return e;
}

RingElem RingElem::h_term(GroupTag g, long k, long xpow) {
    if (g.kind == RingKind::Zm || g.kind == RingKind::Z2m)
        throw std::invalid_argument("h_term: not in a cyclic-group ring");
    if (k < 1) throw std::invalid_argument("h_term: k >= 1");
    RingElem e(g);
    long M = g.modulus();
    xpow %= M;
    if (xpow < 0) xpow += M;
    if (g.kind == RingKind::TwistedOdd && (xpow % 2) != (k % 2))
        throw std::invalid_argument("h_term: xi-power parity must match h-degree");
    Poly p(M, Int(0));
    p[xpow] = 1;
    e.hpow_.emplace(k, p);
    return e;
}

RingElem gen_w(GroupTag g, long k) {
    if (g.kind == RingKind::Pin2) {
        RingElem one = RingElem::constant(g, 1);
        return one - RingElem::ctilde(g);
    }
    if (g.kind != RingKind::TwistedEven && g.kind != RingKind::TwistedOdd)
        throw std::invalid_argument("gen_w: needs a twisted-product ring");
    long xk = (g.kind == RingKind::TwistedEven) ? k : 2 * k;
    return RingElem::constant(g, 1) - RingElem::x_power(g, xk) * RingElem::ctilde(g);
}

RingElem gen_z(GroupTag g, long k) {
    if (g.kind == RingKind::Pin2) {
        // z = 1 - h + 1
        return RingElem::constant(g, 2) - RingElem::h_term(g, 1, 0);
    }
    if (g.kind == RingKind::TwistedEven)
        return RingElem::constant(g, 1) - RingElem::h_term(g, 1, k) + RingElem::x_power(g, 2 * k);
    if (g.kind == RingKind::TwistedOdd)
        return RingElem::constant(g, 1) - RingElem::h_term(g, 1, 2 * k + 1) +
               RingElem::x_power(g, 4 * k + 2);
    throw std::invalid_argument("gen_z: needs a twisted-product ring");
}

RingElem euler_class(GroupTag g, const std::vector<long>& s, const std::vector<long>& t) {
    RingElem acc = RingElem::constant(g, 1);
    for (long k = 0; k < (long)s.size(); ++k)
        if (s[k] > 0) acc = acc * gen_w(g, k).pow(s[k]);
    for (long k = 0; k < (long)t.size(); ++k)
        if (t[k] > 0) acc = acc * gen_z(g, k).pow(t[k]);
    return acc;
}

CycNum TracePoly::at2() const {
    CycNum acc(0);
    CycNum two(2);
    CycNum p(1);
    for (const CycNum& c : coeff) {
        acc += c * p;
        p *= two;
    }
    return acc;
}

TracePoly trace_generic(const RingElem& x, const GroupElement& g) {
    GroupTag tag = x.group();
    long M = tag.modulus();
    TracePoly out;
    CycNum s = poly_eval(x.scalar(), M, g.a);
    CycNum c = poly_eval(x.ctilde_part(), M, g.a);
    if (g.j) {
        // tr_j(c) = -1 and every h-term has trace zero at j-type elements
        out.coeff.push_back(s - c);
        return out;
    }
    out.coeff.push_back(s + c);
    for (const auto& [k, p] : x.h_parts()) {
        if ((long)out.coeff.size() <= k) out.coeff.resize(k + 1, CycNum(0));
        out.coeff[k] += poly_eval(p, M, g.a);
    }
    return out;
}

CycNum trace(const RingElem& x, const GroupElement& g) {
    if (g.generic_phi) throw std::invalid_argument("trace: generic angle needs trace_generic");
    return trace_generic(x, g).at2();
}

RingElem restrict_to_pin2(const RingElem& x) {
    GroupTag src = x.group();
    if (src.kind != RingKind::TwistedEven && src.kind != RingKind::TwistedOdd)
        throw std::invalid_argument("restrict_to_pin2: source must be twisted");
    GroupTag pin{RingKind::Pin2, 1};
    auto fold = [](const Poly& p) {  // x -> 1
        Int s(0);
        for (const Int& c : p) s += c;
        return (long)s.get_si();
    };
    RingElem acc = RingElem::constant(pin, fold(x.scalar()));
    acc = acc + RingElem::constant(pin, fold(x.ctilde_part())) * RingElem::ctilde(pin);
    for (const auto& [k, p] : x.h_parts())
        acc = acc + RingElem::constant(pin, fold(p)) * RingElem::h_term(pin, k, 0);
    return acc;
}

RingElem restrict_to_cyclic(const RingElem& x) {
    GroupTag src = x.group();
    if (src.kind != RingKind::TwistedEven && src.kind != RingKind::TwistedOdd)
        throw std::invalid_argument("restrict_to_cyclic: source must be twisted");
    GroupTag dst{src.kind == RingKind::TwistedEven ? RingKind::Zm : RingKind::Z2m, src.m};
    long M = src.modulus();
    // c -> 1, h -> 2
    Poly acc = poly_add(x.scalar(), x.ctilde_part());
    for (const auto& [k, p] : x.h_parts()) {
        Int mult = 1;
        for (long i = 0; i < k; ++i) mult *= 2;
        Poly scaled = p;
        for (auto& c : scaled) c *= mult;
        acc = poly_add(acc, scaled);
    }
    RingElem result(dst);
    for (long i = 0; i < M; ++i) {
        if (acc[i] == 0) continue;
        result = result + RingElem::constant(dst, (long)acc[i].get_si()) * RingElem::x_power(dst, i);
    }
    return result;
}

RingElem induct_pin2(const RingElem& pin2_elem, GroupTag target) {
    if (pin2_elem.group().kind != RingKind::Pin2)
        throw std::invalid_argument("induct_pin2: source must be R(Pin(2))");
    if (target.kind != RingKind::TwistedEven && target.kind != RingKind::TwistedOdd)
        throw std::invalid_argument("induct_pin2: target must be twisted");
    auto pp = prime_power(target.m);
    if (!pp || pp->first != 2)
        throw std::invalid_argument("induct_pin2: tabulated only for m = 2^r");
    long m = target.m;
    bool even_t = target.kind == RingKind::TwistedEven;
    RingElem sum_even(target);  // 1 + zeta + ... resp. 1 + xi^2 + ...
    for (long j = 0; j < m; ++j)
        sum_even = sum_even + RingElem::x_power(target, even_t ? j : 2 * j);
    long sc = (long)pin2_elem.scalar()[0].get_si();
    long ct = (long)pin2_elem.ctilde_part()[0].get_si();
    RingElem out = RingElem::constant(target, sc) * sum_even +
                   RingElem::constant(target, ct) * RingElem::ctilde(target) * sum_even;
    for (const auto& [k, p] : pin2_elem.h_parts()) {
        long coef = (long)p[0].get_si();
        if (coef == 0) continue;
        if (even_t || k % 2 == 0) {
            out = out + RingElem::constant(target, coef) * RingElem::h_term(target, k, 0) * sum_even;
        } else {
            // odd h-power pairs with the odd xi-sum
            RingElem acc(target);
            for (long j = 0; j < m; ++j) acc = acc + RingElem::h_term(target, k, 2 * j + 1);
            out = out + RingElem::constant(target, coef) * acc;
        }
    }
    return out;
}

std::vector<Rat> complexify(const ROElem& r) {
    long m = r.m;
    std::vector<Rat> out(m, Rat(0));
    long half = (m % 2 == 0) ? m / 2 : 0;
    size_t expect = 1 + (m - 1) / 2 + (m % 2 == 0 ? 1 : 0);
    if (r.coeff.size() != expect) throw std::invalid_argument("complexify: wrong coefficient count");
    out[0] = r.coeff[0];
    for (long j = 1; j <= (m - 1) / 2; ++j) {
        out[j] += r.coeff[j];
        out[(m - j) % m] += r.coeff[j];
    }
    if (m % 2 == 0) out[half] += r.coeff.back();
    for (auto& q : out) q.canonicalize();
    return out;
}

namespace {

// Tiny recursive-descent parser for ring expressions: identifiers w0..,
// z0.., c, h, x2 (xi^2), zeta, integers, + - * ^ ( ).
struct Parser {
    GroupTag g;
    std::string s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    RingElem expr() {
        RingElem acc = term();
        while (true) {
            skip();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }
    RingElem term() {
        RingElem acc = factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * factor();
            else
                break;
        }
        return acc;
    }
    RingElem factor() {
        RingElem base = atom();
        skip();
        if (eat('^')) {
            long e = number();
            base = base.pow(e);
        }
        return base;
    }
    long number() {
        skip();
        bool neg = eat('-');
        long v = 0;
        bool any = false;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos++] - '0');
            any = true;
        }
        if (!any) throw std::invalid_argument("ring expression: expected a number");
        return neg ? -v : v;
    }
    RingElem atom() {
        skip();
        if (eat('(')) {
            RingElem e = expr();
            if (!eat(')')) throw std::invalid_argument("ring expression: missing )");
            return e;
        }
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '-'))
            return RingElem::constant(g, number());
        std::string id;
        while (pos < s.size() && std::isalpha((unsigned char)s[pos])) id += s[pos++];
        if (id == "w") return gen_w(g, number());
        if (id == "z") return gen_z(g, number());
        if (id == "c") return RingElem::ctilde(g);
        if (id == "h") return RingElem::h_term(g, 1, 0);
        if (id == "zeta" || id == "x") {
            long e = 1;
            skip();
            if (pos < s.size() && std::isdigit((unsigned char)s[pos])) e = number();
            return RingElem::x_power(g, id == "zeta" && g.kind == RingKind::TwistedOdd ? 2 * e : e);
        }
        throw std::invalid_argument("ring expression: unknown token '" + id + "'");
    }
};

}  // namespace

RingElem parse_ring_expr(GroupTag g, const std::string& expr) {
    Parser p{g, expr, 0};
    RingElem e = p.expr();
    p.skip();
    if (p.pos != expr.size()) throw std::invalid_argument("ring expression: trailing input");
    return e;
}

}  // namespace equik::repring
