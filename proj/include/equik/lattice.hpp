#pragma once

// Graded additive posets built from w-monomial classes: the lattice N^m of
// exponent classes, its completion with +infinity, the stabilized and
// rationalized lattice Q^m_* carrying the stable invariants, and the
// projection pi onto N^2 / Q^2 for odd prime powers.

#include <optional>
#include <vector>

#include "equik/monomial.hpp"
#include "equik/rational.hpp"

namespace equik::lattice {

using monomial::Vec;

enum class Parity { Even, Odd };

// Doubling maps. Even: e_i -> e_{2i mod m}; odd: e_{i+1/2} -> e_{2i+1 mod m}.
std::vector<Rat> dfold(Parity par, const std::vector<Rat>& v, long m);
Vec dfold_int(Parity par, const Vec& v, long m);

// Indices reachable by the doubling map (the shift directions of Q^m_*).
std::vector<long> dcoords(Parity par, long m);

// A class [v] in N^m, held by its normal representative.
class LatPoint {
  public:
    LatPoint(long m, Vec v);

    long m() const { return m_; }
    const Vec& rep() const { return v_; }  // normal representative
    long grade() const;

    friend bool operator==(const LatPoint& a, const LatPoint& b) {
        return a.m_ == b.m_ && a.v_ == b.v_;
    }
    friend bool operator!=(const LatPoint& a, const LatPoint& b) { return !(a == b); }

    std::string str() const;

  private:
    long m_;
    Vec v_;
};

// The equivalence class of x as a set of exponent vectors.
std::vector<Vec> lat_class(const LatPoint& x);

bool lat_leq(const LatPoint& a, const LatPoint& b);
LatPoint lat_add(const LatPoint& a, const LatPoint& b);

// The quotient order is not a lattice for every m (condition C4 fails in
// N^3: [(0,3,0)] v [(0,0,1)] and [(0,0,3)] v [(0,0,1)] land in different
// classes), so joins and meets are partial. The candidate bounds are the
// classes [u v v] / [u ^ v] over representative pairs.
std::vector<LatPoint> lat_upper_minima(const std::vector<LatPoint>& s);
std::vector<LatPoint> lat_lower_maxima(const std::vector<LatPoint>& s);

// Join / meet inside the completed lattice; empty input gives +infinity,
// modeled as nullopt. Throws when no least/greatest bound exists among
// the candidates.
std::optional<LatPoint> lat_join(const std::vector<LatPoint>& s);
std::optional<LatPoint> lat_meet(const std::vector<LatPoint>& s);

// Equality in the stabilized lattice N^m_{st,*}.
bool lat_st_eq(const LatPoint& a, const LatPoint& b, Parity par);

// Antichain of minimal elements among the given generators.
struct MinSetN {
    long m = 2;
    std::vector<LatPoint> pts;  // pairwise incomparable
    bool infinite = false;      // the empty case: min of the empty set

    std::string str() const;
};

MinSetN minima(long m, const std::vector<LatPoint>& generators);
bool minset_eq(const MinSetN& a, const MinSetN& b);

// [k*e_0 + sum_{j<r} e_{2^j}] in N^{2^r}; lies in I(X) whenever
// k = k_{Pin(2)}(X) (the induction element).
LatPoint pin2_induction_element(long r, long k);

// (a_0, a_1 + ... + a_{m-1}) for m an odd prime power; class-invariant.
std::pair<long, long> project_pi(const LatPoint& x);

// A class in Q^m_*: rational coordinates on the doubling directions,
// natural coordinates elsewhere.
class QPoint {
  public:
    QPoint(long m, Parity par, std::vector<Rat> v);

    long m() const { return m_; }
    Parity parity() const { return par_; }
    const std::vector<Rat>& rep() const { return v_; }
    Rat grade() const;

    QPoint shifted(const std::vector<Rat>& d) const;  // add a D-supported vector

    std::string str() const;

  private:
    long m_;
    Parity par_;
    std::vector<Rat> v_;
};

QPoint embed_q(const LatPoint& x, Parity par);

bool q_leq(const QPoint& a, const QPoint& b);
bool q_eq(const QPoint& a, const QPoint& b);
QPoint q_add(const QPoint& a, const QPoint& b);

std::pair<Rat, Rat> project_pi_q(const QPoint& x);

struct MinSetQ {
    long m = 2;
    Parity par = Parity::Even;
    std::vector<QPoint> pts;
    bool infinite = false;

    std::string str() const;
};

MinSetQ minima_q(long m, Parity par, const std::vector<QPoint>& generators);
MinSetQ minset_to_q(const MinSetN& s, Parity par);
MinSetQ minset_shift(const MinSetQ& s, const std::vector<Rat>& d);
bool minset_q_eq(const MinSetQ& a, const MinSetQ& b);

std::optional<QPoint> q_join(const MinSetQ& s);
std::optional<QPoint> q_meet(const MinSetQ& s);

}  // namespace equik::lattice
