#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equik/swfspace.hpp"

using namespace equik;
using namespace equik::swfspace;
using lattice::LatPoint;

namespace {

LatPoint e(long m, long i) {
    Vec v(m, 0);
    v[(i % m + m) % m] += 1;
    return LatPoint(m, v);
}

MinSetN kset(const ModelSpace& x) { return k_invariants(x); }

bool has_point(const MinSetN& s, const LatPoint& p) {
    return std::find(s.pts.begin(), s.pts.end(), p) != s.pts.end();
}

}  // namespace

TEST_CASE("base point and representation spheres") {
    auto s = kset(s0(3, Parity::Even));
    REQUIRE(s.pts.size() == 1);
    CHECK(s.pts[0] == LatPoint(3, {0, 0, 0}));

    // k((sC + tH)^+) = {[D*(t)]}
    auto r = rep_sphere(3, Parity::Even, {2, 1, 1}, {0, 2, 0});
    auto kr = kset(r);
    REQUIRE(kr.pts.size() == 1);
    CHECK(kr.pts[0] == LatPoint(3, {0, 0, 2}));  // e_1 doubles to e_2

    auto ro = rep_sphere(2, Parity::Odd, {0, 0}, {1, 0});
    auto kro = kset(ro);
    REQUIRE(kro.pts.size() == 1);
    CHECK(kro.pts[0] == e(2, 1));  // e_{1/2} doubles to e_1
    CHECK(kg_split(r));
    CHECK(kg_split(ro));
}

TEST_CASE("coset suspensions") {
    for (long m : {3L, 5L, 7L}) {
        for (long a = 0; a <= m / 2; ++a) {
            auto x = susp_coset(m, Parity::Even, {2 * a});
            auto k = kset(x);
            CHECK(has_point(k, e(m, 0)));
            if (a != 0) {
                CHECK(has_point(k, e(m, 2 * a)));
                CHECK(has_point(k, e(m, m - 2 * a)));
            }
        }
    }
    // mixed weights with no common +-a: only (w_0)
    auto x = susp_coset(5, Parity::Even, {2, 4});
    auto k = kset(x);
    REQUIRE(k.pts.size() == 1);
    CHECK(k.pts[0] == e(5, 0));

    // m = 2 odd: always {[e_0], [e_1]}
    auto xo = susp_coset(2, Parity::Odd, {1, 3, 1});
    auto ko = kset(xo);
    CHECK(ko.pts.size() == 2);
    CHECK(has_point(ko, e(2, 0)));
    CHECK(has_point(ko, e(2, 1)));

    auto xj = susp_coset_j({1, -1});
    auto kj = kset(xj);
    REQUIRE(kj.pts.size() == 1);
    CHECK(kj.pts[0] == e(2, 1));
}

TEST_CASE("torus suspensions") {
    // T_{0,p}: ideal (w_0, z_0), k = {[e_0]}
    for (long p : {3L, 5L}) {
        auto x = susp_torus(p, Parity::Even, 0);
        auto d = ideal_of(x);
        REQUIRE(d.gens.size() == 2);
        auto k = kset(x);
        REQUIRE(k.pts.size() == 1);
        CHECK(k.pts[0] == e(p, 0));

        // T_{p/2, p} odd parity: (w_0, z_{p/2})
        auto xo = susp_torus(p, Parity::Odd, p);
        auto ko = kset(xo);
        REQUIRE(ko.pts.size() == 1);
        CHECK(ko.pts[0] == e(p, 0));

        // generic a: the augmentation ideal, k = all e_k
        auto xg = susp_torus(p, Parity::Even, 2);
        auto kg = kset(xg);
        CHECK((long)kg.pts.size() == p);
    }
    // T_{+-j}: (z_{1/2}, z_{3/2}), k = {[e_1]}
    auto xj = susp_torus_j(+1);
    auto d = ideal_of(xj);
    REQUIRE(d.gens.size() == 2);
    auto kj = kset(xj);
    REQUIRE(kj.pts.size() == 1);
    CHECK(kj.pts[0] == e(2, 1));
    // T_{1/2,2}: d = 2, odd case: (w_1, z_{1/2}, z_{3/2})
    auto xt = susp_torus(2, Parity::Odd, 1);
    auto kt = kset(xt);
    REQUIRE(kt.pts.size() == 1);
    CHECK(kt.pts[0] == e(2, 1));
}

TEST_CASE("dual family for odd primes") {
    for (long p : {3L, 5L}) {
        std::vector<long> a2{0, 2};  // one trivial weight, one generic
        auto x = dual_wedge(p, Parity::Even, a2);
        auto k = kset(x);
        long n = 2, n0 = 1;
        // pi-projected invariants: {(k, n-k) : n0 <= k <= n}
        std::vector<std::pair<long, long>> projected;
        for (const LatPoint& pt : k.pts) {
            auto pr = lattice::project_pi(pt);
            if (std::find(projected.begin(), projected.end(), pr) == projected.end())
                projected.push_back(pr);
        }
        CHECK((long)projected.size() == n - n0 + 1);
        for (auto [k0, k1] : projected) {
            CHECK(k0 >= n0);
            CHECK(k0 + k1 == n);
        }
    }
    // m = 2 odd: only the grading is exposed
    auto x2 = dual_wedge(2, Parity::Odd, {1, 3, 3});
    CHECK(dual_wedge_grading(x2) == 3);
    CHECK_THROWS(k_invariants(x2));
}

TEST_CASE("projected invariant tables for coset spaces") {
    for (long p : {3L, 5L, 7L}) {
        for (long a2 = 0; a2 <= p; ++a2) {
            if ((a2 % 2) != 0) continue;  // even parity weights
            auto x = susp_coset(p, Parity::Even, {a2});
            auto k = kset(x);
            std::vector<std::pair<long, long>> projected;
            for (const LatPoint& pt : k.pts) {
                auto pr = lattice::project_pi(pt);
                if (std::find(projected.begin(), projected.end(), pr) == projected.end())
                    projected.push_back(pr);
            }
            bool trivial = (a2 % (2 * p) == 0) || (a2 == p);
            if (trivial) {
                REQUIRE(projected.size() == 1);
                CHECK(projected[0] == std::make_pair(1L, 0L));
            } else {
                CHECK(projected.size() == 2);
                CHECK(std::find(projected.begin(), projected.end(), std::make_pair(1L, 0L)) !=
                      projected.end());
                CHECK(std::find(projected.begin(), projected.end(), std::make_pair(0L, 1L)) !=
                      projected.end());
            }
        }
    }
}

TEST_CASE("suspension rule") {
    // m=3 even: {[0]} + H_1 -> {[e_2]}
    auto base = kset(s0(3, Parity::Even));
    auto s = suspend_rule(base, Parity::Even, 1);
    REQUIRE(s.pts.size() == 1);
    CHECK(s.pts[0] == e(3, 2));
    // C-type suspensions leave k alone
    auto x = susp_coset(3, Parity::Even, {2});
    auto lhs = kset(suspend(x, {1, 1, 1}, {0, 0, 0}));
    CHECK(lattice::minset_eq(lhs, kset(x)));
    // H-type: k shifts by the doubled slot
    auto rhs = kset(suspend(x, {0, 0, 0}, {0, 1, 0}));
    CHECK(lattice::minset_eq(rhs, suspend_rule(kset(x), Parity::Even, 1)));
    // every catalog space obeys the law
    for (long slot = 0; slot < 3; ++slot) {
        for (const ModelSpace& y :
             {susp_torus(3, Parity::Even, 2), susp_coset(3, Parity::Even, {0}),
              rep_sphere(3, Parity::Even, {0, 0, 0}, {1, 0, 1})}) {
            auto via_space = kset(suspend(y, {0, 0, 0}, [&] {
                Vec t(3, 0);
                t[slot] = 1;
                return t;
            }()));
            auto via_rule = suspend_rule(kset(y), Parity::Even, slot);
            CHECK(lattice::minset_eq(via_space, via_rule));
        }
    }
    MinSetN empty;
    empty.m = 3;
    empty.infinite = true;
    CHECK(suspend_rule(empty, Parity::Even, 1).infinite);
}

TEST_CASE("smash bounds") {
    auto a = rep_sphere(2, Parity::Odd, {0, 0}, {1, 0});
    auto b = rep_sphere(2, Parity::Odd, {0, 0}, {0, 2});
    auto sb = smash_bound(kset(a), kset(b), kg_split(a) || kg_split(b));
    CHECK(sb.exact);
    REQUIRE(sb.lower_obligation.pts.size() == 1);
    CHECK(sb.lower_obligation.pts[0] == LatPoint(2, {0, 3}));

    // with S0 the bound is the identity
    auto x = susp_coset(3, Parity::Even, {2});
    auto sb2 = smash_bound(kset(x), kset(s0(3, Parity::Even)), true);
    CHECK(lattice::minset_eq(sb2.lower_obligation, kset(x)));

    // m = 2 odd: {[e_0],[e_1]} smashed with itself collapses stably
    auto z = susp_coset(2, Parity::Odd, {1});
    auto sb3 = smash_bound(kset(z), kset(z), false);
    for (size_t i = 1; i < sb3.lower_obligation.pts.size(); ++i)
        CHECK(lattice::lat_st_eq(sb3.lower_obligation.pts[0], sb3.lower_obligation.pts[i],
                                 lattice::Parity::Odd));
}

TEST_CASE("duality inequalities") {
    // Z_{a,m} dual to T_{a,m} with V = H_a
    for (long m : {3L, 4L, 5L}) {
        for (long a = 0; a < m; ++a) {
            auto z = susp_coset(m, Parity::Even, {2 * a});
            auto t = susp_torus(m, Parity::Even, 2 * a);
            Vec tv(m, 0);
            tv[a] = 1;
            CHECK(duality_check(kset(z), kset(t), Parity::Even, tv));
        }
    }
    // S0 self-dual with t = 0
    auto s = kset(s0(3, Parity::Even));
    CHECK(duality_check(s, s, Parity::Even, {0, 0, 0}));
    // Z_{+-j} dual to T_{+-j} with H_{1/2}
    auto zj = kset(susp_coset_j({1}));
    auto tj = kset(susp_torus_j(1));
    CHECK(duality_check(zj, tj, Parity::Odd, {1, 0}));
}

TEST_CASE("membership certificates") {
    CHECK(verify_certificates(s0(4, Parity::Even)));
    for (long m : {2L, 3L, 4L, 5L, 7L}) {
        for (long a2 = 0; a2 < 2 * m; ++a2) {
            if (a2 % 2 != 0) continue;
            CHECK(verify_certificates(susp_coset(m, Parity::Even, {a2})));
            CHECK(verify_certificates(susp_torus(m, Parity::Even, a2)));
        }
        for (long a2 = 1; a2 < 2 * m; a2 += 2) {
            CHECK(verify_certificates(susp_coset(m, Parity::Odd, {a2})));
            CHECK(verify_certificates(susp_torus(m, Parity::Odd, a2)));
        }
    }
    CHECK(verify_certificates(susp_coset_j({1, -1})));
    CHECK(verify_certificates(susp_torus_j(-1)));
    CHECK(verify_certificates(dual_wedge(3, Parity::Even, {0, 2})));
    CHECK(verify_certificates(rep_sphere(3, Parity::Even, {0, 0, 0}, {1, 2, 0})));
}

TEST_CASE("wedges drop free summands") {
    auto x = susp_coset(3, Parity::Even, {2});
    auto w = wedge(x, 5);
    CHECK(lattice::minset_eq(kset(w), kset(x)));
}
