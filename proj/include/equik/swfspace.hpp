#pragma once

// The catalog of model spaces whose equivariant K-theory the paper pins
// down: representation spheres, unreduced suspensions of coset and torus
// quotients, their duals, and the wedge/smash/suspension calculus. Each
// space carries a monomially generated ideal description from which the
// k-invariant antichain in N^m is computed via w_0 z_c = w_0 w_{2c}.
//
// Half-integer indices are stored doubled: a2 = 2a, so even-parity data is
// even and odd-parity data is odd.

#include <memory>
#include <vector>

#include "equik/lattice.hpp"
#include "equik/repring.hpp"

namespace equik::swfspace {

using lattice::LatPoint;
using lattice::MinSetN;
using lattice::Parity;
using monomial::Vec;

enum class SpaceTag {
    S0,
    RepSphere,   // (sC + tH)^+
    SuspCoset,   // unreduced suspension of Z_{a_1,...,a_n;m}
    SuspCosetJ,  // Z_{eps_1 j, ..., eps_n j}, m = 2 odd
    SuspTorus,   // T_{a,m}
    SuspTorusJ,  // T_{+-j}, m = 2 odd
    DualWedge,   // X_{a_1,...,a_n;m}, the dual family
    Wedge,       // main factor plus free summands (which drop out)
    Smash,
    Suspend,
};

struct ModelSpace {
    SpaceTag tag = SpaceTag::S0;
    long m = 2;
    Parity par = Parity::Even;

    std::vector<long> s;       // RepSphere / Suspend: C-part exponents
    std::vector<long> t;       // RepSphere / Suspend: H-part exponents (index = z slot)
    std::vector<long> a2;      // SuspCoset / SuspTorus / DualWedge: doubled weights
    std::vector<int> signs;    // SuspCosetJ
    int jsign = 1;             // SuspTorusJ
    long free_summands = 0;    // Wedge
    std::vector<std::shared_ptr<ModelSpace>> children;  // Wedge main / Smash / Suspend
};

ModelSpace s0(long m, Parity par);
ModelSpace rep_sphere(long m, Parity par, Vec s, Vec t);
ModelSpace susp_coset(long m, Parity par, std::vector<long> a2);
ModelSpace susp_coset_j(std::vector<int> signs);
ModelSpace susp_torus(long m, Parity par, long a2);
ModelSpace susp_torus_j(int sign);
ModelSpace dual_wedge(long m, Parity par, std::vector<long> a2);
ModelSpace wedge(ModelSpace main, long free_summands);
ModelSpace smash(ModelSpace a, ModelSpace b);
ModelSpace suspend(ModelSpace x, Vec s, Vec t);

// One monomial generator w^{wexp} z^{zexp}; z slot c means z_c (even
// parity) or z_{c+1/2} (odd parity).
struct Generator {
    Vec wexp, zexp;
};

struct IdealDesc {
    long m = 2;
    Parity par = Parity::Even;
    std::vector<Generator> gens;
};

// The tabulated ideal. DualWedge is exact for odd primes; m = 2 odd
// exposes only the k-grading (see dual_wedge_grading).
IdealDesc ideal_of(const ModelSpace& x);

std::vector<long> level_of(const ModelSpace& x);  // symmetric C-level

// The lattice image of a monomial generator: w_0 g = w^{v + e_0}.
LatPoint generator_point(const IdealDesc& ideal, const Generator& g);

MinSetN k_invariants(const ModelSpace& x);

// Every element of k(X_{a;2}) has this grading in the m = 2 odd dual case.
long dual_wedge_grading(const ModelSpace& x);

// k(Sigma^{H_k} X) = k(X) + [e_{2k}]; C-type suspensions act trivially.
MinSetN suspend_rule(const MinSetN& k, Parity par, long zslot);

struct SmashBound {
    MinSetN lower_obligation;  // min(k1 + k2)
    bool exact = false;
};

SmashBound smash_bound(const MinSetN& k1, const MinSetN& k2, bool either_split);

bool kg_split(const ModelSpace& x);

// k + k' >= [D*(t)] for all pairs; the duality inequality.
bool duality_check(const MinSetN& k1, const MinSetN& k2, Parity par, const Vec& t);

// Re-derives each minimal element's ring identity w_0 g = w^{v+e_0} in
// canonical form. Returns false if any certificate fails.
bool verify_certificates(const ModelSpace& x);

}  // namespace equik::swfspace
