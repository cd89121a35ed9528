#pragma once

// Spectrum classes (X, a, b) with stable k-invariants in Q^m_*, the kappa
// invariants built from them, and the catalogs: Seiberg-Witten Floer model
// spaces of the Brieskorn family +-Sigma(2,3,6n+-1) under the cyclic
// actions rho_m and the conjugation involution iota_c, plus the knot
// invariants obtained through double branched covers.

#include <optional>
#include <string>

#include "equik/swfspace.hpp"

namespace equik::spectra {

using lattice::MinSetQ;
using lattice::Parity;
using lattice::QPoint;

struct SpectrumClass {
    swfspace::ModelSpace space;
    std::vector<long> a;    // symmetric C-shift (only moves the level)
    std::vector<Rat> bvec;  // rational H-desuspension, slot indexed like t
};

std::vector<Rat> level_q(const SpectrumClass& sc);

// f_Q(k(X)) - [D*(b)] in Q^m_*.
MinSetQ stable_k(const SpectrumClass& sc);

// K = 2 * k^st; the kappa antichain.
MinSetQ kappa_set(const SpectrumClass& sc);

struct KappaWedge {
    MinSetQ set;  // exact when `exact`, otherwise the smash lower obligation
    bool exact = false;
};

KappaWedge kappa_wedge_set(const SpectrumClass& sc);

// The grading of the unique element of K; m = 2 odd only.
Rat kappa_tilde(const SpectrumClass& sc);

enum class BrieskornFamily { M1, M5, P1, P5 };  // 12n-1, 12n-5, 12n+1, 12n+5
enum class BrieskornAction { RhoM, IotaC };

struct BrieskornTag {
    BrieskornFamily family = BrieskornFamily::M1;
    bool positive = true;  // orientation
    long n = 1;            // the family parameter (number of irreducible pairs)
    BrieskornAction action = BrieskornAction::RhoM;
    long m = 2;                      // for rho_m
    std::vector<long> rot2;          // doubled rotation numbers (rho_m, optional)
    std::vector<int> signs;          // conjugation signs (iota_c, optional)
    std::optional<std::vector<Rat>> b_override;  // correction vector, else catalog
};

SpectrumClass brieskorn_spectrum(const BrieskornTag& tag);

struct BrieskornRecord {
    Rat kappa;             // Manolescu kappa of the oriented sphere
    Rat kappa_tilde_rho2;  // = kappa
    Rat kappa_tilde_iotac; // = kappa
    Rat kappa_kmt_rho2;    // = -mu_bar / 2
    Rat kappa_kmt_iotac;   // = kappa / 2
    Rat mu_bar;            // Neumann-Siebenmann invariant
    Rat n_correction;      // n(Y, g) entering the model spectra
    bool lswfs = false;             // locally SWF-spherical
    bool swfs_jmu_rho2 = true;      // rho_2 is SWF-<j mu>-spherical, all families
    bool swfs_jmu_iotac = false;
    bool lswfs_jmu_iotac = false;
};

BrieskornRecord brieskorn_catalog(BrieskornFamily family, bool positive);

std::string family_name(BrieskornFamily f, bool positive, bool symbolic_n, long n = 1);

struct KnotRecord {
    std::string name;
    std::optional<long> signature;
    std::optional<long> g4;
    std::optional<Rat> kappa, kappa_tilde, kappa_kmt;
    std::optional<bool> lswfs2, swfs_jmu, lswfs_jmu, swfm_sharp;
};

// sigma(T(p,q)) by counting i/p + j/q against the half-turn window.
long torus_signature(long p, long q);

// Computed records for torus knots T(2, odd) and T(3, q) (q coprime to 6),
// including mirrors written mirror(...). Other names must come from a
// loaded table.
KnotRecord knot_invariants(const std::string& name);
std::vector<KnotRecord> load_knot_table(const std::string& csv_path);
std::optional<KnotRecord> lookup_knot(const std::string& name,
                                      const std::vector<KnotRecord>& table);

// kappa-additivity under connected sum inside LSWFS_2.
KnotRecord knot_sum(const KnotRecord& a, const KnotRecord& b);

}  // namespace equik::spectra
