#include "equik/spectra.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equik::spectra {

namespace {

using swfspace::ModelSpace;
using swfspace::SpaceTag;

lattice::Parity lat_par(Parity p) { return p; }

std::vector<Rat> dfold_b(const SpectrumClass& sc) {
    return lattice::dfold(lat_par(sc.space.par), sc.bvec, sc.space.m);
}

bool grading_only(const ModelSpace& x) {
    return x.tag == SpaceTag::DualWedge && x.m == 2;
}

}  // namespace

std::vector<Rat> level_q(const SpectrumClass& sc) {
    std::vector<long> lv = swfspace::level_of(sc.space);
    std::vector<Rat> out;
    for (long i = 0; i < (long)lv.size(); ++i) out.emplace_back(lv[i] - sc.a[i]);
    return out;
}

MinSetQ stable_k(const SpectrumClass& sc) {
    long m = sc.space.m;
    Parity par = sc.space.par;
    std::vector<Rat> shift = dfold_b(sc);
    for (auto& q : shift) q = -q;
    if (grading_only(sc.space)) {
        // Q^2_odd is the grading line; the dual family sits at grade n
        std::vector<Rat> rep(m, Rat(0));
        rep[1] = Rat(swfspace::dual_wedge_grading(sc.space));
        MinSetQ s;
        s.m = m;
        s.par = par;
        s.pts.push_back(QPoint(m, par, rep).shifted(shift));
        return s;
    }
    lattice::MinSetN kn = swfspace::k_invariants(sc.space);
    MinSetQ kq = lattice::minset_to_q(kn, par);
    kq = lattice::minset_shift(kq, shift);
    // re-minimize: the rational quotient can identify previously distinct
    // minima (e.g. the m = 2 odd grading line)
    return lattice::minima_q(m, par, kq.pts);
}

MinSetQ kappa_set(const SpectrumClass& sc) {
    MinSetQ s = stable_k(sc);
    MinSetQ out = s;
    out.pts.clear();
    for (const QPoint& p : s.pts) out.pts.push_back(lattice::q_add(p, p));
    return out;
}

KappaWedge kappa_wedge_set(const SpectrumClass& sc) {
    KappaWedge out;
    bool split = !grading_only(sc.space) && swfspace::kg_split(sc.space);
    SpectrumClass doubled = sc;
    doubled.space = swfspace::smash(sc.space, sc.space);
    for (long i = 0; i < (long)doubled.a.size(); ++i) doubled.a[i] *= 2;
    for (auto& q : doubled.bvec) q *= 2;
    if (grading_only(sc.space)) {
        // grading is additive under smash
        std::vector<Rat> shift = dfold_b(doubled);
        for (auto& q : shift) q = -q;
        std::vector<Rat> rep(sc.space.m, Rat(0));
        rep[1] = Rat(2 * swfspace::dual_wedge_grading(sc.space));
        out.set.m = sc.space.m;
        out.set.par = sc.space.par;
        out.set.pts.push_back(QPoint(sc.space.m, sc.space.par, rep).shifted(shift));
        out.exact = true;
        return out;
    }
    out.set = stable_k(doubled);
    out.exact = split;
    return out;
}

Rat kappa_tilde(const SpectrumClass& sc) {
    if (sc.space.m != 2 || sc.space.par != Parity::Odd)
        throw std::invalid_argument("kappa_tilde: defined for m = 2 odd classes");
    MinSetQ k = kappa_set(sc);
    if (k.pts.size() != 1) throw std::logic_error("kappa_tilde: Q^2_odd must give a singleton");
    return k.pts[0].grade();
}

namespace {

struct FamilyData {
    Rat kappa_pos, kappa_neg;
    Rat mu_bar_pos;  // mu_bar(-Y) = -mu_bar(Y)
    Rat n_corr;      // n(Y, g) for the positive orientation
    bool lswfs;
    bool lswfs_jmu_iotac;
};

FamilyData family_data(BrieskornFamily f) {
    switch (f) {
        case BrieskornFamily::M1: return {Rat(2), Rat(0), Rat(0), Rat(0), false, false};
        case BrieskornFamily::M5: return {Rat(1), Rat(1), Rat(1), Rat(1), false, false};
        case BrieskornFamily::P1: return {Rat(0), Rat(0), Rat(0), Rat(0), true, true};
        case BrieskornFamily::P5: return {Rat(1), Rat(-1), Rat(-1), Rat(-1), true, true};
    }
    throw std::logic_error("family_data");
}

}  // namespace

BrieskornRecord brieskorn_catalog(BrieskornFamily family, bool positive) {
    FamilyData fd = family_data(family);
    BrieskornRecord r;
    r.kappa = positive ? fd.kappa_pos : fd.kappa_neg;
    r.kappa_tilde_rho2 = r.kappa;
    r.kappa_tilde_iotac = r.kappa;
    r.mu_bar = positive ? fd.mu_bar_pos : -fd.mu_bar_pos;
    r.kappa_kmt_rho2 = -r.mu_bar / 2;
    r.kappa_kmt_rho2.canonicalize();
    r.kappa_kmt_iotac = r.kappa / 2;
    r.kappa_kmt_iotac.canonicalize();
    r.n_correction = positive ? fd.n_corr : -fd.n_corr;
    r.lswfs = fd.lswfs;
    r.swfs_jmu_rho2 = true;
    r.swfs_jmu_iotac = false;  // never spherical for n >= 1
    r.lswfs_jmu_iotac = fd.lswfs_jmu_iotac;
    return r;
}

SpectrumClass brieskorn_spectrum(const BrieskornTag& tag) {
    FamilyData fd = family_data(tag.family);
    long m = (tag.action == BrieskornAction::RhoM) ? tag.m : 2;
    if (tag.n < 1) throw std::invalid_argument("brieskorn_spectrum: n >= 1");
    // default rotation data
    std::vector<long> rot2 = tag.rot2;
    if (rot2.empty()) rot2.assign(tag.n, 1);
    if ((long)rot2.size() != tag.n)
        throw std::invalid_argument("brieskorn_spectrum: need one rotation number per pair");
    std::vector<int> signs = tag.signs;
    if (signs.empty()) signs.assign(tag.n, 1);
    if ((long)signs.size() != tag.n)
        throw std::invalid_argument("brieskorn_spectrum: need one sign per pair");

    bool minus_family = tag.family == BrieskornFamily::M1 || tag.family == BrieskornFamily::M5;
    Rat nY = fd.n_corr;

    SpectrumClass sc;
    sc.a.assign(m, 0);
    sc.bvec.assign(m, Rat(0));
    if (tag.b_override) {
        if ((long)tag.b_override->size() != m)
            throw std::invalid_argument("brieskorn_spectrum: correction vector length");
    }

    auto base_b = [&](bool negate) {
        // (1/2) n(Y, rho_m-hat): known in full only for m = 2, where the
        // involution formula gives the symmetric vector (n/4)(xi + xi^3)
        if (tag.b_override) {
            std::vector<Rat> b = *tag.b_override;
            if (negate)
                for (auto& q : b) q = -q;
            return b;
        }
        if (m != 2)
            throw std::invalid_argument(
                "brieskorn_spectrum: supply the correction vector for m > 2");
        std::vector<Rat> b(m, nY / 4);
        for (auto& q : b) {
            if (negate) q = -q;
            q.canonicalize();
        }
        return b;
    };

    if (tag.positive) {
        sc.bvec = base_b(false);
        if (minus_family) {
            if (tag.action == BrieskornAction::RhoM)
                sc.space = swfspace::susp_coset(m, Parity::Odd, rot2);
            else
                sc.space = swfspace::susp_coset_j(signs);
        } else {
            // locally (S^0, 0, b): the wedge of free cells drops out
            sc.space = swfspace::wedge(swfspace::s0(m, Parity::Odd), tag.n);
        }
        return sc;
    }
    // negative orientation
    sc.bvec = base_b(true);
    if (minus_family) {
        // add one H_{r_k} slot per irreducible pair
        for (long k = 0; k < tag.n; ++k) {
            long slot;
            if (tag.action == BrieskornAction::RhoM)
                slot = ((rot2[k] % (2 * m) + 2 * m) % (2 * m) - 1) / 2;
            else
                slot = (signs[k] > 0) ? 0 : 1;
            sc.bvec[slot] += 1;
            sc.bvec[slot].canonicalize();
        }
        if (tag.action == BrieskornAction::RhoM)
            sc.space = swfspace::dual_wedge(m, Parity::Odd, rot2);
        else {
            std::vector<long> a2;
            for (int s : signs) a2.push_back(s > 0 ? 1 : 3);
            sc.space = swfspace::dual_wedge(2, Parity::Odd, a2);
        }
    } else {
        sc.space = swfspace::wedge(swfspace::s0(m, Parity::Odd), tag.n);
    }
    return sc;
}

std::string family_name(BrieskornFamily f, bool positive, bool symbolic_n, long n) {
    std::ostringstream os;
    if (!positive) os << "-";
    os << "Sigma(2,3,";
    std::string tail;
    switch (f) {
        case BrieskornFamily::M1: tail = symbolic_n ? "12n-1" : std::to_string(12 * n - 1); break;
        case BrieskornFamily::M5: tail = symbolic_n ? "12n-5" : std::to_string(12 * n - 5); break;
        case BrieskornFamily::P1: tail = symbolic_n ? "12n+1" : std::to_string(12 * n + 1); break;
        case BrieskornFamily::P5: tail = symbolic_n ? "12n+5" : std::to_string(12 * n + 5); break;
    }
    os << tail << ")";
    return os.str();
}

long torus_signature(long p, long q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_signature: need coprime p, q >= 2");
    long mid = 0, outer = 0;
    for (long i = 1; i < p; ++i) {
        for (long j = 1; j < q; ++j) {
            // t = i/p + j/q against (1/2, 3/2): compare 2(iq + jp) with pq, 3pq
            long v = 2 * (i * q + j * p);
            if (v > p * q && v < 3 * p * q)
                ++mid;
            else
                ++outer;
        }
    }
    return outer - mid;
}

namespace {

struct ParsedName {
    bool mirror = false;
    char kind = 'T';  // 'T' torus, 'k' pretzel
    long p = 0, q = 0;
};

std::optional<ParsedName> parse_name(const std::string& raw) {
    ParsedName pn;
    std::string s = raw;
    if (s.rfind("mirror(", 0) == 0 && s.back() == ')') {
        pn.mirror = true;
        s = s.substr(7, s.size() - 8);
    }
    long a = 0, b = 0, c = 0;
    if (std::sscanf(s.c_str(), "T(%ld,%ld)", &a, &b) == 2) {
        pn.kind = 'T';
        pn.p = a;
        pn.q = b;
        return pn;
    }
    if (std::sscanf(s.c_str(), "k(%ld,%ld,%ld)", &a, &b, &c) == 3 && a == 2 && b == 3) {
        pn.kind = 'k';
        pn.p = 3;
        pn.q = c;
        return pn;
    }
    return std::nullopt;
}

std::optional<std::pair<BrieskornFamily, long>> family_of_q(long q) {
    if (q % 12 == 11) return std::make_pair(BrieskornFamily::M1, (q + 1) / 12);
    if (q % 12 == 7) return std::make_pair(BrieskornFamily::M5, (q + 5) / 12);
    if (q % 12 == 1 && q >= 13) return std::make_pair(BrieskornFamily::P1, (q - 1) / 12);
    if (q % 12 == 5) return std::make_pair(BrieskornFamily::P5, (q - 5) / 12);
    return std::nullopt;
}

}  // namespace

KnotRecord knot_invariants(const std::string& name) {
    auto pn = parse_name(name);
    if (!pn) throw std::invalid_argument("knot_invariants: unknown name " + name);
    KnotRecord r;
    r.name = name;
    if (pn->kind == 'T' && pn->p == 2) {
        if (pn->q < 3 || pn->q % 2 == 0)
            throw std::invalid_argument("knot_invariants: T(2, q) needs odd q >= 3");
        long k = (pn->q - 1) / 2;
        long sig = torus_signature(2, pn->q);
        if (pn->mirror) sig = -sig;
        r.signature = sig;
        r.g4 = k;
        // two-bridge: the branched double cover is a lens space, so the
        // SWF-minimal values -sigma/8, -sigma/16 apply
        r.kappa = Rat(-sig, 8);
        r.kappa->canonicalize();
        r.kappa_tilde = r.kappa;
        r.kappa_kmt = Rat(-sig, 16);
        r.kappa_kmt->canonicalize();
        r.lswfs2 = true;
        r.swfs_jmu = true;
        r.lswfs_jmu = true;
        r.swfm_sharp = true;
        return r;
    }
    if (pn->p != 3) throw std::invalid_argument("knot_invariants: only T(2,*) and T(3,*) computed");
    if (pn->q == 5 && pn->kind == 'T') {
        // T(3,5): double branched cover is the Poincare sphere, SWF-minimal
        long sig = torus_signature(3, 5);
        if (pn->mirror) sig = -sig;
        r.signature = sig;
        r.g4 = 4;
        r.kappa = Rat(-sig, 8);
        r.kappa->canonicalize();
        r.kappa_tilde = r.kappa;
        r.kappa_kmt = Rat(-sig, 16);
        r.kappa_kmt->canonicalize();
        r.lswfs2 = true;
        r.swfs_jmu = true;
        r.lswfs_jmu = true;
        r.swfm_sharp = true;
        return r;
    }
    auto fam = family_of_q(pn->q);
    if (!fam) throw std::invalid_argument("knot_invariants: q must be coprime to 6");
    bool positive = !pn->mirror;  // Sigma_2 of the mirror is the reverse orientation
    BrieskornRecord br = brieskorn_catalog(fam->first, positive);
    if (pn->kind == 'T') {
        long sig = torus_signature(3, pn->q);
        if (pn->mirror) sig = -sig;
        r.signature = sig;
        r.g4 = pn->q - 1;
        r.kappa = br.kappa;
        r.kappa_tilde = br.kappa_tilde_rho2;
        r.kappa_kmt = br.kappa_kmt_rho2;
        r.lswfs2 = br.lswfs;
        r.swfs_jmu = true;
        r.lswfs_jmu = true;
        r.swfm_sharp = false;
    } else {
        // pretzel knots: the covering involution is iota_c; the signature
        // is not computed here
        r.kappa = br.kappa;
        r.kappa_tilde = br.kappa_tilde_iotac;
        r.kappa_kmt = br.kappa_kmt_iotac;
        r.lswfs2 = br.lswfs;
        r.swfs_jmu = false;
        r.lswfs_jmu = br.lswfs_jmu_iotac;
        r.swfm_sharp = false;
    }
    return r;
}

namespace {

std::optional<std::string> csv_field(std::stringstream& ss) {
    std::string f;
    if (!std::getline(ss, f, ',')) return std::nullopt;
    return f;
}

std::optional<Rat> opt_rat(const std::string& s) {
    if (s.empty() || s == "-") return std::nullopt;
    return parse_rat(s);
}

std::optional<long> opt_long(const std::string& s) {
    if (s.empty() || s == "-") return std::nullopt;
    return std::stol(s);
}

std::optional<bool> opt_flag(const std::string& s) {
    if (s.empty() || s == "-") return std::nullopt;
    return s == "Y" || s == "y" || s == "1";
}

}  // namespace

std::vector<KnotRecord> load_knot_table(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open knot table " + csv_path);
    std::vector<KnotRecord> out;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        KnotRecord r;
        auto name = csv_field(ss);
        if (!name) continue;
        r.name = *name;
        r.signature = opt_long(csv_field(ss).value_or(""));
        r.g4 = opt_long(csv_field(ss).value_or(""));
        r.kappa = opt_rat(csv_field(ss).value_or(""));
        r.kappa_tilde = opt_rat(csv_field(ss).value_or(""));
        r.kappa_kmt = opt_rat(csv_field(ss).value_or(""));
        r.lswfs2 = opt_flag(csv_field(ss).value_or(""));
        r.swfs_jmu = opt_flag(csv_field(ss).value_or(""));
        r.lswfs_jmu = opt_flag(csv_field(ss).value_or(""));
        r.swfm_sharp = opt_flag(csv_field(ss).value_or(""));
        out.push_back(r);
    }
    return out;
}

std::optional<KnotRecord> lookup_knot(const std::string& name,
                                      const std::vector<KnotRecord>& table) {
    for (const auto& r : table)
        if (r.name == name) return r;
    return std::nullopt;
}

KnotRecord knot_sum(const KnotRecord& a, const KnotRecord& b) {
    if (!(a.lswfs2 && *a.lswfs2 && b.lswfs2 && *b.lswfs2))
        throw std::invalid_argument("knot_sum: additivity needs both summands in LSWFS_2");
    KnotRecord r;
    r.name = a.name + " # " + b.name;
    if (a.signature && b.signature) r.signature = *a.signature + *b.signature;
    if (a.kappa && b.kappa) {
        r.kappa = *a.kappa + *b.kappa;
        r.kappa->canonicalize();
    }
    if (a.kappa_tilde && b.kappa_tilde) {
        r.kappa_tilde = *a.kappa_tilde + *b.kappa_tilde;
        r.kappa_tilde->canonicalize();
    }
    if (a.kappa_kmt && b.kappa_kmt) {
        r.kappa_kmt = *a.kappa_kmt + *b.kappa_kmt;
        r.kappa_kmt->canonicalize();
    }
    r.lswfs2 = true;
    if (a.lswfs_jmu && b.lswfs_jmu) r.lswfs_jmu = *a.lswfs_jmu && *b.lswfs_jmu;
    if (a.swfm_sharp && b.swfm_sharp) r.swfm_sharp = *a.swfm_sharp && *b.swfm_sharp;
    return r;
}

}  // namespace equik::spectra
