#include "equik/gspin.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equik::gspin {

namespace {

long lift_sign(Parity p) { return p == Parity::Even ? 1 : -1; }

// csc at half the angle 2*pi*t.num/t.den, i.e. csc(pi*t.num/t.den)
CycNum csc_half(const Turn& t) { return csc_pi(t.num, t.den); }
CycNum cot_half(const Turn& t) { return cot_pi(t.num, t.den); }

}  // namespace

CharVector s_characters(const FixedPointData& d) {
    long m = d.m;
    CharVector out;
    out.m = m;
    out.lift = d.lift;
    out.chars.assign(2 * m, CycNum(0));
    out.chars[0] = CycNum(d.sigma);
    out.chars[m] = CycNum(d.sigma * lift_sign(d.lift));
    for (const IsolatedPoint& p : d.isolated) {
        if (p.k <= 0 || p.k >= 2 * m || p.k == m)
            throw std::invalid_argument("isolated point at an invalid mu-power");
        CycNum r = csc_half(p.alpha) * csc_half(p.beta);
        out.chars[p.k] += CycNum(2 * p.sign) * r;
    }
    for (const SurfaceComponent& s : d.surfaces) {
        if (s.k <= 0 || s.k >= 2 * m || s.k == m)
            throw std::invalid_argument("surface at an invalid mu-power");
        CycNum sv = cot_half(s.psi) * csc_half(s.psi);
        out.chars[s.k] += CycNum(2 * s.sign * s.self_int) * sv;
    }
    return out;
}

std::vector<Rat> char_to_vector(const CharVector& c) {
    long m = c.m;
    std::vector<Rat> out(m, Rat(0));
    for (long j = 0; j < m; ++j) {
        long idx = (c.lift == Parity::Even) ? 2 * j : 2 * j + 1;
        CycNum acc(0);
        for (long k = 0; k < 2 * m; ++k)
            acc += c.chars[k] * CycNum::root(2 * m, -idx * k);
        acc *= CycNum(Rat(1, 2 * m));
        auto q = acc.as_rational();
        if (!q) throw std::domain_error("char_to_vector: component is not rational");
        out[j] = *q;
    }
    return out;
}

CharVector vector_to_char(long m, Parity lift, const std::vector<Rat>& v) {
    if ((long)v.size() != m) throw std::invalid_argument("vector_to_char: wrong length");
    CharVector out;
    out.m = m;
    out.lift = lift;
    out.chars.assign(2 * m, CycNum(0));
    for (long k = 0; k < 2 * m; ++k) {
        CycNum acc(0);
        for (long j = 0; j < m; ++j) {
            long idx = (lift == Parity::Even) ? 2 * j : 2 * j + 1;
            acc += CycNum(v[j]) * CycNum::root(2 * m, idx * k);
        }
        out.chars[k] = acc;
    }
    return out;
}

std::vector<Rat> frakS_vector(const FixedPointData& d) {
    std::vector<Rat> v = char_to_vector(s_characters(d));
    return lattice::dfold(d.lift == Parity::Even ? lattice::Parity::Even : lattice::Parity::Odd, v,
                          d.m);
}

FixedPointData spin_flip(const FixedPointData& d) {
    // The opposite lift multiplies characters by xi^m. For odd m this also
    // swaps the parity of the lift; for even m the parity is unchanged
    // since (-t)^m = t^m.
    FixedPointData out = d;
    if (d.m % 2 != 0) out.lift = (d.lift == Parity::Even) ? Parity::Odd : Parity::Even;
    for (auto& p : out.isolated)
        if (p.k % 2 != 0) p.sign = -p.sign;
    for (auto& s : out.surfaces)
        if (s.k % 2 != 0) s.sign = -s.sign;
    return out;
}

Correction correction_from_filling(const std::vector<Int>& spin_coeffs,
                                   const FixedPointData& d) {
    long m = d.m;
    if ((long)spin_coeffs.size() != 2 * m)
        throw std::invalid_argument("correction: spin coefficients must have length 2m");
    // parity-matching support and symmetry c_k = c_{2m-k}
    for (long k = 0; k < 2 * m; ++k) {
        if (spin_coeffs[k] == 0) continue;
        bool even_idx = (k % 2 == 0);
        if (even_idx != (d.lift == Parity::Even))
            throw std::invalid_argument("correction: spin support does not match the lift");
        if (spin_coeffs[k] != spin_coeffs[(2 * m - k) % (2 * m)])
            throw std::invalid_argument("correction: spin representation must be symmetric");
    }
    CharVector s = s_characters(d);
    Correction out;
    out.chars.m = m;
    out.chars.lift = d.lift;
    out.chars.chars.assign(2 * m, CycNum(0));
    for (long k = 0; k < 2 * m; ++k) {
        CycNum spin_chr(0);
        for (long j = 0; j < 2 * m; ++j) {
            if (spin_coeffs[j] == 0) continue;
            spin_chr += CycNum(Rat(spin_coeffs[j])) * CycNum::root(2 * m, j * k);
        }
        out.chars.chars[k] = spin_chr + CycNum(Rat(1, 8)) * s.chars[k];
    }
    out.vec = char_to_vector(out.chars);
    return out;
}

std::vector<Parity> classify_spin_lift_parity(int manifold_dim, long m,
                                              const std::vector<int>& fixed_set_dims,
                                              std::optional<bool> quotient_spin) {
    if (manifold_dim != 3 && manifold_dim != 4)
        throw std::invalid_argument("classify: dimension must be 3 or 4");
    if (m % 2 == 1) return {Parity::Even, Parity::Odd};
    if (fixed_set_dims.empty()) {
        if (!quotient_spin)
            throw std::invalid_argument(
                "classify: free half-turn needs the quotient spin-structure flag");
        return {*quotient_spin ? Parity::Even : Parity::Odd};
    }
    if (manifold_dim == 3) {
        for (int dim : fixed_set_dims)
            if (dim != 1) throw std::invalid_argument("classify: 3-manifold fixed sets are curves");
        return {Parity::Odd};
    }
    bool all0 = true, all2 = true;
    for (int dim : fixed_set_dims) {
        if (dim != 0) all0 = false;
        if (dim != 2) all2 = false;
        if (dim != 0 && dim != 2)
            throw std::invalid_argument("classify: 4-manifold fixed sets have dimension 0 or 2");
    }
    if (all0) return {Parity::Even};
    if (all2) return {Parity::Odd};
    throw std::invalid_argument("classify: mixed fixed-set dimensions are inconsistent");
}

FixedPointData filling_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FixedPointData d;
    d.m = j.at("m").get<long>();
    std::string par = j.at("parity").get<std::string>();
    if (par != "even" && par != "odd") throw std::invalid_argument("parity must be even|odd");
    d.lift = (par == "even") ? Parity::Even : Parity::Odd;
    if (j.at("sigma").is_number_integer())
        d.sigma = Rat(j.at("sigma").get<long>());
    else
        d.sigma = parse_rat(j.at("sigma").get<std::string>());
    if (j.contains("isolated")) {
        for (const auto& e : j.at("isolated")) {
            IsolatedPoint p;
            p.k = e.at("k").get<long>();
            p.alpha = {e.at("alpha").at(0).get<long>(), e.at("alpha").at(1).get<long>()};
            p.beta = {e.at("beta").at(0).get<long>(), e.at("beta").at(1).get<long>()};
            p.sign = e.at("sign").get<int>();
            d.isolated.push_back(p);
        }
    }
    if (j.contains("surfaces")) {
        for (const auto& e : j.at("surfaces")) {
            SurfaceComponent s;
            s.k = e.at("k").get<long>();
            s.self_int = e.at("self_int").get<long>();
            s.psi = {e.at("psi").at(0).get<long>(), e.at("psi").at(1).get<long>()};
            s.sign = e.at("sign").get<int>();
            d.surfaces.push_back(s);
        }
    }
    return d;
}

std::string filling_to_json(const FixedPointData& d) {
    nlohmann::json j;
    j["m"] = d.m;
    j["parity"] = d.lift == Parity::Even ? "even" : "odd";
    j["sigma"] = rat_str(d.sigma);
    j["isolated"] = nlohmann::json::array();
    for (const auto& p : d.isolated)
        j["isolated"].push_back({{"k", p.k},
                                 {"alpha", {p.alpha.num, p.alpha.den}},
                                 {"beta", {p.beta.num, p.beta.den}},
                                 {"sign", p.sign}});
    j["surfaces"] = nlohmann::json::array();
    for (const auto& s : d.surfaces)
        j["surfaces"].push_back({{"k", s.k},
                                 {"self_int", s.self_int},
                                 {"psi", {s.psi.num, s.psi.den}},
                                 {"sign", s.sign}});
    return j.dump(2);
}

std::vector<Int> spin_coeffs_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Int> out;
    if (!j.contains("spin_chars")) return out;
    for (const auto& e : j.at("spin_chars")) out.emplace_back(e.get<long>());
    return out;
}

FixedPointData random_fixed_point_data(long m, Parity lift, std::mt19937& rng) {
    // Base components are fixed by tau^e for e | m, e < m; their angles at
    // mu^k scale linearly in k, matching honest equivariant geometry. This
    // makes the characters Galois-natural, which is what drives rationality.
    FixedPointData d;
    d.m = m;
    d.lift = lift;
    d.sigma = Rat((long)(rng() % 17) - 8);
    long want = 1 + (long)(rng() % 3);
    std::vector<long> divisors;
    for (long e = 1; e < m; ++e)
        if (m % e == 0) divisors.push_back(e);
    long eps = lift_sign(lift);
    for (long comp = 0; comp < want; ++comp) {
        long e = divisors[rng() % divisors.size()];
        long sub = m / e;  // order of the stabilizer action
        if (sub < 2) continue;
        std::vector<long> units;
        for (long c = 1; c < sub; ++c)
            if (std::gcd(c, sub) == 1) units.push_back(c);
        bool isolated = (rng() % 2) == 0;
        int sign = (rng() % 2) ? 1 : -1;
        if (isolated) {
            // parity constraint (-1)^{c+cd} = eps
            std::vector<std::pair<long, long>> ok;
            for (long c : units)
                for (long cd : units)
                    if (((c + cd) % 2 == 0 ? 1 : -1) == eps) ok.emplace_back(c, cd);
            if (ok.empty()) {
                isolated = false;
            } else {
                auto [c, cd] = ok[rng() % ok.size()];
                for (long k = 1; k < 2 * m; ++k) {
                    if (k == m || k % e != 0) continue;
                    long kk = k / e;
                    d.isolated.push_back(IsolatedPoint{k, Turn{kk * c, sub}, Turn{kk * cd, sub},
                                                       sign});
                }
                continue;
            }
        }
        // surface component: (-1)^c = eps
        std::vector<long> ok;
        for (long c : units)
            if ((c % 2 == 0 ? 1 : -1) == eps) ok.push_back(c);
        if (ok.empty()) continue;
        long c = ok[rng() % ok.size()];
        long self_int = (long)(rng() % 9) - 4;
        for (long k = 1; k < 2 * m; ++k) {
            if (k == m || k % e != 0) continue;
            long kk = k / e;
            d.surfaces.push_back(SurfaceComponent{k, self_int, Turn{kk * c, sub}, sign});
        }
    }
    return d;
}

}  // namespace equik::gspin
