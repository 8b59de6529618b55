#include "syzmf/toric.hpp"

#include <algorithm>
#include <map>

namespace syzmf {

Surface surface_from_string(const std::string& name) {
    static const std::map<std::string, Surface> table = {
        {"p1", Surface::P1},       {"p2", Surface::P2},       {"p1xp1", Surface::P1xP1},
        {"bl1p2", Surface::Bl1P2}, {"bl2p2", Surface::Bl2P2},
    };
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto it = table.find(lower);
    if (it == table.end()) throw std::invalid_argument("unknown surface '" + name + "'");
    return it->second;
}

std::string surface_name(Surface s) {
    switch (s) {
        case Surface::P1: return "p1";
        case Surface::P2: return "p2";
        case Surface::P1xP1: return "p1xp1";
        case Surface::Bl1P2: return "bl1p2";
        case Surface::Bl2P2: return "bl2p2";
    }
    throw std::logic_error("unreachable");
}

PolytopeData surface_catalogue(Surface s, const std::vector<Rational>& sizes) {
    const auto size_or = [&sizes](std::size_t i, const Rational& fallback) {
        return i < sizes.size() ? sizes[i] : fallback;
    };
    PolytopeData pd;
    pd.name = surface_name(s);
    switch (s) {
        case Surface::P1:
            pd.n = 1;
            pd.facets = {{{1}, Rational(0)}, {{-1}, Rational(1)}};
            break;
        case Surface::P2:
            pd.n = 2;
            pd.facets = {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(1)}};
            break;
        case Surface::P1xP1: {
            const Rational rho = size_or(0, Rational(1));
            if (rho <= 0) throw std::invalid_argument("second factor size must be positive");
            pd.n = 2;
            pd.facets = {{{1, 0}, Rational(0)},
                         {{-1, 0}, Rational(1)},
                         {{0, 1}, Rational(0)},
                         {{0, -1}, rho}};
            break;
        }
        case Surface::Bl1P2: {
            const Rational rho = size_or(0, Rational(1, 3));
            if (rho <= 0 || rho >= 1) throw std::invalid_argument("blowup size must satisfy 0 < t' < t");
            pd.n = 2;
            pd.facets = {{{1, 0}, Rational(0)},
                         {{0, 1}, Rational(0)},
                         {{-1, -1}, Rational(1)},
                         {{-1, 0}, Rational(1) - rho}};
            break;
        }
        case Surface::Bl2P2: {
            const Rational r1 = size_or(0, Rational(1, 4));
            const Rational r2 = size_or(1, Rational(1, 4));
            if (r1 <= 0 || r2 <= 0 || r1 + r2 >= 1) {
                throw std::invalid_argument("blowup sizes must be positive with t1' + t2' < t");
            }
            pd.n = 2;
            pd.facets = {{{1, 0}, Rational(0)},
                         {{0, 1}, Rational(0)},
                         {{-1, -1}, Rational(1)},
                         {{-1, 0}, Rational(1) - r1},
                         {{0, -1}, Rational(1) - r2}};
            break;
        }
    }
    return pd;
}

LaurentPoly superpotential(const PolytopeData& pd) {
    LaurentPoly w(pd.n);
    for (const auto& facet : pd.facets) {
        w += LaurentPoly::term(pd.n, Rational(1), facet.offset_t, facet.normal);
    }
    return w;
}

namespace {

// Solves the 2x2 rational system given by two facet equalities.
bool facet_intersection(const Facet& a, const Facet& b, std::vector<Rational>& out) {
    const Rational det = Rational(a.normal[0]) * b.normal[1] - Rational(a.normal[1]) * b.normal[0];
    if (det == 0) return false;
    const Rational ra = -a.offset_t, rb = -b.offset_t;
    out = {(ra * b.normal[1] - Rational(a.normal[1]) * rb) / det,
           (Rational(a.normal[0]) * rb - ra * b.normal[0]) / det};
    return true;
}

bool satisfies_all(const PolytopeData& pd, const std::vector<Rational>& x) {
    for (const auto& facet : pd.facets) {
        Rational dot(0);
        for (int i = 0; i < pd.n; ++i) dot += Rational(facet.normal[i]) * x[i];
        if (dot < -facet.offset_t) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<Rational>> polytope_vertices(const PolytopeData& pd) {
    std::vector<std::vector<Rational>> verts;
    if (pd.n == 1) {
        Rational lo, hi;
        bool have_lo = false, have_hi = false;
        for (const auto& facet : pd.facets) {
            if (facet.normal[0] > 0) {
                lo = -facet.offset_t;
                have_lo = true;
            } else if (facet.normal[0] < 0) {
                hi = facet.offset_t;
                have_hi = true;
            }
        }
        if (!have_lo || !have_hi || lo >= hi) throw std::invalid_argument("interval is unbounded or empty");
        return {{lo}, {hi}};
    }
    if (pd.n != 2) throw std::invalid_argument("vertex enumeration only implemented for n <= 2");

    for (std::size_t i = 0; i < pd.facets.size(); ++i) {
        for (std::size_t j = i + 1; j < pd.facets.size(); ++j) {
            std::vector<Rational> x;
            if (!facet_intersection(pd.facets[i], pd.facets[j], x)) continue;
            if (!satisfies_all(pd, x)) continue;
            if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
        }
    }
    if (verts.size() < 3) throw std::invalid_argument("polytope is unbounded or degenerate");

    // Counterclockwise order around the vertex average, with exact comparisons.
    Rational cx(0), cy(0);
    for (const auto& v : verts) {
        cx += v[0];
        cy += v[1];
    }
    cx /= static_cast<int>(verts.size());
    cy /= static_cast<int>(verts.size());
    const auto half = [&](const std::vector<Rational>& v) {
        const Rational dx = v[0] - cx, dy = v[1] - cy;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(verts.begin(), verts.end(), [&](const auto& a, const auto& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rational cross =
            (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
        if (cross != 0) return cross > 0;
        return a < b;
    });
    return verts;
}

ReferenceFiber center_of_mass(const PolytopeData& pd) {
    const auto verts = polytope_vertices(pd);
    ReferenceFiber rf;
    rf.holonomy.assign(pd.n, 0.0);
    if (pd.n == 1) {
        rf.x0_t = {(verts[0][0] + verts[1][0]) / 2};
        return rf;
    }

    // Area-weighted centroid of the fan triangulation from verts[0].
    Rational area2(0), sx(0), sy(0);
    for (std::size_t k = 1; k + 1 < verts.size(); ++k) {
        const auto &a = verts[0], &b = verts[k], &c = verts[k + 1];
        const Rational cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        area2 += cross;
        sx += cross * (a[0] + b[0] + c[0]);
        sy += cross * (a[1] + b[1] + c[1]);
    }
    if (area2 == 0) throw std::invalid_argument("polytope has zero area");
    rf.x0_t = {sx / (area2 * 3), sy / (area2 * 3)};
    return rf;
}

std::vector<LaurentPoly> reference_point(const ReferenceFiber& rf, int n) {
    if (static_cast<int>(rf.x0_t.size()) != n) {
        throw std::invalid_argument("reference fiber dimension mismatch");
    }
    for (double phase : rf.holonomy) {
        if (phase != 0.0) {
            throw std::invalid_argument("nonzero holonomy phases are not supported");
        }
    }
    std::vector<LaurentPoly> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(LaurentPoly::q_power(n, rf.x0_t[i]));
    return out;
}

}  // namespace syzmf
