#pragma once

#include "syzmf/laurent.hpp"

#include <string>
#include <vector>

namespace syzmf {

enum class Surface { P1, P2, P1xP1, Bl1P2, Bl2P2 };

Surface surface_from_string(const std::string& name);
std::string surface_name(Surface s);

// Half-space {x : <x, normal> >= -offset_t * t}; normals are primitive
// integer vectors and offsets exact rational multiples of the size t.
struct Facet {
    std::vector<int> normal;
    Rational offset_t;
};

struct PolytopeData {
    int n = 0;
    std::vector<Facet> facets;
    std::string name;
};

// Interior base point of the fibration, with coordinates expressed as
// rational multiples of t, plus a flat-connection phase per coordinate.
struct ReferenceFiber {
    std::vector<Rational> x0_t;
    std::vector<double> holonomy;  // defaults to zero
};

// Moment polytopes of the five catalogue surfaces.  sizes supplies the
// rational ratios of the extra parameters to t:
//   P1xP1   -> {second factor size / t}, default {1}
//   Bl1P2   -> {t'/t},                   default {1/3}
//   Bl2P2   -> {t1'/t, t2'/t},           default {1/4, 1/4}
PolytopeData surface_catalogue(Surface s, const std::vector<Rational>& sizes = {});

// One monomial per facet: q^offset * z^normal.
LaurentPoly superpotential(const PolytopeData& pd);

// Exact rational barycenter, computed from the vertex set (triangulated for
// n = 2); returned as rational multiples of t with zero holonomy.
ReferenceFiber center_of_mass(const PolytopeData& pd);

// Mirror coordinates of the fiber: z_i = q^{a_i} when x0_i = a_i * t.
// Rejects nonzero holonomy phases.
std::vector<LaurentPoly> reference_point(const ReferenceFiber& rf, int n);

// Vertices with t = 1, in counterclockwise order for n = 2.  Throws if the
// facet data does not cut out a bounded polytope.
std::vector<std::vector<Rational>> polytope_vertices(const PolytopeData& pd);

}  // namespace syzmf
