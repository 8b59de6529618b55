#pragma once

#include "syzmf/disks.hpp"
#include "syzmf/fourier.hpp"
#include "syzmf/matfac.hpp"
#include "syzmf/toric.hpp"

#include <string>

namespace syzmf {

enum class Pipeline { Disks, Koszul, FromPoint };

Pipeline pipeline_from_string(const std::string& name);

struct BuildResult {
    MatrixFactorization mf;
    LaurentPoly w;       // superpotential of the surface
    LaurentPoly lambda;  // value of w at the reference point
};

// Superpotential and reference data of a catalogue surface at default sizes.
LaurentPoly surface_superpotential(Surface s);
std::vector<LaurentPoly> surface_reference_point(Surface s);
LaurentPoly surface_reference_value(Surface s);

// The disk-count matrix of a line or plane surface.
PsiMatrix surface_psi(Surface s);

// Standard factor pairs of the surface potential: for the line, plane and
// product surfaces these are the pairs of the displayed matrices; blowups
// fall back to the telescoping pairs at the barycenter.
std::vector<FactorPair> canonical_pairs(Surface s);

// disks:      catalogue -> Psi -> fiberwise Fourier transform
//             (the product surface is assembled as a tensor of two factors)
// koszul:     mf_koszul on the canonical pairs
// from-point: telescoping factorization at the barycenter mirror point
BuildResult build_factorization(Surface s, Pipeline pipeline);

}  // namespace syzmf
