#pragma once

#include "syzmf/fourier.hpp"

#include <string>
#include <vector>

namespace syzmf {

// Row/column label order of the graded matrices.
const std::vector<std::string>& p1_labels();  // +, -
const std::vector<std::string>& p2_labels();  // ++, --, -+, +-

// One holomorphic strip class on the line: endpoints, boundary winding v,
// signed symbolic area.
struct DiskClass {
    std::string p, q;
    int v = 0;
    AffineArea area;
    int sign = 1;
};

// The four strip classes over U = (0, t/2): two per endpoint order.
std::vector<DiskClass> p1_catalogue();

// A permissible path pair on the plane surface: endpoints, boundary class
// v of the fiber path, symbolic area, hand-assigned sign, and the component
// decomposition (one line-type disk, or that plus a zero-area fibration pair
// and the Maslov-two disk through the line at infinity).
struct PermissiblePair {
    std::string p, q;
    std::vector<int> v;
    AffineArea area;
    int sign = 1;
    std::vector<std::string> components;
};

// Bounded search over the anchor-path model, filtered by the permissibility
// conditions; equal endpoints yield an empty list.  Results are ordered by v.
std::vector<PermissiblePair> p2_enumerate(const std::string& p, const std::string& q);

// All ordered pairs in matrix order.
std::vector<PermissiblePair> p2_enumerate_all();

// Signed area-weighted disk counts assembled into the matrix-valued function
// on U x Z^n; entry (p,q) collects the catalogue terms for that pair.
PsiMatrix psi_matrix_p1();
PsiMatrix psi_matrix_p2();

}  // namespace syzmf
