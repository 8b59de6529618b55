#pragma once

#include "syzmf/laurent.hpp"
#include "syzmf/matfac.hpp"

#include <string>

namespace syzmf {

// Display form: negative powers as fractions, q^{1/2} as \sqrt{q}.
std::string poly_to_latex(const LaurentPoly& p);

// Full 2r x 2r block matrix [[0, F], [G, 0]] as a displayed array.
std::string mf_to_latex(const MatrixFactorization& m);

}  // namespace syzmf
