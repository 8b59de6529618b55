#pragma once

#include "syzmf/laurent.hpp"
#include "syzmf/matfac.hpp"

#include <complex>
#include <span>
#include <vector>

namespace syzmf {

// Symbolic area c_t * t + sum_i a_i * x_i with rational coefficients.
struct AffineArea {
    Rational t_coeff;
    std::vector<Rational> x_coeff;

    double evaluate(double t, std::span<const double> x) const;
    bool operator==(const AffineArea&) const = default;
    bool operator<(const AffineArea& rhs) const {
        if (t_coeff != rhs.t_coeff) return t_coeff < rhs.t_coeff;
        return x_coeff < rhs.x_coeff;
    }
};

// One Fourier mode coeff * e^{-area(x)} * e^{i<y, v>} of a fiberwise
// function.  It transforms to a single Laurent monomial precisely when the
// x-part of the area equals v componentwise (mirror coordinates
// z_j = e^{-x_j + i y_j}); that admissibility is what syz_transform enforces.
struct FourierTerm {
    Rational coeff;
    std::vector<int> v;
    AffineArea area;

    bool operator==(const FourierTerm&) const = default;
};

bool is_admissible(const FourierTerm& term);

// Finite sum of Fourier modes; terms with equal (v, area) keys are merged on
// insertion and cancellations are purged.
class FiberwiseEntry {
  public:
    FiberwiseEntry() = default;

    void add(const FourierTerm& term);
    FiberwiseEntry& operator+=(const FiberwiseEntry& rhs);

    bool empty() const { return terms_.empty(); }
    const std::vector<FourierTerm>& terms() const { return terms_; }

    std::complex<double> evaluate(double t, std::span<const double> x,
                                  std::span<const double> y) const;

    bool operator==(const FiberwiseEntry&) const = default;

  private:
    std::vector<FourierTerm> terms_;  // kept sorted by (v, area)
};

// Matrix of fiberwise entries over the admissible base region
// U = (0, u_frac * t)^n, with rows/columns labelled by intersection points.
struct PsiMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<FiberwiseEntry>> entries;
    int n = 0;                // torus dimension
    Rational u_frac;          // U = (0, u_frac * t)^n

    int size() const { return static_cast<int>(labels.size()); }
};

// Fiberwise Fourier transform: each admissible mode (c, v, c_t*t + <v,x>)
// becomes c * q^{c_t} * z^v.  Throws on an inadmissible term.
LaurentPoly syz_transform(const FiberwiseEntry& entry, int n);

// Entrywise transform of the full matrix, assembled into a matrix
// factorization with the caller-supplied offset (the potential value at the
// reference point).  The grading blocks of psi must vanish on the diagonal
// blocks; row/column context is attached to any per-entry failure.
MatrixFactorization syz_transform_matrix(const PsiMatrix& psi, const LaurentPoly& lambda);

// Inverse transform: a Laurent polynomial maps back to the admissible entry
// with one mode per monomial.
FiberwiseEntry fiberwise_from_poly(const LaurentPoly& p);

// Numeric Floer matrix at a sample point: entry (p,q) sums
// sign * e^{-A(x)} * e^{i<y,v>} with t = -ln(qval).  x must lie strictly
// inside U.
std::vector<std::vector<std::complex<double>>> m1_eval(const PsiMatrix& psi, double qval,
                                                       std::span<const double> x,
                                                       std::span<const double> y);

struct FloerSample {
    double qval = 0.0;
    std::vector<double> x;
    std::vector<double> y;
    double square_residual = 0.0;   // max |m1^2 - (W(z) - W(z0)) Id| (relative)
    double transform_mismatch = 0.0;  // max |m1 - F(psi)(z)| (relative)
};

struct FloerReport {
    std::vector<FloerSample> samples;
    double max_square_residual = 0.0;
    double max_transform_mismatch = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Seeded random sampling of (q, x, y); checks both the square identity
// m1^2 = (W(z) - lambda(q)) Id and agreement between m1_eval and the numeric
// evaluation of the symbolic transform.
FloerReport floer_square_check(const PsiMatrix& psi, const LaurentPoly& w, const LaurentPoly& lambda,
                               int samples, unsigned long long seed, double tolerance,
                               double qmin = 0.01, double qmax = 0.9);

}  // namespace syzmf
