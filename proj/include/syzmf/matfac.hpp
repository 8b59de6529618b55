#pragma once

#include "syzmf/laurent.hpp"

#include <span>
#include <string>
#include <vector>

namespace syzmf {

// Dense rectangular matrix over the Laurent ring; all entries share one
// variable dimension.
class RingMatrix {
  public:
    RingMatrix(int rows, int cols, int n)
        : rows_(rows), cols_(cols), n_(n), entries_(static_cast<std::size_t>(rows) * cols, LaurentPoly(n)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static RingMatrix identity(int size, int n);
    static RingMatrix scalar(int size, const LaurentPoly& value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int dimension() const { return n_; }

    LaurentPoly& at(int r, int c) { return entries_.at(static_cast<std::size_t>(r) * cols_ + c); }
    const LaurentPoly& at(int r, int c) const {
        return entries_.at(static_cast<std::size_t>(r) * cols_ + c);
    }

    RingMatrix operator*(const RingMatrix& rhs) const;
    RingMatrix operator+(const RingMatrix& rhs) const;
    RingMatrix operator-(const RingMatrix& rhs) const;
    RingMatrix negated() const;
    RingMatrix scaled(const LaurentPoly& s) const;
    // Kronecker product; block (i,j) is at(i,j) * rhs.
    RingMatrix kron(const RingMatrix& rhs) const;
    bool is_zero() const;

    bool operator==(const RingMatrix&) const = default;

  private:
    int rows_, cols_, n_;
    std::vector<LaurentPoly> entries_;
};

struct FactorPair {
    LaurentPoly f;
    LaurentPoly g;
};

// Z/2-graded square matrix [[0, F], [G, 0]] of size 2r, together with the
// scalar offset lambda (a z-free polynomial in q) of the potential it is
// meant to factor: F*G = G*F = (W - lambda) * Id.
class MatrixFactorization {
  public:
    MatrixFactorization(RingMatrix f, RingMatrix g, LaurentPoly lambda);

    int half_rank() const { return f_.rows(); }
    int dimension() const { return f_.dimension(); }
    const RingMatrix& F() const { return f_; }
    const RingMatrix& G() const { return g_; }
    const LaurentPoly& offset() const { return lambda_; }
    void set_offset(LaurentPoly lambda);

    MatrixFactorization embed(int new_n, std::span<const int> var_map) const;

    bool operator==(const MatrixFactorization&) const = default;

  private:
    RingMatrix f_, g_;
    LaurentPoly lambda_;
};

// Iterated two-term construction: one pair (f,g) gives F=[f], G=[g]; each
// further pair (f,g) maps (F0,G0) of half-rank r to
//   F = [[F0, f*I], [-g*I, G0]],   G = [[G0, -f*I], [g*I, F0]].
// The square of the result is (sum f_i g_i) * Id in both slots.  The offset
// of the returned factorization is 0.
MatrixFactorization mf_koszul(std::span<const FactorPair> pairs);

// Returns (F*G, G*F).
std::pair<RingMatrix, RingMatrix> mf_square(const MatrixFactorization& m);

struct VerifyReport {
    bool pass = false;
    LaurentPoly lambda;      // the offset the check ran against
    RingMatrix residual_fg;  // F*G - (W - lambda) * Id
    RingMatrix residual_gf;  // G*F - (W - lambda) * Id

    std::string summary() const;
};

VerifyReport mf_verify(const MatrixFactorization& m, const LaurentPoly& w);

// Graded tensor product; offsets add.  For two half-rank-one factors this
// reproduces mf_koszul on the two pairs exactly.
MatrixFactorization mf_tensor(const MatrixFactorization& a, const MatrixFactorization& b);

// Telescoping factorization of W - W(p) for a point p with unit q-monomial
// coordinates: pair i is (z_i - p_i, g_i) with
//   g_i = (W(p_1..p_{i-1}, z_i, ...) - W(p_1..p_i, z_{i+1}, ...)) / (z_i - p_i),
// variables eliminated in the given order (default ascending).  The offset is
// W(p), so the result always verifies against W.
MatrixFactorization mf_from_point(const LaurentPoly& w, std::span<const LaurentPoly> point,
                                  std::span<const int> order = {});

}  // namespace syzmf
