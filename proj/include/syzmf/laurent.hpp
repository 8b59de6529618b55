#pragma once

#include "syzmf/rational.hpp"

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace syzmf {

// A monomial q^qexp * z1^e1 * ... * zn^en.  The q-exponent is an exact
// rational; z-exponents are integers (Laurent).  Total order: lexicographic
// on (qexp, zexp), which fixes printing and canonical serialization.
struct Monomial {
    Rational qexp;
    std::vector<int> zexp;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& rhs) const {
        if (qexp != rhs.qexp) return qexp < rhs.qexp;
        return zexp < rhs.zexp;
    }
};

// Sparse Laurent polynomial in n torus variables over Q, with a formal
// parameter q carrying rational exponents.  Zero coefficients are never
// stored, so map equality is canonical equality.
class LaurentPoly {
  public:
    explicit LaurentPoly(int n = 0) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative ring dimension");
    }

    static LaurentPoly constant(int n, const Rational& c) {
        LaurentPoly p(n);
        p.add_term(Monomial{Rational(0), std::vector<int>(n, 0)}, c);
        return p;
    }
    static LaurentPoly variable(int n, int var, int power = 1) {
        LaurentPoly p(n);
        std::vector<int> e(n, 0);
        e.at(var) = power;
        p.add_term(Monomial{Rational(0), std::move(e)}, Rational(1));
        return p;
    }
    static LaurentPoly q_power(int n, const Rational& e, const Rational& coeff = Rational(1)) {
        LaurentPoly p(n);
        p.add_term(Monomial{e, std::vector<int>(n, 0)}, coeff);
        return p;
    }
    static LaurentPoly term(int n, const Rational& coeff, const Rational& qexp, std::vector<int> zexp) {
        LaurentPoly p(n);
        if (static_cast<int>(zexp.size()) != n) {
            throw std::invalid_argument("zexp length does not match ring dimension");
        }
        p.add_term(Monomial{qexp, std::move(zexp)}, coeff);
        return p;
    }

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Merges into the term map, purging the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;

    bool operator==(const LaurentPoly&) const = default;

    bool is_single_term() const { return terms_.size() == 1; }
    // Single term with no z dependence (a rational multiple of a q-power).
    bool is_q_monomial() const;
    // True if any stored monomial touches a z variable.
    bool has_z() const;
    bool depends_on(int var) const;

    // Numeric evaluation at q = qval in (0,1) and z in (C*)^n.  Rational
    // q-exponents use the principal real power of the positive base.
    std::complex<double> evaluate(double qval, std::span<const std::complex<double>> z) const;

    // Substitute z_var := value where value is a single-term unit.  The
    // substituted variable is eliminated from the support; dimension is kept.
    LaurentPoly substitute(int var, const LaurentPoly& value) const;

    // Divide by (z_var - root) where root is a single-term unit free of all
    // z variables.  Negative powers of z_var are cleared first, then
    // synthetic division runs on the z_var coefficients.  Returns the
    // quotient and whether the division was exact (remainder zero); on an
    // inexact division the quotient is the best-effort synthetic quotient.
    std::pair<LaurentPoly, bool> divide_linear(int var, const LaurentPoly& root) const;

    // Reinterpret in a larger ring: variable i of *this becomes variable
    // var_map[i] of the result.
    LaurentPoly embed(int new_n, std::span<const int> var_map) const;

    std::string to_string() const;

  private:
    int n_ = 0;
    std::map<Monomial, Rational> terms_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace syzmf
