#include "syzmf/latex.hpp"

#include <sstream>

namespace syzmf {

namespace {

std::string rational_latex(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return "\\frac{" + numerator(r).str() + "}{" + denominator(r).str() + "}";
}

std::string q_power_latex(const Rational& e) {
    if (e == Rational(1, 2)) return "\\sqrt{q}";
    if (e == 1) return "q";
    return "q^{" + numerator(e).str() + "/" + denominator(e).str() + "}";
}

std::string var_name(int n, int i) { return n == 1 ? "z" : "z_" + std::to_string(i + 1); }

std::string monomial_latex(int n, const Monomial& m, const Rational& coeff_mag) {
    std::string num, den;
    if (m.qexp > 0) {
        num += q_power_latex(m.qexp);
    } else if (m.qexp < 0) {
        den += q_power_latex(-m.qexp);
    }
    for (int i = 0; i < n; ++i) {
        const int e = m.zexp[i];
        if (e == 0) continue;
        std::string part = var_name(n, i);
        if (std::abs(e) != 1) part += "^{" + std::to_string(std::abs(e)) + "}";
        (e > 0 ? num : den) += part;
    }

    std::string coeff;
    if (coeff_mag != 1 || (num.empty() && den.empty())) coeff = rational_latex(coeff_mag);

    if (den.empty()) return coeff + num;
    if (num.empty()) num = "1";
    if (!coeff.empty() && coeff != "1") num = coeff + "\\," + num;
    return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace

std::string poly_to_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : p.terms()) {
        if (leading) {
            if (c < 0) os << "-";
            leading = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        os << monomial_latex(p.dimension(), m, c < 0 ? Rational(-c) : c);
    }
    return os.str();
}

std::string mf_to_latex(const MatrixFactorization& m) {
    const int r = m.half_rank();
    const int size = 2 * r;
    std::ostringstream os;
    os << "\\left(\\begin{array}{" << std::string(size, 'c') << "}\n";
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (j) os << " & ";
            if (i < r && j >= r) {
                os << poly_to_latex(m.F().at(i, j - r));
            } else if (i >= r && j < r) {
                os << poly_to_latex(m.G().at(i - r, j));
            } else {
                os << "0";
            }
        }
        os << (i + 1 < size ? " \\\\" : "") << "\n";
    }
    os << "\\end{array}\\right)";
    return os.str();
}

}  // namespace syzmf
