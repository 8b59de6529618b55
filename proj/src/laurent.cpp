#include "syzmf/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace syzmf {

namespace {

void check_same_dimension(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("ring dimension mismatch: " + std::to_string(a.dimension()) +
                                    " vs " + std::to_string(b.dimension()));
    }
}

}  // namespace

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.zexp.size()) != n_) {
        throw std::invalid_argument("monomial dimension does not match ring dimension");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_same_dimension(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_same_dimension(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out(n_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out += b;
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out -= b;
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_dimension(a, b);
    LaurentPoly out(a.dimension());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m;
            m.qexp = ma.qexp + mb.qexp;
            m.zexp.resize(ma.zexp.size());
            for (std::size_t i = 0; i < ma.zexp.size(); ++i) m.zexp[i] = ma.zexp[i] + mb.zexp[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

bool LaurentPoly::is_q_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first.zexp;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool LaurentPoly::has_z() const {
    for (const auto& [m, c] : terms_) {
        for (int k : m.zexp) {
            if (k != 0) return true;
        }
    }
    return false;
}

bool LaurentPoly::depends_on(int var) const {
    for (const auto& [m, c] : terms_) {
        if (m.zexp.at(var) != 0) return true;
    }
    return false;
}

std::complex<double> LaurentPoly::evaluate(double qval, std::span<const std::complex<double>> z) const {
    if (!(qval > 0.0 && qval < 1.0)) {
        throw std::domain_error("q must lie in (0,1)");
    }
    if (static_cast<int>(z.size()) != n_) {
        throw std::invalid_argument("evaluation point dimension mismatch");
    }
    for (const auto& zi : z) {
        if (zi == std::complex<double>(0.0, 0.0)) {
            throw std::domain_error("zero component in evaluation point");
        }
    }
    std::complex<double> total(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> val(to_double(c) * std::pow(qval, to_double(m.qexp)), 0.0);
        for (int i = 0; i < n_; ++i) {
            const int e = m.zexp[i];
            if (e == 0) continue;
            val *= std::pow(z[i], e);
        }
        total += val;
    }
    return total;
}

LaurentPoly LaurentPoly::substitute(int var, const LaurentPoly& value) const {
    if (var < 0 || var >= n_) throw std::invalid_argument("variable index out of range");
    if (value.dimension() != n_) throw std::invalid_argument("substitution value dimension mismatch");
    if (!value.is_single_term()) {
        throw std::invalid_argument("substitution value must be a single-term unit");
    }
    const auto& [vm, vc] = *value.terms().begin();

    LaurentPoly out(n_);
    for (const auto& [m, c] : terms_) {
        const int e = m.zexp[var];
        Monomial nm;
        nm.qexp = m.qexp + vm.qexp * e;
        nm.zexp = m.zexp;
        nm.zexp[var] = 0;
        for (int i = 0; i < n_; ++i) nm.zexp[i] += e * vm.zexp[i];
        out.add_term(nm, c * rational_pow(vc, e));
    }
    return out;
}

std::pair<LaurentPoly, bool> LaurentPoly::divide_linear(int var, const LaurentPoly& root) const {
    if (var < 0 || var >= n_) throw std::invalid_argument("variable index out of range");
    if (root.dimension() != n_) throw std::invalid_argument("root dimension mismatch");
    if (!root.is_q_monomial()) {
        throw std::invalid_argument("division root must be a unit monomial in q only");
    }
    const Rational root_coeff = root.terms().begin()->second;
    const Rational root_qexp = root.terms().begin()->first.qexp;

    if (is_zero()) return {LaurentPoly(n_), true};

    // Bucket terms by their z_var exponent, shifted so the minimum is zero.
    int min_e = 0, max_e = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const int e = m.zexp[var];
        if (first) {
            min_e = max_e = e;
            first = false;
        } else {
            min_e = std::min(min_e, e);
            max_e = std::max(max_e, e);
        }
    }
    const int shift = std::max(0, -min_e);
    const int degree = max_e + shift;

    // coeff[k] is a polynomial in the remaining variables (z_var exponent 0).
    std::vector<LaurentPoly> coeff(degree + 1, LaurentPoly(n_));
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        const int k = nm.zexp[var] + shift;
        nm.zexp[var] = 0;
        coeff[k].add_term(nm, c);
    }

    const auto times_root = [&](const LaurentPoly& p) {
        LaurentPoly out(n_);
        for (const auto& [m, c] : p.terms()) {
            Monomial nm = m;
            nm.qexp += root_qexp;
            out.add_term(nm, c * root_coeff);
        }
        return out;
    };

    // Synthetic division by (z_var - root).
    std::vector<LaurentPoly> quot(std::max(degree, 1), LaurentPoly(n_));
    LaurentPoly carry(n_);
    if (degree >= 1) {
        quot[degree - 1] = coeff[degree];
        for (int k = degree - 2; k >= 0; --k) quot[k] = coeff[k + 1] + times_root(quot[k + 1]);
        carry = coeff[0] + times_root(quot[0]);
    } else {
        carry = coeff[0];
    }

    LaurentPoly quotient(n_);
    for (int k = 0; k < degree; ++k) {
        for (const auto& [m, c] : quot[k].terms()) {
            Monomial nm = m;
            nm.zexp[var] = k - shift;
            quotient.add_term(nm, c);
        }
    }
    return {quotient, carry.is_zero()};
}

LaurentPoly LaurentPoly::embed(int new_n, std::span<const int> var_map) const {
    if (static_cast<int>(var_map.size()) != n_) {
        throw std::invalid_argument("variable map length must equal ring dimension");
    }
    LaurentPoly out(new_n);
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        nm.qexp = m.qexp;
        nm.zexp.assign(new_n, 0);
        for (int i = 0; i < n_; ++i) {
            const int target = var_map[i];
            if (target < 0 || target >= new_n) throw std::invalid_argument("variable map out of range");
            nm.zexp[target] += m.zexp[i];
        }
        out.add_term(nm, c);
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (leading) {
            if (c < 0) os << "-";
            leading = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1) {
            factors.push_back(denominator(mag) == 1 ? numerator(mag).str()
                                                    : "(" + fraction_string(mag) + ")");
        }
        if (m.qexp != 0) {
            if (m.qexp == 1) {
                factors.push_back("q");
            } else {
                factors.push_back("q^(" + fraction_string(m.qexp) + ")");
            }
        }
        for (int i = 0; i < n_; ++i) {
            const int e = m.zexp[i];
            if (e == 0) continue;
            std::string var = n_ == 1 ? "z" : "z" + std::to_string(i + 1);
            factors.push_back(e == 1 ? var : var + "^" + std::to_string(e));
        }
        if (factors.empty()) {
            os << (denominator(mag) == 1 ? numerator(mag).str() : fraction_string(mag));
        } else {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

}  // namespace syzmf
