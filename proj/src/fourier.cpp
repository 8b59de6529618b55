#include "syzmf/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace syzmf {

double AffineArea::evaluate(double t, std::span<const double> x) const {
    if (x.size() != x_coeff.size()) throw std::invalid_argument("area evaluation dimension mismatch");
    double total = to_double(t_coeff) * t;
    for (std::size_t i = 0; i < x_coeff.size(); ++i) total += to_double(x_coeff[i]) * x[i];
    return total;
}

bool is_admissible(const FourierTerm& term) {
    if (term.v.size() != term.area.x_coeff.size()) return false;
    for (std::size_t i = 0; i < term.v.size(); ++i) {
        if (term.area.x_coeff[i] != term.v[i]) return false;
    }
    return true;
}

void FiberwiseEntry::add(const FourierTerm& term) {
    if (term.coeff == 0) return;
    const auto key_less = [](const FourierTerm& a, const FourierTerm& b) {
        if (a.v != b.v) return a.v < b.v;
        return a.area < b.area;
    };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term, key_less);
    if (it != terms_.end() && it->v == term.v && it->area == term.area) {
        it->coeff += term.coeff;
        if (it->coeff == 0) terms_.erase(it);
        return;
    }
    terms_.insert(it, term);
}

FiberwiseEntry& FiberwiseEntry::operator+=(const FiberwiseEntry& rhs) {
    for (const auto& term : rhs.terms_) add(term);
    return *this;
}

std::complex<double> FiberwiseEntry::evaluate(double t, std::span<const double> x,
                                              std::span<const double> y) const {
    std::complex<double> total(0.0, 0.0);
    for (const auto& term : terms_) {
        double phase = 0.0;
        for (std::size_t i = 0; i < term.v.size(); ++i) phase += y[i] * term.v[i];
        total += to_double(term.coeff) * std::exp(-term.area.evaluate(t, x)) *
                 std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return total;
}

LaurentPoly syz_transform(const FiberwiseEntry& entry, int n) {
    LaurentPoly out(n);
    for (const auto& term : entry.terms()) {
        if (static_cast<int>(term.v.size()) != n) {
            throw std::invalid_argument("fourier term dimension mismatch");
        }
        if (!is_admissible(term)) {
            throw std::invalid_argument("inadmissible fourier term: area x-part differs from v");
        }
        out.add_term(Monomial{term.area.t_coeff, term.v}, term.coeff);
    }
    return out;
}

MatrixFactorization syz_transform_matrix(const PsiMatrix& psi, const LaurentPoly& lambda) {
    const int size = psi.size();
    if (size % 2 != 0) throw std::invalid_argument("psi matrix must have even size");
    const int r = size / 2;
    RingMatrix f(r, r, psi.n), g(r, r, psi.n);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            LaurentPoly value(psi.n);
            try {
                value = syz_transform(psi.entries.at(i).at(j), psi.n);
            } catch (const std::exception& e) {
                throw std::invalid_argument("entry (" + psi.labels[i] + "," + psi.labels[j] +
                                            "): " + e.what());
            }
            const bool row_even = i < r, col_even = j < r;
            if (row_even == col_even) {
                if (!value.is_zero()) {
                    throw std::invalid_argument("entry (" + psi.labels[i] + "," + psi.labels[j] +
                                                ") lies in a grading block that must vanish");
                }
            } else if (row_even) {
                f.at(i, j - r) = std::move(value);
            } else {
                g.at(i - r, j) = std::move(value);
            }
        }
    }
    return MatrixFactorization(std::move(f), std::move(g), lambda);
}

FiberwiseEntry fiberwise_from_poly(const LaurentPoly& p) {
    FiberwiseEntry entry;
    for (const auto& [m, c] : p.terms()) {
        AffineArea area{m.qexp, {}};
        area.x_coeff.reserve(m.zexp.size());
        for (int e : m.zexp) area.x_coeff.emplace_back(e);
        entry.add(FourierTerm{c, m.zexp, std::move(area)});
    }
    return entry;
}

std::vector<std::vector<std::complex<double>>> m1_eval(const PsiMatrix& psi, double qval,
                                                       std::span<const double> x,
                                                       std::span<const double> y) {
    if (!(qval > 0.0 && qval < 1.0)) throw std::domain_error("q must lie in (0,1)");
    if (static_cast<int>(x.size()) != psi.n || static_cast<int>(y.size()) != psi.n) {
        throw std::invalid_argument("sample point dimension mismatch");
    }
    const double t = -std::log(qval);
    const double ubound = to_double(psi.u_frac) * t;
    for (double xi : x) {
        if (!(xi > 0.0 && xi < ubound)) {
            throw std::domain_error("x lies outside the admissible region U");
        }
    }
    const int size = psi.size();
    std::vector<std::vector<std::complex<double>>> out(
        size, std::vector<std::complex<double>>(size, {0.0, 0.0}));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) out[i][j] = psi.entries[i][j].evaluate(t, x, y);
    }
    return out;
}

FloerReport floer_square_check(const PsiMatrix& psi, const LaurentPoly& w, const LaurentPoly& lambda,
                               int samples, unsigned long long seed, double tolerance, double qmin,
                               double qmax) {
    if (samples < 1) throw std::invalid_argument("sample count must be at least 1");
    if (lambda.has_z()) throw std::invalid_argument("offset must be free of the z variables");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = psi.n;
    const int size = psi.size();

    FloerReport report;
    report.tolerance = tolerance;
    for (int s = 0; s < samples; ++s) {
        FloerSample sample;
        sample.qval = qmin + (qmax - qmin) * unit(rng);
        const double t = -std::log(sample.qval);
        const double ubound = to_double(psi.u_frac) * t;
        sample.x.resize(n);
        sample.y.resize(n);
        for (int i = 0; i < n; ++i) {
            // keep strictly inside U
            sample.x[i] = ubound * (0.05 + 0.9 * unit(rng));
            sample.y[i] = 2.0 * M_PI * unit(rng);
        }

        const auto m1 = m1_eval(psi, sample.qval, sample.x, sample.y);

        std::vector<std::complex<double>> z(n);
        for (int i = 0; i < n; ++i) {
            z[i] = std::exp(std::complex<double>(-sample.x[i], sample.y[i]));
        }
        const std::complex<double> target = w.evaluate(sample.qval, z) - lambda.evaluate(sample.qval, z);
        const double scale = std::max(1.0, std::abs(target));

        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                std::complex<double> acc(0.0, 0.0);
                for (int k = 0; k < size; ++k) acc += m1[i][k] * m1[k][j];
                if (i == j) acc -= target;
                sample.square_residual = std::max(sample.square_residual, std::abs(acc) / scale);

                const auto symbolic = syz_transform(psi.entries[i][j], n).evaluate(sample.qval, z);
                const double entry_scale = std::max(1.0, std::abs(symbolic));
                sample.transform_mismatch = std::max(sample.transform_mismatch,
                                                     std::abs(symbolic - m1[i][j]) / entry_scale);
            }
        }
        report.max_square_residual = std::max(report.max_square_residual, sample.square_residual);
        report.max_transform_mismatch =
            std::max(report.max_transform_mismatch, sample.transform_mismatch);
        report.samples.push_back(std::move(sample));
    }
    report.pass = report.max_square_residual < tolerance && report.max_transform_mismatch < tolerance;
    return report;
}

}  // namespace syzmf
