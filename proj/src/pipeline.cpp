#include "syzmf/pipeline.hpp"

#include <algorithm>
#include <array>

namespace syzmf {

Pipeline pipeline_from_string(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "disks") return Pipeline::Disks;
    if (lower == "koszul") return Pipeline::Koszul;
    if (lower == "from-point" || lower == "from_point") return Pipeline::FromPoint;
    throw std::invalid_argument("unknown pipeline '" + name + "'");
}

LaurentPoly surface_superpotential(Surface s) { return superpotential(surface_catalogue(s)); }

std::vector<LaurentPoly> surface_reference_point(Surface s) {
    const PolytopeData pd = surface_catalogue(s);
    return reference_point(center_of_mass(pd), pd.n);
}

LaurentPoly surface_reference_value(Surface s) {
    LaurentPoly w = surface_superpotential(s);
    const auto point = surface_reference_point(s);
    for (std::size_t i = 0; i < point.size(); ++i) w = w.substitute(static_cast<int>(i), point[i]);
    return w;
}

PsiMatrix surface_psi(Surface s) {
    switch (s) {
        case Surface::P1: return psi_matrix_p1();
        case Surface::P2: return psi_matrix_p2();
        default: throw std::invalid_argument("disk catalogue exists only for p1 and p2");
    }
}

std::vector<FactorPair> canonical_pairs(Surface s) {
    const Rational half(1, 2), third(1, 3);
    switch (s) {
        case Surface::P1: {
            const int n = 1;
            return {{LaurentPoly::variable(n, 0) - LaurentPoly::q_power(n, half),
                     LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, half, {-1})}};
        }
        case Surface::P2: {
            const int n = 2;
            return {{LaurentPoly::variable(n, 0) - LaurentPoly::q_power(n, third),
                     LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, third, {-1, 0})},
                    {LaurentPoly::variable(n, 1) - LaurentPoly::term(n, 1, Rational(2, 3), {-1, 0}),
                     LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, third, {0, -1})}};
        }
        case Surface::P1xP1: {
            const int n = 2;
            return {{LaurentPoly::variable(n, 0) - LaurentPoly::q_power(n, half),
                     LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, half, {-1, 0})},
                    {LaurentPoly::variable(n, 1) - LaurentPoly::q_power(n, half),
                     LaurentPoly::constant(n, 1) - LaurentPoly::term(n, 1, half, {0, -1})}};
        }
        case Surface::Bl1P2:
        case Surface::Bl2P2: {
            // Telescoping pairs at the barycenter mirror point.
            const LaurentPoly w = surface_superpotential(s);
            const auto point = surface_reference_point(s);
            std::vector<FactorPair> pairs;
            LaurentPoly current = w;
            for (int i = 0; i < w.dimension(); ++i) {
                const LaurentPoly next = current.substitute(i, point[i]);
                auto [g, exact] = (current - next).divide_linear(i, point[i]);
                if (!exact) throw std::logic_error("barycenter pairs must divide exactly");
                pairs.push_back({LaurentPoly::variable(w.dimension(), i) - point[i], std::move(g)});
                current = next;
            }
            return pairs;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

BuildResult finish(MatrixFactorization mf, Surface s) {
    return BuildResult{std::move(mf), surface_superpotential(s), surface_reference_value(s)};
}

}  // namespace

BuildResult build_factorization(Surface s, Pipeline pipeline) {
    switch (pipeline) {
        case Pipeline::Disks: {
            if (s == Surface::P1 || s == Surface::P2) {
                MatrixFactorization mf = syz_transform_matrix(surface_psi(s), surface_reference_value(s));
                return finish(std::move(mf), s);
            }
            if (s == Surface::P1xP1) {
                const MatrixFactorization factor =
                    syz_transform_matrix(psi_matrix_p1(), surface_reference_value(Surface::P1));
                const std::array<int, 1> first{0}, second{1};
                MatrixFactorization mf = mf_tensor(factor.embed(2, first), factor.embed(2, second));
                return finish(std::move(mf), s);
            }
            throw std::invalid_argument("disks pipeline supports p1, p2 and p1xp1 only");
        }
        case Pipeline::Koszul: {
            MatrixFactorization mf = mf_koszul(canonical_pairs(s));
            mf.set_offset(surface_reference_value(s));
            return finish(std::move(mf), s);
        }
        case Pipeline::FromPoint: {
            MatrixFactorization mf =
                mf_from_point(surface_superpotential(s), surface_reference_point(s));
            return finish(std::move(mf), s);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace syzmf
