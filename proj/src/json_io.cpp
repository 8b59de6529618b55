#include "syzmf/json_io.hpp"

#include <algorithm>

namespace syzmf {

ordered_json poly_to_json(const LaurentPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json term;
        term["coeff"] = fraction_string(c);
        term["qexp"] = fraction_string(m.qexp);
        term["zexp"] = m.zexp;
        terms.push_back(std::move(term));
    }
    ordered_json j;
    j["n"] = p.dimension();
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        p.add_term(Monomial{parse_fraction(term.at("qexp").get<std::string>()),
                            term.at("zexp").get<std::vector<int>>()},
                   parse_fraction(term.at("coeff").get<std::string>()));
    }
    return p;
}

namespace {

ordered_json block_to_json(const RingMatrix& block) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < block.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < block.cols(); ++j) row.push_back(poly_to_json(block.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RingMatrix block_from_json(const nlohmann::json& j, int n) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
    RingMatrix out(rows, cols, n);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) out.at(i, k) = poly_from_json(j.at(i).at(k));
    }
    return out;
}

}  // namespace

ordered_json mf_to_json(const MatrixFactorization& m) {
    ordered_json j;
    j["r"] = m.half_rank();
    j["F"] = block_to_json(m.F());
    j["G"] = block_to_json(m.G());
    j["lambda"] = poly_to_json(m.offset());
    return j;
}

MatrixFactorization mf_from_json(const nlohmann::json& j) {
    const LaurentPoly lambda = poly_from_json(j.at("lambda"));
    const int n = lambda.dimension();
    RingMatrix f = block_from_json(j.at("F"), n);
    RingMatrix g = block_from_json(j.at("G"), n);
    if (f.rows() != j.at("r").get<int>()) {
        throw std::invalid_argument("half-rank field disagrees with block size");
    }
    return MatrixFactorization(std::move(f), std::move(g), lambda);
}

ordered_json polytope_to_json(const PolytopeData& pd) {
    ordered_json facets = ordered_json::array();
    for (const auto& facet : pd.facets) {
        ordered_json fj;
        fj["normal"] = facet.normal;
        fj["offset_t"] = fraction_string(facet.offset_t);
        facets.push_back(std::move(fj));
    }
    ordered_json j;
    j["n"] = pd.n;
    j["facets"] = std::move(facets);
    return j;
}

ordered_json area_to_json(const AffineArea& a) {
    ordered_json j;
    j["t"] = fraction_string(a.t_coeff);
    ordered_json xs = ordered_json::array();
    for (const auto& c : a.x_coeff) xs.push_back(fraction_string(c));
    j["x"] = std::move(xs);
    return j;
}

AffineArea area_from_json(const nlohmann::json& j) {
    AffineArea a;
    a.t_coeff = parse_fraction(j.at("t").get<std::string>());
    for (const auto& c : j.at("x")) a.x_coeff.push_back(parse_fraction(c.get<std::string>()));
    return a;
}

ordered_json disk_catalogue_json(const std::vector<DiskClass>& catalogue) {
    std::vector<DiskClass> sorted = catalogue;
    const auto index = [](const std::string& label) {
        const auto& labels = p1_labels();
        return std::find(labels.begin(), labels.end(), label) - labels.begin();
    };
    std::sort(sorted.begin(), sorted.end(), [&](const DiskClass& a, const DiskClass& b) {
        if (a.p != b.p) return index(a.p) < index(b.p);
        if (a.q != b.q) return index(a.q) < index(b.q);
        return a.v < b.v;
    });
    ordered_json out = ordered_json::array();
    for (const auto& disk : sorted) {
        ordered_json j;
        j["p"] = disk.p;
        j["q"] = disk.q;
        j["v"] = disk.v;
        j["area"] = area_to_json(disk.area);
        j["sign"] = disk.sign;
        out.push_back(std::move(j));
    }
    return out;
}

ordered_json pair_catalogue_json(const std::vector<PermissiblePair>& catalogue) {
    ordered_json out = ordered_json::array();
    for (const auto& pair : catalogue) {
        ordered_json j;
        j["p"] = pair.p;
        j["q"] = pair.q;
        j["v"] = pair.v;
        j["area"] = area_to_json(pair.area);
        j["sign"] = pair.sign;
        j["components"] = pair.components;
        out.push_back(std::move(j));
    }
    return out;
}

ordered_json verify_report_json(const VerifyReport& report) {
    ordered_json j;
    j["pass"] = report.pass;
    j["lambda"] = poly_to_json(report.lambda);
    if (!report.pass) {
        j["residual_fg"] = block_to_json(report.residual_fg);
        j["residual_gf"] = block_to_json(report.residual_gf);
    }
    return j;
}

ordered_json floer_report_json(const FloerReport& report) {
    ordered_json j;
    j["samples"] = report.samples.size();
    j["max_square_residual"] = report.max_square_residual;
    j["max_transform_mismatch"] = report.max_transform_mismatch;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    return j;
}

}  // namespace syzmf
