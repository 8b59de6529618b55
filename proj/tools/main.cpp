#include "syzmf/json_io.hpp"
#include "syzmf/latex.hpp"
#include "syzmf/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace syzmf;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Prints the document and mirrors it into SYZ_MF_OUTPUT_DIR when set.
void emit(const std::string& document, const std::string& filename) {
    std::cout << document << "\n";
    if (const char* dir = std::getenv("SYZ_MF_OUTPUT_DIR"); dir && *dir) {
        const std::filesystem::path path = std::filesystem::path(dir) / filename;
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << document << "\n";
    }
}

std::string matrix_text(const MatrixFactorization& mf) {
    const int r = mf.half_rank();
    std::ostringstream os;
    for (int i = 0; i < 2 * r; ++i) {
        os << "[ ";
        for (int j = 0; j < 2 * r; ++j) {
            if (j) os << " | ";
            if (i < r && j >= r) {
                os << mf.F().at(i, j - r).to_string();
            } else if (i >= r && j < r) {
                os << mf.G().at(i - r, j).to_string();
            } else {
                os << "0";
            }
        }
        os << " ]\n";
    }
    return os.str();
}

std::vector<double> parse_reals(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

struct BuildOptions {
    std::string surface;
    std::string pipeline = "disks";
    std::string output = "json";
};

int run_build(const BuildOptions& opt) {
    const Surface surface = surface_from_string(opt.surface);
    const BuildResult result = build_factorization(surface, pipeline_from_string(opt.pipeline));
    const std::string stem = "build_" + surface_name(surface) + "_" + opt.pipeline;
    if (opt.output == "json") {
        emit(mf_to_json(result.mf).dump(), stem + ".json");
    } else if (opt.output == "latex") {
        emit(mf_to_latex(result.mf), stem + ".tex");
    } else if (opt.output == "text") {
        std::ostringstream os;
        os << "surface: " << surface_name(surface) << "\n"
           << "W = " << result.w.to_string() << "\n"
           << "lambda = " << result.lambda.to_string() << "\n"
           << matrix_text(result.mf);
        emit(os.str(), stem + ".txt");
    } else {
        throw std::invalid_argument("unknown output format '" + opt.output + "'");
    }
    return kExitPass;
}

struct VerifyOptions {
    std::string surface;
    std::string file;
    std::string output = "text";
};

int run_verify(const VerifyOptions& opt) {
    const Surface surface = surface_from_string(opt.surface);
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + opt.file + "'");
    nlohmann::json j;
    in >> j;
    const MatrixFactorization mf = mf_from_json(j);
    const LaurentPoly w = surface_superpotential(surface);
    if (mf.dimension() != w.dimension()) {
        throw std::invalid_argument("matrix ring dimension does not match the surface");
    }
    const VerifyReport report = mf_verify(mf, w);
    const std::string stem = "verify_" + surface_name(surface);
    if (opt.output == "json") {
        emit(verify_report_json(report).dump(), stem + ".json");
    } else {
        emit(report.summary(), stem + ".txt");
    }
    return report.pass ? kExitPass : kExitFail;
}

struct EnumerateOptions {
    std::string surface;
    std::string pair;
    std::string output = "json";
};

int run_enumerate(const EnumerateOptions& opt) {
    const Surface surface = surface_from_string(opt.surface);
    ordered_json doc;
    if (surface == Surface::P1) {
        if (!opt.pair.empty()) throw std::invalid_argument("--pair is only meaningful for p2");
        doc = disk_catalogue_json(p1_catalogue());
    } else if (surface == Surface::P2) {
        std::vector<PermissiblePair> pairs;
        if (opt.pair.empty()) {
            pairs = p2_enumerate_all();
        } else {
            const auto comma = opt.pair.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("--pair expects two labels such as '++,-+'");
            }
            pairs = p2_enumerate(opt.pair.substr(0, comma), opt.pair.substr(comma + 1));
        }
        doc = pair_catalogue_json(pairs);
    } else {
        throw std::invalid_argument("enumerate supports p1 and p2 only");
    }
    emit(doc.dump(), "enumerate_" + surface_name(surface) + ".json");
    return kExitPass;
}

struct EvalOptions {
    std::string surface;
    double qval = 0.0;
    int samples = 100;
    double tolerance = 1e-9;
    unsigned long long seed = 0;
    std::string output = "text";
    std::string x_csv, y_csv;
};

int run_eval(const EvalOptions& opt) {
    const Surface surface = surface_from_string(opt.surface);
    if (surface != Surface::P1 && surface != Surface::P2) {
        throw std::invalid_argument("eval supports p1 and p2 only");
    }
    if (!(opt.qval > 0.0 && opt.qval < 1.0)) {
        throw std::invalid_argument("--q must lie in (0,1)");
    }
    const PsiMatrix psi = surface_psi(surface);
    const LaurentPoly w = surface_superpotential(surface);
    const LaurentPoly lambda = surface_reference_value(surface);
    const std::string stem = "eval_" + surface_name(surface);

    if (!opt.x_csv.empty()) {
        const std::vector<double> x = parse_reals(opt.x_csv);
        const std::vector<double> y =
            opt.y_csv.empty() ? std::vector<double>(psi.n, 0.0) : parse_reals(opt.y_csv);
        const auto m1 = m1_eval(psi, opt.qval, x, y);
        std::ostringstream os;
        os << "m1 at q=" << opt.qval << ":\n";
        for (int i = 0; i < psi.size(); ++i) {
            os << "[ ";
            for (int j = 0; j < psi.size(); ++j) {
                if (j) os << " | ";
                os << m1[i][j].real() << (m1[i][j].imag() < 0 ? "" : "+") << m1[i][j].imag() << "i";
            }
            os << " ]\n";
        }
        emit(os.str(), stem + ".txt");
        return kExitPass;
    }

    const FloerReport report =
        floer_square_check(psi, w, lambda, opt.samples, opt.seed, opt.tolerance);
    if (opt.output == "json") {
        emit(floer_report_json(report).dump(), stem + ".json");
    } else {
        std::ostringstream os;
        os << "samples: " << report.samples.size() << "\n"
           << "max |m1^2 - (W - lambda) Id|: " << report.max_square_residual << "\n"
           << "max |m1 - F(Psi)|: " << report.max_transform_mismatch << "\n"
           << "tolerance: " << report.tolerance << "\n"
           << (report.pass ? "pass" : "fail");
        emit(os.str(), stem + ".txt");
    }
    return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix factorizations of mirror superpotentials for toric Fano surfaces"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    CLI::App* build = app.add_subcommand("build", "construct a matrix factorization");
    build->add_option("--surface", build_opt.surface, "p1|p2|p1xp1|bl1p2|bl2p2")->required();
    build->add_option("--pipeline", build_opt.pipeline, "disks|koszul|from-point");
    build->add_option("--output", build_opt.output, "json|latex|text");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "check M^2 = (W - lambda) Id symbolically");
    verify->add_option("--surface", verify_opt.surface, "surface that supplies W")->required();
    verify->add_option("file", verify_opt.file, "matrix factorization JSON file")->required();
    verify->add_option("--output", verify_opt.output, "json|text");

    EnumerateOptions enum_opt;
    CLI::App* enumerate = app.add_subcommand("enumerate", "dump the disk catalogue");
    enumerate->add_option("--surface", enum_opt.surface, "p1|p2")->required();
    enumerate->add_option("--pair", enum_opt.pair, "restrict to one ordered pair, e.g. '++,-+'");
    enumerate->add_option("--output", enum_opt.output, "json");

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "numeric Floer-differential checks");
    eval->add_option("--surface", eval_opt.surface, "p1|p2")->required();
    eval->add_option("--q", eval_opt.qval, "Kaehler parameter value in (0,1)")->required();
    eval->add_option("--samples", eval_opt.samples, "number of random sample points");
    eval->add_option("--tolerance", eval_opt.tolerance, "numeric tolerance");
    eval->add_option("--seed", eval_opt.seed, "random seed");
    eval->add_option("--x", eval_opt.x_csv, "evaluate at a fixed base point (comma-separated)");
    eval->add_option("--y", eval_opt.y_csv, "phase of the fixed point (comma-separated)");
    eval->add_option("--output", eval_opt.output, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(build_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (enumerate->parsed()) return run_enumerate(enum_opt);
        if (eval->parsed()) return run_eval(eval_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
