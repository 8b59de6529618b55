#include "syzmf/matfac.hpp"

#include <numeric>
#include <sstream>

namespace syzmf {

RingMatrix RingMatrix::identity(int size, int n) {
    RingMatrix out(size, size, n);
    for (int i = 0; i < size; ++i) out.at(i, i) = LaurentPoly::constant(n, Rational(1));
    return out;
}

RingMatrix RingMatrix::scalar(int size, const LaurentPoly& value) {
    RingMatrix out(size, size, value.dimension());
    for (int i = 0; i < size; ++i) out.at(i, i) = value;
    return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    if (n_ != rhs.n_) throw std::invalid_argument("ring dimension mismatch in product");
    RingMatrix out(rows_, rhs.cols_, n_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) {
            LaurentPoly acc(n_);
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    RingMatrix out(rows_, cols_, n_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + rhs.at(i, j);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    RingMatrix out(rows_, cols_, n_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

RingMatrix RingMatrix::negated() const {
    RingMatrix out(rows_, cols_, n_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = -at(i, j);
    return out;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& s) const {
    RingMatrix out(rows_, cols_, n_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * s;
    return out;
}

RingMatrix RingMatrix::kron(const RingMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("ring dimension mismatch in Kronecker product");
    RingMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, n_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = at(i, j) * rhs.at(k, l);
    return out;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

MatrixFactorization::MatrixFactorization(RingMatrix f, RingMatrix g, LaurentPoly lambda)
    : f_(std::move(f)), g_(std::move(g)), lambda_(std::move(lambda)) {
    if (f_.rows() != f_.cols() || g_.rows() != g_.cols() || f_.rows() != g_.rows()) {
        throw std::invalid_argument("off-diagonal blocks must be square of equal size");
    }
    if (f_.dimension() != g_.dimension() || f_.dimension() != lambda_.dimension()) {
        throw std::invalid_argument("ring dimension mismatch in matrix factorization");
    }
    if (lambda_.has_z()) {
        throw std::invalid_argument("potential offset must be free of the z variables");
    }
}

void MatrixFactorization::set_offset(LaurentPoly lambda) {
    if (lambda.dimension() != dimension()) throw std::invalid_argument("offset dimension mismatch");
    if (lambda.has_z()) throw std::invalid_argument("potential offset must be free of the z variables");
    lambda_ = std::move(lambda);
}

MatrixFactorization MatrixFactorization::embed(int new_n, std::span<const int> var_map) const {
    const int r = half_rank();
    RingMatrix f(r, r, new_n), g(r, r, new_n);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            f.at(i, j) = f_.at(i, j).embed(new_n, var_map);
            g.at(i, j) = g_.at(i, j).embed(new_n, var_map);
        }
    }
    return MatrixFactorization(std::move(f), std::move(g), lambda_.embed(new_n, var_map));
}

MatrixFactorization mf_koszul(std::span<const FactorPair> pairs) {
    if (pairs.empty()) throw std::invalid_argument("mf_koszul needs at least one factor pair");
    const int n = pairs.front().f.dimension();
    for (const auto& p : pairs) {
        if (p.f.dimension() != n || p.g.dimension() != n) {
            throw std::invalid_argument("factor pairs must share one ring dimension");
        }
    }

    RingMatrix f(1, 1, n), g(1, 1, n);
    f.at(0, 0) = pairs.front().f;
    g.at(0, 0) = pairs.front().g;

    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const int r = f.rows();
        RingMatrix fn(2 * r, 2 * r, n), gn(2 * r, 2 * r, n);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                fn.at(i, j) = f.at(i, j);
                fn.at(r + i, r + j) = g.at(i, j);
                gn.at(i, j) = g.at(i, j);
                gn.at(r + i, r + j) = f.at(i, j);
            }
            fn.at(i, r + i) = pairs[k].f;
            fn.at(r + i, i) = -pairs[k].g;
            gn.at(i, r + i) = -pairs[k].f;
            gn.at(r + i, i) = pairs[k].g;
        }
        f = std::move(fn);
        g = std::move(gn);
    }
    return MatrixFactorization(std::move(f), std::move(g), LaurentPoly(n));
}

std::pair<RingMatrix, RingMatrix> mf_square(const MatrixFactorization& m) {
    return {m.F() * m.G(), m.G() * m.F()};
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    if (pass) {
        os << "pass: M^2 = (W - lambda) Id with lambda = " << lambda.to_string();
        return os.str();
    }
    os << "fail: M^2 != (W - lambda) Id with lambda = " << lambda.to_string() << "\n";
    const auto dump = [&os](const char* name, const RingMatrix& r) {
        for (int i = 0; i < r.rows(); ++i) {
            for (int j = 0; j < r.cols(); ++j) {
                if (!r.at(i, j).is_zero()) {
                    os << "  " << name << "[" << i << "][" << j << "] = " << r.at(i, j).to_string()
                       << "\n";
                }
            }
        }
    };
    dump("residual_fg", residual_fg);
    dump("residual_gf", residual_gf);
    return os.str();
}

VerifyReport mf_verify(const MatrixFactorization& m, const LaurentPoly& w) {
    if (w.dimension() != m.dimension()) {
        throw std::invalid_argument("potential dimension does not match factorization");
    }
    const auto [fg, gf] = mf_square(m);
    const RingMatrix target = RingMatrix::scalar(m.half_rank(), w - m.offset());
    VerifyReport report{false, m.offset(), fg - target, gf - target};
    report.pass = report.residual_fg.is_zero() && report.residual_gf.is_zero();
    return report;
}

MatrixFactorization mf_tensor(const MatrixFactorization& a, const MatrixFactorization& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("ring dimension mismatch in tensor product");
    }
    const int n = a.dimension();
    const int ra = a.half_rank(), rb = b.half_rank();
    const RingMatrix ia = RingMatrix::identity(ra, n), ib = RingMatrix::identity(rb, n);

    const RingMatrix fa_i = a.F().kron(ib), ga_i = a.G().kron(ib);
    const RingMatrix i_fb = ia.kron(b.F()), i_gb = ia.kron(b.G());

    const int r = ra * rb;
    RingMatrix f(2 * r, 2 * r, n), g(2 * r, 2 * r, n);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            f.at(i, j) = fa_i.at(i, j);
            f.at(i, r + j) = i_fb.at(i, j);
            f.at(r + i, j) = -i_gb.at(i, j);
            f.at(r + i, r + j) = ga_i.at(i, j);

            g.at(i, j) = ga_i.at(i, j);
            g.at(i, r + j) = -i_fb.at(i, j);
            g.at(r + i, j) = i_gb.at(i, j);
            g.at(r + i, r + j) = fa_i.at(i, j);
        }
    }
    return MatrixFactorization(std::move(f), std::move(g), a.offset() + b.offset());
}

MatrixFactorization mf_from_point(const LaurentPoly& w, std::span<const LaurentPoly> point,
                                  std::span<const int> order) {
    const int n = w.dimension();
    if (static_cast<int>(point.size()) != n) {
        throw std::invalid_argument("point length must equal ring dimension");
    }
    std::vector<int> elim(order.begin(), order.end());
    if (elim.empty()) {
        elim.resize(n);
        std::iota(elim.begin(), elim.end(), 0);
    }
    if (static_cast<int>(elim.size()) != n) {
        throw std::invalid_argument("elimination order must list every variable once");
    }

    std::vector<FactorPair> pairs;
    LaurentPoly current = w;
    for (int var : elim) {
        const LaurentPoly& p = point[var];
        if (!p.is_q_monomial()) {
            throw std::invalid_argument("point coordinates must be unit monomials in q");
        }
        const LaurentPoly next = current.substitute(var, p);
        auto [quotient, exact] = (current - next).divide_linear(var, p);
        if (!exact) {
            throw std::runtime_error("telescoping division left a remainder; point is not a root");
        }
        pairs.push_back({LaurentPoly::variable(n, var) - p, std::move(quotient)});
        current = next;
    }
    if (current.has_z()) {
        throw std::runtime_error("potential evaluation at the point still depends on z");
    }

    MatrixFactorization out = mf_koszul(pairs);
    out.set_offset(current);
    return out;
}

}  // namespace syzmf
