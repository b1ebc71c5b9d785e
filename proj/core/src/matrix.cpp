#include "ovib/matrix.hpp"

#include <cmath>
#include <string>

#include "ovib/errors.hpp"

namespace ovib {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    // ikj order: the inner loop runs over contiguous rows of b and c.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& x) {
    if (m.cols() != x.size()) {
        throw ShapeError("matvec: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " * vec" + std::to_string(x.size()));
    }
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* mi = m.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += mi[j] * x[j];
        y[i] = acc;
    }
    return y;
}

double max_sym_eigenvalue(const Matrix& s) {
    if (s.rows() != s.cols()) throw ShapeError("max_sym_eigenvalue: matrix must be square");
    const std::size_t n = s.rows();
    if (n == 0) throw ShapeError("max_sym_eigenvalue: empty matrix");
    Matrix a = s;

    // Cyclic Jacobi: rotate away off-diagonal entries until they vanish.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    a(i, p) = c * aip - sn * aiq;
                    a(i, q) = sn * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const double apj = a(p, j);
                    const double aqj = a(q, j);
                    a(p, j) = c * apj - sn * aqj;
                    a(q, j) = sn * apj + c * aqj;
                }
            }
        }
    }
    double lam = a(0, 0);
    for (std::size_t i = 1; i < n; ++i) lam = std::max(lam, a(i, i));
    return lam;
}

double gram_identity_residual(const Matrix& w) {
    const std::size_t k = w.rows();
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            double g = 0.0;
            const double* wi = w.row(i);
            const double* wj = w.row(j);
            for (std::size_t c = 0; c < w.cols(); ++c) g += wi[c] * wj[c];
            const double r = g - (i == j ? 1.0 : 0.0);
            acc += r * r;
        }
    }
    return acc;
}

}  // namespace ovib
