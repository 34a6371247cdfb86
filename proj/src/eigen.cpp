#include "lf/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lf/errors.hpp"

namespace lf {

using cd = std::complex<double>;

void check_hermitian(const HermitianMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::non_hermitian, "matrix is not square", "matrix");
    if (m.size() == 0) return;
    const double scale = m.cwiseAbs().maxCoeff();
    const double tol = 1e-14 * scale;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, i).imag() != 0.0)
            throw Error(ErrorCode::non_hermitian,
                        "diagonal entry " + std::to_string(i) + " has nonzero imaginary part",
                        "matrix");
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
                throw Error(ErrorCode::non_hermitian,
                            "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                ") and its transpose are not conjugate",
                            "matrix");
    }
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (static_cast<int>(e.size()) != std::max(n - 1, 0))
        throw Error(ErrorCode::invalid_argument, "off-diagonal must have one entry fewer than the diagonal",
                    "e");
    e.resize(n, 0.0);
    const double eps = std::numeric_limits<double>::epsilon();
    const int cap = 30 * std::max(n, 1);
    int steps = 0;
    for (int l = 0; l < n; ++l) {
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++steps > cap)
                throw Error(ErrorCode::no_convergence,
                            "implicit QL did not converge for a " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix",
                            "matrix");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i;
            bool underflow = false;
            for (i = m - 1; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> eigvalsh(const HermitianMatrix& m) {
    check_hermitian(m);
    const Eigen::Index n = m.rows();
    if (n == 0) return {};
    HermitianMatrix a = m;
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        Eigen::VectorXcd v = a.col(k).segment(k + 1, len);
        const double xnorm = v.norm();
        if (xnorm == 0.0) continue;
        const double tail = v.tail(len - 1).norm();
        if (tail == 0.0) continue;
        const cd x0 = v(0);
        const cd phase = std::abs(x0) == 0.0 ? cd(1.0) : x0 / std::abs(x0);
        const cd alpha = -phase * xnorm;
        v(0) -= alpha;
        v.normalize();
        auto sub = a.block(k + 1, k + 1, len, len);
        Eigen::VectorXcd p = sub * v;
        const double kappa = v.dot(p).real();
        Eigen::VectorXcd q = p - kappa * v;
        sub -= 2.0 * (v * q.adjoint() + q * v.adjoint());
        a.col(k).segment(k + 1, len).setZero();
        a.row(k).segment(k + 1, len).setZero();
        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
    }
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    for (Eigen::Index i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
    return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

}  // namespace lf
