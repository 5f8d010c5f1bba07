#include "rieszlab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace rieszlab {

UpperTriangular cholesky_upper(const HermitianPD& a) {
    const int m = a.dim();
    UpperTriangular t(m, a.algebra());

    double max_diag = 0.0;
    for (int i = 0; i < m; ++i) max_diag = std::max(max_diag, a(i, i).w);
    const double tol = pivot_rel_tol * std::max(max_diag, 0.0);

    // Right-looking Cholesky over the algebra. The Schur-complement
    // diagonal a_jj - sum |t_kj|^2 is real because A is self-adjoint.
    for (int j = 0; j < m; ++j) {
        double d = a(j, j).w;
        for (int k = 0; k < j; ++k) d -= t(k, j).norm2();
        if (!(d > tol))
            throw NotPositiveDefinite("cholesky_upper: pivot " + std::to_string(j) +
                                      " is not positive (value " + std::to_string(d) + ")");
        const double tjj = std::sqrt(d);
        t(j, j) = Elem(tjj);
        for (int c = j + 1; c < m; ++c) {
            Elem s = a(j, c);
            for (int k = 0; k < j; ++k) s -= t(k, j).conj() * t(k, c);
            t(j, c) = s / tjj;
        }
    }
    return t;
}

std::vector<double> ldl_pivots(const HermitianPD& a) {
    const UpperTriangular t = cholesky_upper(a);
    std::vector<double> lam(a.dim());
    for (int i = 0; i < a.dim(); ++i) lam[i] = t.diag_real(i) * t.diag_real(i);
    return lam;
}

std::vector<double> ldl_pivots_trailing(const HermitianPD& a) {
    return ldl_pivots(a.flip());
}

int ldl_pivots_partial(const HermitianPD& a, std::vector<double>& lam) {
    const int m = a.dim();
    lam.assign(m, 0.0);
    UpperTriangular t(m, a.algebra());
    double max_diag = 0.0;
    for (int i = 0; i < m; ++i) max_diag = std::max(max_diag, a(i, i).w);
    const double tol = pivot_rel_tol * std::max(max_diag, 0.0);

    for (int j = 0; j < m; ++j) {
        double d = a(j, j).w;
        for (int k = 0; k < j; ++k) d -= t(k, j).norm2();
        if (!(d > tol)) return j;
        lam[j] = d;
        const double tjj = std::sqrt(d);
        t(j, j) = Elem(tjj);
        for (int c = j + 1; c < m; ++c) {
            Elem s = a(j, c);
            for (int k = 0; k < j; ++k) s -= t(k, j).conj() * t(k, c);
            t(j, c) = s / tjj;
        }
    }
    return m;
}

double logdet(const HermitianPD& a) {
    double s = 0;
    for (double lam : ldl_pivots(a)) s += std::log(lam);
    return s;
}

AlgMatrix solve_upper_left(const UpperTriangular& t, const AlgMatrix& b) {
    const int m = t.dim();
    if (b.rows() != m) throw ShapeMismatch("solve_upper_left: dimension mismatch");
    AlgMatrix x = b;
    for (int i = m - 1; i >= 0; --i) {
        const Elem dinv = t(i, i).inv();
        for (int c = 0; c < b.cols(); ++c) {
            Elem s = x(i, c);
            for (int k = i + 1; k < m; ++k) s -= t(i, k) * x(k, c);
            x(i, c) = dinv * s;
        }
    }
    return x;
}

AlgMatrix solve_upper_adjoint_left(const UpperTriangular& t, const AlgMatrix& b) {
    const int m = t.dim();
    if (b.rows() != m) throw ShapeMismatch("solve_upper_adjoint_left: dimension mismatch");
    AlgMatrix x = b;
    // T* is lower triangular with (T*)_{ik} = conj(t_{ki}).
    for (int i = 0; i < m; ++i) {
        const Elem dinv = t(i, i).conj().inv();
        for (int c = 0; c < b.cols(); ++c) {
            Elem s = x(i, c);
            for (int k = 0; k < i; ++k) s -= t(k, i).conj() * x(k, c);
            x(i, c) = dinv * s;
        }
    }
    return x;
}

AlgMatrix solve_upper_right(const AlgMatrix& b, const UpperTriangular& t) {
    // X T = B  <=>  T* X* = B*.
    return solve_upper_adjoint_left(t, b.adjoint()).adjoint();
}

AlgMatrix solve_upper_adjoint_right(const AlgMatrix& b, const UpperTriangular& t) {
    return solve_upper_left(t, b.adjoint()).adjoint();
}

HermitianPD inverse(const HermitianPD& a) {
    const UpperTriangular t = cholesky_upper(a);
    // A^{-1} = T^{-1} T^{-*}: solve T Y = I, then A^{-1} = Y Y*.
    const AlgMatrix y = solve_upper_left(t, AlgMatrix::identity(a.dim(), a.algebra()));
    return HermitianPD(y * y.adjoint());
}

AlgMatrix gaussian_matrix(RngStream& rng, int n, int m, Algebra alg, double component_std) {
    if (!(component_std > 0)) throw DomainError("gaussian_matrix: component_std must be > 0");
    AlgMatrix g(n, m, alg);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < alg.beta; ++c)
                g(i, j).set_coord(c, rng.normal(0.0, component_std));
    return g;
}

namespace {

Elem column_dot(const AlgMatrix& a, int ci, const AlgMatrix& b, int cj) {
    Elem s;
    for (int r = 0; r < a.rows(); ++r) s += a(r, ci).conj() * b(r, cj);
    return s;
}

} // namespace

AlgMatrix haar_stiefel(RngStream& rng, int n, int m, Algebra alg) {
    alg.require_full_matrix("haar_stiefel");
    if (n < m || m < 1) throw ShapeMismatch("haar_stiefel: requires n >= m >= 1");
    AlgMatrix h = gaussian_matrix(rng, n, m, alg, 1.0);

    // Modified Gram-Schmidt with a second pass; r_jj = ||v|| > 0 realizes
    // the positive-diagonal convention.
    for (int j = 0; j < m; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                const Elem r = column_dot(h, k, h, j);
                for (int row = 0; row < n; ++row) h(row, j) -= h(row, k) * r;
            }
        }
        double nrm2 = 0;
        for (int row = 0; row < n; ++row) nrm2 += h(row, j).norm2();
        const double nrm = std::sqrt(nrm2);
        for (int row = 0; row < n; ++row) h(row, j) = h(row, j) / nrm;
    }
    return h;
}

std::vector<double> real_representation(const AlgMatrix& a) {
    const int beta = a.beta();
    const int rn = beta * a.rows();
    const int rm = beta * a.cols();
    std::vector<double> r(static_cast<size_t>(rn) * rm, 0.0);
    auto put = [&](int i, int j, double v) { r[static_cast<size_t>(i) * rm + j] = v; };

    // Left-regular representation of each entry on coordinates (1,i,j,k);
    // satisfies L(pq) = L(p)L(q) and L(conj p) = L(p)^T.
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Elem& q = a(i, j);
            const int bi = beta * i, bj = beta * j;
            if (beta == 1) {
                put(bi, bj, q.w);
            } else if (beta == 2) {
                put(bi + 0, bj + 0, q.w); put(bi + 0, bj + 1, -q.x);
                put(bi + 1, bj + 0, q.x); put(bi + 1, bj + 1, q.w);
            } else {
                const double L[4][4] = {{q.w, -q.x, -q.y, -q.z},
                                        {q.x, q.w, -q.z, q.y},
                                        {q.y, q.z, q.w, -q.x},
                                        {q.z, -q.y, q.x, q.w}};
                for (int r0 = 0; r0 < 4; ++r0)
                    for (int c0 = 0; c0 < 4; ++c0) put(bi + r0, bj + c0, L[r0][c0]);
            }
        }
    return r;
}

namespace {

Eigen::MatrixXcd complex_embedding(const AlgMatrix& a) {
    // beta=1,2: the natural complex matrix. beta=4: q = (w+xi) + (y+zi) j
    // embeds as [[A1, A2], [-conj(A2), conj(A1)]] blockwise.
    using C = std::complex<double>;
    if (a.beta() <= 2) {
        Eigen::MatrixXcd z(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) z(i, j) = C(a(i, j).w, a(i, j).x);
        return z;
    }
    const int n = a.rows(), m = a.cols();
    Eigen::MatrixXcd z(2 * n, 2 * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const Elem& q = a(i, j);
            const C a1(q.w, q.x), a2(q.y, q.z);
            z(i, j) = a1;
            z(i, j + m) = a2;
            z(i + n, j) = -std::conj(a2);
            z(i + n, j + m) = std::conj(a1);
        }
    return z;
}

} // namespace

std::vector<double> singular_values(const AlgMatrix& a) {
    a.algebra().require_full_matrix("singular_values");
    const Eigen::MatrixXcd z = complex_embedding(a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z);
    const auto& s = svd.singularValues();
    std::vector<double> out;
    if (a.beta() == 4) {
        // embedded singular values come in equal pairs
        for (int i = 0; i < s.size(); i += 2) out.push_back(s(i));
    } else {
        for (int i = 0; i < s.size(); ++i) out.push_back(s(i));
    }
    return out;
}

std::vector<double> eigenvalues_sym(const HermitianPD& a) {
    const Eigen::MatrixXcd z = complex_embedding(a.mat());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(z, Eigen::EigenvaluesOnly);
    const auto& v = es.eigenvalues();
    std::vector<double> out;
    if (a.beta() == 4) {
        for (int i = 0; i < v.size(); i += 2) out.push_back(v(i));
    } else {
        for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

} // namespace rieszlab
