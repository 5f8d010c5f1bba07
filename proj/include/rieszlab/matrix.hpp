#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rieszlab/algebra.hpp"
#include "rieszlab/errors.hpp"

namespace rieszlab {

/// Dense n x m matrix over R, C or H with runtime algebra tag.
/// Storage is row-major; each entry keeps beta real coordinates (the
/// trailing coordinates of an Elem stay exactly zero, maintained as a
/// class invariant so quaternion arithmetic specializes correctly).
class AlgMatrix {
public:
    AlgMatrix() : alg_(Algebra::real()) {}

    AlgMatrix(int rows, int cols, Algebra alg)
        : rows_(rows), cols_(cols), alg_(alg), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 1 || cols < 1) throw ShapeMismatch("matrix dimensions must be positive");
        alg.require_full_matrix("AlgMatrix");
    }

    static AlgMatrix identity(int m, Algebra alg) {
        AlgMatrix a(m, m, alg);
        for (int i = 0; i < m; ++i) a(i, i) = Elem(1.0);
        return a;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Algebra algebra() const { return alg_; }
    int beta() const { return alg_.beta; }

    Elem& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Elem& operator()(int i, int j) const {
        return e_[static_cast<size_t>(i) * cols_ + j];
    }

    /// Zero out coordinates beyond the algebra dimension.
    void project_to_algebra() {
        for (auto& v : e_) {
            if (alg_.beta < 4) { v.y = 0; v.z = 0; }
            if (alg_.beta < 2) v.x = 0;
        }
    }

    AlgMatrix adjoint() const {
        AlgMatrix r(cols_, rows_, alg_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    /// Reversal conjugation J A J with J the anti-diagonal permutation.
    AlgMatrix flip() const {
        AlgMatrix r(rows_, cols_, alg_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(i, j) = (*this)(rows_ - 1 - i, cols_ - 1 - j);
        return r;
    }

    AlgMatrix operator*(const AlgMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("matmul: inner dimensions differ");
        if (alg_ != o.alg_) throw ShapeMismatch("matmul: algebra mismatch");
        AlgMatrix r(rows_, o.cols_, alg_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    AlgMatrix operator+(const AlgMatrix& o) const {
        check_same_shape(o, "add");
        AlgMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    AlgMatrix operator-(const AlgMatrix& o) const {
        check_same_shape(o, "subtract");
        AlgMatrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    AlgMatrix operator*(double s) const {
        AlgMatrix r = *this;
        for (auto& v : r.e_) v = v * s;
        return r;
    }

    /// Real part of the trace (the natural trace functional on S_m^beta).
    double trace_real() const {
        double t = 0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i).w;
        return t;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const auto& v : e_) s += v.norm2();
        return std::sqrt(s);
    }

    bool is_hermitian(double tol = 0.0) const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i; j < cols_; ++j) {
                const Elem d = (*this)(i, j) - (*this)(j, i).conj();
                if (d.abs() > tol) return false;
            }
        return true;
    }

    /// Exact symmetrization (A + A*)/2.
    AlgMatrix hermitian_part() const {
        if (rows_ != cols_) throw ShapeMismatch("hermitian_part: matrix not square");
        AlgMatrix r(rows_, cols_, alg_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(i, j) = ((*this)(i, j) + (*this)(j, i).conj()) * 0.5;
        return r;
    }

private:
    void check_same_shape(const AlgMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || alg_ != o.alg_)
            throw ShapeMismatch(std::string(op) + ": shape or algebra mismatch");
    }

    int rows_ = 0, cols_ = 0;
    Algebra alg_;
    std::vector<Elem> e_;
};

inline AlgMatrix operator*(double s, const AlgMatrix& a) { return a * s; }

/// Self-adjoint positive definite matrix in P_m^beta. Hermitian symmetry
/// is enforced at construction; definiteness is certified lazily by the
/// Cholesky pivots (callers of the factorizations see NotPositiveDefinite
/// if a pivot degenerates).
class HermitianPD {
public:
    static HermitianPD identity(int m, Algebra alg) {
        return HermitianPD(AlgMatrix::identity(m, alg));
    }

    /// Wraps a square matrix, requiring near-exact hermitian symmetry and
    /// then symmetrizing exactly.
    explicit HermitianPD(const AlgMatrix& a, double sym_tol = 1e-12) {
        if (a.rows() != a.cols()) throw ShapeMismatch("HermitianPD: matrix not square");
        if (!a.is_hermitian(sym_tol * (1.0 + a.frobenius_norm())))
            throw ShapeMismatch("HermitianPD: matrix is not self-adjoint");
        m_ = a.hermitian_part();
        m_.project_to_algebra();
    }

    /// Gram matrix X* X of an n x m factor (hermitian by construction).
    static HermitianPD gram(const AlgMatrix& x) { return HermitianPD(x.adjoint() * x); }

    int dim() const { return m_.rows(); }
    Algebra algebra() const { return m_.algebra(); }
    int beta() const { return m_.algebra().beta; }

    const AlgMatrix& mat() const { return m_; }
    const Elem& operator()(int i, int j) const { return m_(i, j); }

    HermitianPD flip() const { return HermitianPD(m_.flip()); }

private:
    AlgMatrix m_;
};

/// Upper triangular matrix (zero below the diagonal). Cholesky output has
/// strictly positive real diagonal.
class UpperTriangular {
public:
    UpperTriangular(int m, Algebra alg) : m_(m, m, alg) {}

    explicit UpperTriangular(const AlgMatrix& a) : m_(a) {
        if (a.rows() != a.cols()) throw ShapeMismatch("UpperTriangular: not square");
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < i; ++j)
                if (!a(i, j).is_zero())
                    throw ShapeMismatch("UpperTriangular: nonzero entry below diagonal");
    }

    int dim() const { return m_.rows(); }
    Algebra algebra() const { return m_.algebra(); }

    Elem& operator()(int i, int j) { return m_(i, j); }
    const Elem& operator()(int i, int j) const { return m_(i, j); }

    const AlgMatrix& mat() const { return m_; }

    double diag_real(int i) const { return m_(i, i).w; }

private:
    AlgMatrix m_;
};

} // namespace rieszlab
