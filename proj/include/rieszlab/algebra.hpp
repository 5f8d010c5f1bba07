#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "rieszlab/errors.hpp"

namespace rieszlab {

/// Division-algebra tag. beta is the real dimension of the algebra:
/// 1 = reals, 2 = complexes, 4 = quaternions, 8 = octonions.
/// Octonions get no matrix-valued operations; they are admitted only in
/// scalar beta-parameterized formulas (gamma functions, joint eigenvalue
/// densities and the like).
struct Algebra {
    int beta = 1;

    static Algebra real() { return Algebra{1}; }
    static Algebra complex() { return Algebra{2}; }
    static Algebra quaternion() { return Algebra{4}; }
    static Algebra octonion() { return Algebra{8}; }

    static Algebra of(int beta) {
        if (beta != 1 && beta != 2 && beta != 4 && beta != 8)
            throw DomainError("algebra dimension beta must be one of 1, 2, 4, 8 (got " +
                              std::to_string(beta) + ")");
        return Algebra{beta};
    }

    /// Full matrix support (factorizations, Haar sampling) exists for
    /// beta in {1,2,4}; beta = 8 is scalar-formula-only.
    bool full_matrix() const { return beta == 1 || beta == 2 || beta == 4; }

    void require_full_matrix(const char* op) const {
        if (!full_matrix())
            throw UnsupportedAlgebra(std::string(op) +
                                     ": beta=8 supports scalar formulas only");
    }

    bool operator==(const Algebra& o) const { return beta == o.beta; }
    bool operator!=(const Algebra& o) const { return beta != o.beta; }
};

/// One element of R, C or H, stored as up to four real coordinates
/// (1, i, j, k). Coordinates beyond the algebra dimension are kept at
/// exact zero, which lets every operation use the quaternion formulas:
/// restricted to the first one or two coordinates they reduce to real
/// and complex arithmetic.
struct Elem {
    double w = 0, x = 0, y = 0, z = 0;

    Elem() = default;
    Elem(double w_) : w(w_) {}
    Elem(double w_, double x_, double y_ = 0, double z_ = 0) : w(w_), x(x_), y(y_), z(z_) {}

    double coord(int c) const {
        switch (c) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    void set_coord(int c, double v) {
        switch (c) {
            case 0: w = v; break;
            case 1: x = v; break;
            case 2: y = v; break;
            default: z = v; break;
        }
    }

    Elem operator+(const Elem& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Elem operator-(const Elem& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Elem operator-() const { return {-w, -x, -y, -z}; }
    Elem& operator+=(const Elem& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Elem& operator-=(const Elem& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }

    /// Hamilton product; associative, and exact complex/real product when
    /// the trailing coordinates vanish.
    Elem operator*(const Elem& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Elem operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Elem operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    Elem conj() const { return {w, -x, -y, -z}; }

    double norm2() const { return w * w + x * x + y * y + z * z; }
    double abs() const { return std::sqrt(norm2()); }

    Elem inv() const {
        const double n2 = norm2();
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};

inline Elem operator*(double s, const Elem& e) { return e * s; }

} // namespace rieszlab
