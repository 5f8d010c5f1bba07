#pragma once

#include <vector>

#include "rieszlab/matrix.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

/// Relative pivot tolerance of the positive-definiteness test: a pivot
/// must exceed pivot_rel_tol * max diagonal entry.
inline constexpr double pivot_rel_tol = 1e-10;

/// Upper Cholesky factor T with T* T = A and real positive diagonal.
/// Works directly over the (associative) algebra for beta in {1,2,4}.
UpperTriangular cholesky_upper(const HermitianPD& a);

/// L'DL pivots of A: lambda_i = t_ii^2 with T the upper Cholesky factor.
/// Equal to the ratios of consecutive leading principal minors.
std::vector<double> ldl_pivots(const HermitianPD& a);

/// Pivots of the reversed decomposition (ratios of trailing principal
/// minors), i.e. ldl_pivots(J A J) where J is the flip permutation.
std::vector<double> ldl_pivots_trailing(const HermitianPD& a);

/// Pivots of a possibly singular self-adjoint matrix: fills lam with the
/// pivots computed before the first failing column and returns that
/// column index (dim(a) when the full factorization exists). Lets
/// generalized powers with trailing zero exponents be evaluated on the
/// cone boundary.
int ldl_pivots_partial(const HermitianPD& a, std::vector<double>& lam);

/// log |A| for positive definite A (sum of log pivots).
double logdet(const HermitianPD& a);

/// Solve T X = B (T upper triangular, invertible diagonal).
AlgMatrix solve_upper_left(const UpperTriangular& t, const AlgMatrix& b);

/// Solve T* X = B.
AlgMatrix solve_upper_adjoint_left(const UpperTriangular& t, const AlgMatrix& b);

/// Solve X T = B.
AlgMatrix solve_upper_right(const AlgMatrix& b, const UpperTriangular& t);

/// Solve X T* = B.
AlgMatrix solve_upper_adjoint_right(const AlgMatrix& b, const UpperTriangular& t);

/// A^{-1} via the Cholesky factorization.
HermitianPD inverse(const HermitianPD& a);

/// Haar-uniform n x m frame with H* H = I_m (QR of a Gaussian matrix with
/// the positive-diagonal sign convention, realized by modified
/// Gram-Schmidt with one reorthogonalization pass).
AlgMatrix haar_stiefel(RngStream& rng, int n, int m, Algebra alg);

/// n x m matrix whose beta*n*m real coordinates are i.i.d.
/// normal(0, component_std^2).
AlgMatrix gaussian_matrix(RngStream& rng, int n, int m, Algebra alg, double component_std);

/// Real-coordinate representation: an algebra homomorphism mapping an
/// n x m matrix to a (beta n) x (beta m) real matrix with
/// repr(AB) = repr(A) repr(B) and repr(A*) = repr(A)^T.
/// Returned row-major as a flat vector, dimensions beta*n by beta*m.
std::vector<double> real_representation(const AlgMatrix& a);

/// Singular values in decreasing order (via Eigen; quaternion matrices go
/// through the 2n x 2m complex embedding whose paired singular values are
/// collapsed back).
std::vector<double> singular_values(const AlgMatrix& a);

/// Eigenvalues of a self-adjoint matrix, decreasing order.
std::vector<double> eigenvalues_sym(const HermitianPD& a);

} // namespace rieszlab
