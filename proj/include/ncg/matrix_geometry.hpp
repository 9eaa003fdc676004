#pragma once

// The finite-dimensional layer: M_n(C) and a fixed basis of sl(n, C).

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ncg {

using Matrix = Eigen::MatrixXcd;

/// Basis E_a of sl(n, C) with structure constants [E_a, E_b] = C^c_ab E_c.
struct SlBasis
{
	int n = 0;
	std::vector<Matrix> E;
	/// Flattened C^c_ab at index (c * m + a) * m + b.
	std::vector<std::complex<double>> C;
	/// Tr(E_a^dagger E_b)
	Matrix gram;
	Matrix gram_inv;

	int dim() const { return static_cast<int>(E.size()); }
	std::complex<double> structure(int c, int a, int b) const
	{
		int m = dim();
		return C[(c * m + a) * m + b];
	}
};

/// Generalized Gell-Mann basis: hermitian, Tr(E_a E_b) = 2 delta_ab.
/// For n = 2 these are the Pauli matrices in the usual order.
SlBasis make_sl_basis(int n);

/// Process-wide cached basis for size n; safe to call from any thread.
SlBasis const &sl_basis(int n);

/// g - (Tr g / n) 1
Matrix theta_project(Matrix const &g);

/// Coefficients gamma^a with g = sum_a gamma^a E_a. Throws if g is not
/// traceless within tol.
std::vector<std::complex<double>> decompose_traceless(Matrix const &g,
                                                      SlBasis const &basis,
                                                      double tol = 1e-12);

Matrix combine(std::vector<std::complex<double>> const &coeffs,
               SlBasis const &basis);

Matrix commutator(Matrix const &a, Matrix const &b);

/// Jacobi residual of the structure constants, max over all index tuples.
double jacobi_residual(SlBasis const &basis);

} // namespace ncg
