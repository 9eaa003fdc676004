#include "ncg/matrix_geometry.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ncg {

using cd = std::complex<double>;

SlBasis make_sl_basis(int n)
{
	if (n < 2)
		throw std::invalid_argument("sl(n) basis needs n >= 2, got " +
		                            std::to_string(n));
	SlBasis b;
	b.n = n;
	// ordering: for each column k, the symmetric/antisymmetric pairs (j, k)
	// with j < k, followed by the k-th diagonal generator
	for (int k = 1; k < n; ++k)
	{
		for (int j = 0; j < k; ++j)
		{
			Matrix s = Matrix::Zero(n, n);
			s(j, k) = 1;
			s(k, j) = 1;
			b.E.push_back(s);
			Matrix a = Matrix::Zero(n, n);
			a(j, k) = cd(0, -1);
			a(k, j) = cd(0, 1);
			b.E.push_back(a);
		}
		Matrix h = Matrix::Zero(n, n);
		double norm = std::sqrt(2.0 / (k * (k + 1.0)));
		for (int l = 0; l < k; ++l)
			h(l, l) = norm;
		h(k, k) = -k * norm;
		b.E.push_back(h);
	}

	int m = b.dim();
	b.gram.resize(m, m);
	for (int a = 0; a < m; ++a)
		for (int c = 0; c < m; ++c)
			b.gram(a, c) = (b.E[a].adjoint() * b.E[c]).trace();
	b.gram_inv = b.gram.inverse();

	b.C.assign(static_cast<size_t>(m) * m * m, 0.0);
	for (int a = 0; a < m; ++a)
		for (int c = 0; c < m; ++c)
		{
			auto coeffs = decompose_traceless(commutator(b.E[a], b.E[c]), b);
			for (int e = 0; e < m; ++e)
				b.C[(e * m + a) * m + c] = coeffs[e];
		}
	return b;
}

SlBasis const &sl_basis(int n)
{
	static std::mutex mutex;
	static std::map<int, std::unique_ptr<SlBasis const>> cache;
	std::lock_guard lock(mutex);
	auto &slot = cache[n];
	if (!slot)
		slot = std::make_unique<SlBasis const>(make_sl_basis(n));
	return *slot;
}

Matrix theta_project(Matrix const &g)
{
	if (g.rows() != g.cols())
		throw std::invalid_argument("theta_project needs a square matrix");
	auto n = g.rows();
	return g - (g.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
}

std::vector<cd> decompose_traceless(Matrix const &g, SlBasis const &basis,
                                    double tol)
{
	if (g.rows() != basis.n || g.cols() != basis.n)
		throw std::invalid_argument("matrix shape does not match basis");
	if (std::abs(g.trace()) > tol)
		throw std::invalid_argument("decompose_traceless: trace is " +
		                            std::to_string(std::abs(g.trace())));
	int m = basis.dim();
	Eigen::VectorXcd t(m);
	for (int a = 0; a < m; ++a)
		t(a) = (basis.E[a].adjoint() * g).trace();
	Eigen::VectorXcd gamma = basis.gram_inv * t;
	return {gamma.data(), gamma.data() + m};
}

Matrix combine(std::vector<cd> const &coeffs, SlBasis const &basis)
{
	if (static_cast<int>(coeffs.size()) != basis.dim())
		throw std::invalid_argument("coefficient count does not match basis");
	Matrix g = Matrix::Zero(basis.n, basis.n);
	for (int a = 0; a < basis.dim(); ++a)
		g += coeffs[a] * basis.E[a];
	return g;
}

Matrix commutator(Matrix const &a, Matrix const &b)
{
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("commutator: shape mismatch");
	return a * b - b * a;
}

double jacobi_residual(SlBasis const &basis)
{
	int m = basis.dim();
	double worst = 0;
	for (int a = 0; a < m; ++a)
		for (int b = 0; b < m; ++b)
			for (int c = 0; c < m; ++c)
				for (int f = 0; f < m; ++f)
				{
					cd s = 0;
					for (int e = 0; e < m; ++e)
						s += basis.structure(e, a, b) * basis.structure(f, e, c) +
						     basis.structure(e, b, c) * basis.structure(f, e, a) +
						     basis.structure(e, c, a) * basis.structure(f, e, b);
					worst = std::max(worst, std::abs(s));
				}
	return worst;
}

} // namespace ncg
