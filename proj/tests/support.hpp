#pragma once

// Shared helpers for the unit tests: Pauli matrices, sample points and
// pointwise comparisons used as independent oracles.

#include "ncg/nc_form.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace ncg::test {

inline Matrix pauli(int k)
{
	Matrix m = Matrix::Zero(2, 2);
	switch (k)
	{
	case 1:
		m << 0, 1, 1, 0;
		break;
	case 2:
		m << 0, cplx(0, -1), cplx(0, 1), 0;
		break;
	case 3:
		m << 1, 0, 0, -1;
		break;
	default:
		m = Matrix::Identity(2, 2);
	}
	return m;
}

inline Freq freq(int k1, int k2 = 0, int k3 = 0)
{
	return {k1, k2, k3, 0};
}

/// Irregular points in [0, 2 pi)^d, deliberately off any uniform grid.
inline std::vector<std::vector<double>> probe_points(int d, int count = 23)
{
	std::vector<std::vector<double>> pts;
	for (int i = 0; i < count; ++i)
	{
		std::vector<double> x(d);
		for (int mu = 0; mu < d; ++mu)
			x[mu] = std::fmod(0.37 + 1.618033988749895 * (i + 1) * (mu + 1) + 0.71 * mu,
			                  2 * M_PI);
		pts.push_back(x);
	}
	return pts;
}

inline double max_abs(Matrix const &m)
{
	return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

/// sup over probe points of |a(x) - f(x)|
inline double pointwise_gap(AlgElement const &a,
                            std::function<Matrix(std::vector<double> const &)> const &f)
{
	double r = 0;
	for (auto const &x : probe_points(a.d()))
		r = std::max(r, max_abs(a.eval(x) - f(x)));
	return r;
}

inline double pointwise_gap(AlgElement const &a, AlgElement const &b)
{
	return pointwise_gap(a, [&](auto const &x) { return b.eval(x); });
}

} // namespace ncg::test
