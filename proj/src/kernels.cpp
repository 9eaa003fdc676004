#include "ncg/kernels.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace ncg {

std::vector<Point> sample_grid(int d, int per_axis)
{
	if (d < 1 || per_axis < 1)
		throw std::invalid_argument("sample_grid: bad shape");
	size_t total = 1;
	for (int mu = 0; mu < d; ++mu)
		total *= per_axis;
	std::vector<Point> pts;
	pts.reserve(total);
	double h = 2 * std::numbers::pi / per_axis;
	for (size_t idx = 0; idx < total; ++idx)
	{
		Point x(d);
		size_t rest = idx;
		for (int mu = d - 1; mu >= 0; --mu)
		{
			x[mu] = h * static_cast<double>(rest % per_axis);
			rest /= per_axis;
		}
		pts.push_back(std::move(x));
	}
	return pts;
}

namespace {

double point_sup(std::span<AlgElement const> elems, Point const &x)
{
	double m = 0;
	for (auto const &e : elems)
		for (auto const &entry : e.entries())
			if (!entry.is_zero())
				m = std::max(m, std::abs(entry.eval(x)));
	return m;
}

int common_dim(std::span<AlgElement const> elems)
{
	if (elems.empty())
		return 0;
	int d = elems[0].d();
	for (auto const &e : elems)
		if (e.d() != d)
			throw std::invalid_argument("grid_sup_norm: mixed torus dimensions");
	return d;
}

} // namespace

double grid_sup_norm(std::span<AlgElement const> elems, int per_axis)
{
	int d = common_dim(elems);
	if (d == 0)
		return 0;
	auto pts = sample_grid(d, per_axis);
	double m = 0;
	long count = static_cast<long>(pts.size());
#pragma omp parallel for reduction(max : m) schedule(static)
	for (long i = 0; i < count; ++i)
		m = std::max(m, point_sup(elems, pts[i]));
	return m;
}

double grid_sup_norm_serial(std::span<AlgElement const> elems, int per_axis)
{
	int d = common_dim(elems);
	if (d == 0)
		return 0;
	double m = 0;
	for (auto const &x : sample_grid(d, per_axis))
		m = std::max(m, point_sup(elems, x));
	return m;
}

} // namespace ncg
