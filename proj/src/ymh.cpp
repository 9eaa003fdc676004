#include "ncg/ymh.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace ncg {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 80;

std::vector<Freq> frequency_box(int d, int cutoff)
{
	std::vector<Freq> out;
	Freq k{};
	for (int mu = 0; mu < d; ++mu)
		k[mu] = -cutoff;
	while (true)
	{
		out.push_back(k);
		int mu = d - 1;
		while (mu >= 0 && k[mu] == cutoff)
			k[mu--] = -cutoff;
		if (mu < 0)
			break;
		++k[mu];
	}
	return out;
}

bool positive_half(Freq const &k)
{
	for (int x : k)
		if (x != 0)
			return x > 0;
	return false;
}

/// sum_M w_M Re <R_M, S_M>
double weighted_inner(NCForm const &r, NCForm const &s)
{
	double total = 0;
	for (auto const &[mask, rc] : r.terms())
	{
		auto it = s.terms().find(mask);
		if (it == s.terms().end())
			continue;
		total += orthonormal_weight(r, mask) * trace_inner(rc, it->second).real();
	}
	return total;
}

double gradient_component(ConnectionForm const &w, NCForm const &curv,
                          ParameterSpace const &space, size_t i)
{
	auto const &delta = space.direction(i);
	auto dr = space.direction_differential(i) + wedge(w.form(), delta) +
	          wedge(delta, w.form());
	return 2 * weighted_inner(curv, dr);
}

} // namespace

void ActionConfig::validate() const
{
	if (n < 2)
		throw std::invalid_argument("config: n must be >= 2");
	if (d < 1 || d > kMaxDim)
		throw std::invalid_argument("config: d out of range");
	if (fourier_cutoff < 0)
		throw std::invalid_argument("config: fourier_cutoff must be >= 0");
	if (!(step > 0) || !std::isfinite(step))
		throw std::invalid_argument("config: step must be positive");
	if (!(grad_tol > 0))
		throw std::invalid_argument("config: grad_tol must be positive");
	if (max_iters < 0)
		throw std::invalid_argument("config: max_iters must be >= 0");
}

double orthonormal_weight(NCForm const &shape, CovectorMask mask)
{
	return std::ldexp(1.0, -std::popcount(mask & shape.theta_block()));
}

double action_from_curvature(NCForm const &curvature)
{
	return weighted_inner(curvature, curvature);
}

double ymh_action(ConnectionForm const &w)
{
	return action_from_curvature(curvature(w));
}

ParameterSpace::ParameterSpace(ActionConfig const &cfg) : cfg_(cfg)
{
	cfg_.validate();
	int n = cfg_.n, d = cfg_.d;
	auto const &basis = sl_basis(n);
	NCForm shape(n, d, 1);
	auto box = frequency_box(d, cfg_.fourier_cutoff);

	std::vector<CovectorMask> components;
	for (int mu = 0; mu < d; ++mu)
		components.push_back(shape.dx(mu));
	for (int a = 0; a < basis.dim(); ++a)
		components.push_back(shape.theta(a));

	auto push = [&](Reader r, TrigPoly const &f) {
		auto coef = AlgElement::from_matrix(r.T, f) * r.factor;
		directions_.push_back(NCForm::monomial(r.mask, coef));
		readers_.push_back(std::move(r));
	};

	for (auto mask : components)
	{
		if (!cfg_.restrict_compatible)
		{
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
				{
					Matrix unit = Matrix::Zero(n, n);
					unit(i, j) = 1;
					for (auto const &k : box)
						for (bool im : {false, true})
							push({mask, unit, k, im, false, 1.0},
							     TrigPoly::mode(d, k, im ? cplx(0, 1) : cplx(1)));
				}
			continue;
		}
		bool axis = (mask & shape.theta_block()) == 0;
		cplx factor = axis ? cplx(0, 1) : cplx(1);
		std::vector<Matrix> gens{std::sqrt(2.0 / n) * Matrix::Identity(n, n)};
		gens.insert(gens.end(), basis.E.begin(), basis.E.end());
		for (auto const &T : gens)
			for (auto const &k : box)
			{
				if (k == Freq{})
				{
					push({mask, T, k, false, true, factor}, TrigPoly::constant(d, 1.0));
					continue;
				}
				if (!positive_half(k))
					continue;
				push({mask, T, k, false, true, factor},
				     TrigPoly::mode(d, k, 1.0) + TrigPoly::mode(d, negate(k), 1.0));
				push({mask, T, k, true, true, factor},
				     TrigPoly::mode(d, k, cplx(0, 1)) +
				         TrigPoly::mode(d, negate(k), cplx(0, -1)));
			}
	}

	differentials_.reserve(directions_.size());
	for (auto const &dir : directions_)
		differentials_.push_back(dhat(dir));
}

NCForm ParameterSpace::extra(std::span<double const> params) const
{
	if (params.size() != size())
		throw std::invalid_argument("parameter vector has wrong length");
	NCForm w(cfg_.n, cfg_.d, 1);
	for (size_t i = 0; i < size(); ++i)
		if (params[i] != 0)
			w += directions_[i] * cplx(params[i]);
	return w;
}

ConnectionForm ParameterSpace::assemble(std::span<double const> params) const
{
	return ConnectionForm(-canonical_theta(cfg_.n, cfg_.d) + extra(params));
}

std::vector<double> ParameterSpace::project(ConnectionForm const &w, double tol) const
{
	if (w.n() != cfg_.n || w.d() != cfg_.d)
		throw std::invalid_argument("connection shape does not match config");
	auto ext = w.form() + canonical_theta(cfg_.n, cfg_.d);
	std::vector<double> p(size());
	for (size_t i = 0; i < size(); ++i)
	{
		auto const &r = readers_[i];
		auto coef = ext.coefficient(r.mask);
		cplx c;
		if (r.restricted)
		{
			// h = Tr(T H) / 2 with H = coef / factor
			auto h = (r.T * coef).trace() * (0.5 / r.factor);
			c = h.coef(r.k);
		}
		else
		{
			int i0 = 0, j0 = 0;
			r.T.cwiseAbs().maxCoeff(&i0, &j0);
			c = coef(i0, j0).coef(r.k);
		}
		p[i] = r.imaginary ? c.imag() : c.real();
	}
	double res = (extra(p) - ext).coef_norm();
	if (res > tol)
		throw std::invalid_argument(
		    "connection lies outside the truncated parameter space (residual " +
		    std::to_string(res) + ")");
	return p;
}

std::vector<double> ymh_gradient(ConnectionForm const &w, ParameterSpace const &space)
{
	auto curv = curvature(w);
	std::vector<double> g(space.size());
	long count = static_cast<long>(space.size());
#pragma omp parallel for schedule(dynamic)
	for (long i = 0; i < count; ++i)
		g[i] = gradient_component(w, curv, space, static_cast<size_t>(i));
	return g;
}

std::vector<double> ymh_gradient_serial(ConnectionForm const &w,
                                        ParameterSpace const &space)
{
	auto curv = curvature(w);
	std::vector<double> g(space.size());
	for (size_t i = 0; i < space.size(); ++i)
		g[i] = gradient_component(w, curv, space, i);
	return g;
}

double euclidean_norm(std::span<double const> v)
{
	double s = 0;
	for (double x : v)
		s += x * x;
	return std::sqrt(s);
}

VacuumReport vacuum_report(ConnectionForm const &w, std::span<double const> gradient)
{
	VacuumReport rep;
	auto curv = curvature(w);
	rep.action = action_from_curvature(curv);
	rep.grad_norm = euclidean_norm(gradient);
	for (auto const &[mask, c] : curv.terms())
		rep.curvature_norm = std::max(
		    rep.curvature_norm, std::sqrt(orthonormal_weight(curv, mask)) * c.coef_norm());
	auto ref = ConnectionForm(-canonical_theta(w.n(), w.d()));
	auto dec = decompose_omega(w, ref);
	auto res = higgs_conditions(dec.higgs, ref);
	rep.r1 = res.r1;
	rep.r2 = res.r2;
	return rep;
}

MinimizeResult minimize(ConnectionForm const &omega0, ActionConfig const &cfg)
{
	ParameterSpace space(cfg);
	auto x = space.project(omega0);
	auto w = space.assemble(x);
	double s = ymh_action(w);
	if (!std::isfinite(s))
		throw NonFiniteAction("initial action is not finite");

	std::vector<TrajectoryPoint> traj;
	std::vector<double> g;
	double last_step = 0;
	int iter = 0;
	bool converged = false;
	std::string status = "max_iters";
	for (;; ++iter)
	{
		g = ymh_gradient(w, space);
		double gn = euclidean_norm(g);
		if (!std::isfinite(gn))
			throw NonFiniteAction("gradient is not finite at iteration " +
			                      std::to_string(iter));
		traj.push_back({iter, s, gn, last_step});
		if (gn < cfg.grad_tol)
		{
			converged = true;
			status = "converged";
			break;
		}
		if (iter >= cfg.max_iters)
			break;

		double t = cfg.step;
		bool accepted = false;
		std::vector<double> trial(x.size());
		for (int h = 0; h < kMaxHalvings; ++h, t *= 0.5)
		{
			for (size_t i = 0; i < x.size(); ++i)
				trial[i] = x[i] - t * g[i];
			auto wt = space.assemble(trial);
			double st = ymh_action(wt);
			if (std::isfinite(st) && st <= s - kArmijo * t * gn * gn)
			{
				x = trial;
				w = std::move(wt);
				s = st;
				last_step = t;
				accepted = true;
				break;
			}
		}
		if (!accepted)
		{
			status = "line_search_stalled";
			break;
		}
	}

	MinimizeResult out{w, vacuum_report(w, g), std::move(traj)};
	out.report.iterations = iter;
	out.report.converged = converged;
	out.report.status = status;
	return out;
}

} // namespace ncg
