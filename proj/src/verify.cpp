#include "ncg/verify.hpp"

#include "ncg/atiyah.hpp"
#include "ncg/higgs.hpp"
#include "ncg/random.hpp"
#include "ncg/ymh.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RandomShape shape(int n, int d, double scale = 0.5)
{
	return {n, d, 1, 2, scale};
}

double max_of(std::initializer_list<double> xs)
{
	return std::max(xs);
}

int random_degree(Rng &rng, int n, int d, int cap = 3)
{
	return rng.integer(0, std::min(cap, d + n * n - 1));
}

std::vector<Derivation> random_derivations(Rng &rng, RandomShape const &s, int k)
{
	std::vector<Derivation> xs;
	for (int i = 0; i < k; ++i)
		xs.push_back(random_derivation(rng, s));
	return xs;
}

double graded_leibniz(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	int p = random_degree(rng, n, d, 2);
	int q = random_degree(rng, n, d, 2);
	auto a = random_form(rng, s, p, 2);
	auto b = random_form(rng, s, q, 2);
	auto lhs = dhat(wedge(a, b));
	auto rhs = wedge(dhat(a), b) + wedge(a, dhat(b)) * cplx(p % 2 ? -1.0 : 1.0);
	return (lhs - rhs).coef_norm();
}

double cartan_bracket(Rng &rng, int n, int d)
{
	// [L_X, i_Y] = i_[X,Y]
	auto s = shape(n, d);
	auto x = random_derivation(rng, s);
	auto y = random_derivation(rng, s);
	auto w = random_form(rng, s, 1 + rng.integer(0, 1), 2);
	auto lhs = lie_derive(x, contract(y, w)) - contract(y, lie_derive(x, w));
	return (lhs - contract(bracket(x, y), w)).coef_norm();
}

double koszul(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	int p = random_degree(rng, n, d, 2);
	auto w = random_form(rng, s, p, 2);
	auto xs = random_derivations(rng, s, p + 1);
	return (koszul_eval(w, xs) - form_eval(dhat(w), xs)).coef_norm();
}

double su_predicates(Rng &rng, int n, int d)
{
	auto alpha = random_su_connection(rng, shape(n, d));
	auto res = su_connection_residuals(alpha);
	auto compat = is_compatible_hermitian(alpha);
	return max_of({res.max(), compat.residual});
}

double curvature_horizontal(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto R = curvature(random_su_connection(rng, s));
	return contract(Derivation::inner(random_traceless(rng, s)), R).coef_norm();
}

double field_strength(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto A = random_potential(rng, s);
	auto R = curvature(alpha_from_A(A));
	double r = 0;
	for (int mu = 0; mu < d; ++mu)
		for (int nu = 0; nu < d; ++nu)
		{
			std::vector<Derivation> pair{Derivation::coordinate(n, d, mu),
			                             Derivation::coordinate(n, d, nu)};
			auto F = A[nu].partial(mu) - A[mu].partial(nu) + commutator(A[mu], A[nu]);
			r = std::max(r, (form_eval(R, pair) - F).coef_norm());
		}
	return r;
}

double gauge_covariance(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	ConnectionForm w(random_one_form(rng, s));
	auto u = random_unitary(rng, s, false);
	auto lhs = curvature(gauge_transform(w, u));
	auto rhs = u.star() * curvature(w) * u;
	return (lhs - rhs).coef_norm();
}

double action_invariance(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	ConnectionForm w(random_one_form(rng, s));
	auto u = random_unitary(rng, s, true);
	auto wu = gauge_transform(w, u, GaugeGroup::special_unitary);
	return std::abs(ymh_action(wu) - ymh_action(w));
}

double infinitesimal_gauge(Rng &rng, int n, int d)
{
	// L_{ad xi} alpha = -dhat xi - [alpha, xi]
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	auto xi = random_traceless_antihermitian(rng, s);
	auto expected = -dhat(NCForm::scalar(xi)) - alpha.form() * xi + xi * alpha.form();
	return (lie_gauge_action(alpha, xi) - expected).coef_norm();
}

double hermitian_metric(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	auto x = random_real_derivation(rng, s);
	auto s1 = random_element(rng, s);
	auto s2 = random_element(rng, s);
	return hermitian_form_residual(alpha, x, s1, s2);
}

/// gamma' by solving ad_{gamma'} E_b = g^-1 (X + ad gamma)(g E_b g^-1) g at
/// each point in least squares.
TransitionResiduals transition_sample(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	int m = rng.integer(1, 2);
	AlgElement g = AlgElement::identity(n, d);
	Freq k{};
	k[0] = m;
	g(0, 0) = TrigPoly::mode(d, k);
	g(1, 1) = TrigPoly::mode(d, negate(k));
	auto gamma = random_traceless(rng, s);
	auto A = random_potential(rng, s);
	auto field = random_field(rng, s);
	auto X = Derivation::vector_field(field, n);
	AlgElement ax(n, d);
	for (int mu = 0; mu < d; ++mu)
		ax += A[mu] * field[mu];

	auto const &basis = sl_basis(n);
	int dim = basis.dim();
	auto ginv = g.star();
	std::vector<AlgElement> moved;
	for (int b = 0; b < dim; ++b)
	{
		auto t = g * basis.E[b] * ginv;
		moved.push_back(X.apply_field(t) + commutator(gamma, t));
	}
	auto section_route = ginv * (X.apply_field(g) + ax * g);

	std::vector<Point> points;
	std::vector<Matrix> gp, ap;
	Eigen::MatrixXcd sys(dim * n * n, dim);
	for (int b = 0; b < dim; ++b)
		for (int a = 0; a < dim; ++a)
		{
			Matrix c = commutator(basis.E[a], basis.E[b]);
			for (int e = 0; e < n * n; ++e)
				sys(b * n * n + e, a) = c(e / n, e % n);
		}
	auto qr = sys.colPivHouseholderQr();
	for (int i = 0; i < 64; ++i)
	{
		Point x(d);
		for (auto &v : x)
			v = rng.uniform(0, 2 * M_PI);
		Matrix gm = g.eval(x);
		Eigen::VectorXcd rhs(dim * n * n);
		for (int b = 0; b < dim; ++b)
		{
			Matrix v = gm.adjoint() * moved[b].eval(x) * gm;
			for (int e = 0; e < n * n; ++e)
				rhs(b * n * n + e) = v(e / n, e % n);
		}
		Eigen::VectorXcd coeffs = qr.solve(rhs);
		Matrix gamma_p = Matrix::Zero(n, n);
		for (int a = 0; a < dim; ++a)
			gamma_p += coeffs(a) * basis.E[a];
		gp.push_back(gamma_p);
		ap.push_back(section_route.eval(x));
		points.push_back(std::move(x));
	}
	return transition_check(gamma, gp, ax, ap, g, field, points);
}

double transition_gluing(Rng &rng, int n, int d)
{
	auto r = transition_sample(rng, n, d);
	return max_of({r.gamma, r.potential, r.gluing});
}

double transition_trace(Rng &rng, int n, int d)
{
	return transition_sample(rng, n, d).inhomogeneous_trace;
}

double dzero_flat(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	LeftConnection D([alpha](Derivation const &x) { return d_zero(x, alpha); });
	auto xs = random_derivations(rng, s, 2);
	return D.curvature(xs[0], xs[1]).coef_norm();
}

double dzero_reference(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto a1 = random_su_connection(rng, s);
	auto a2 = random_su_connection(rng, s);
	auto x = random_derivation(rng, s);
	return (d_zero(x, a1) - d_zero(x, a2)).coef_norm();
}

double shifted_curvature(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	auto phi = random_central_one_form(rng, s);
	LeftConnection D(shifted_splitting(alpha, phi));
	auto xs = random_derivations(rng, s, 2);
	auto curv = D.curvature(xs[0], xs[1]);
	auto expected = form_eval(dhat(phi), xs);
	double r = (curv.matrix() - expected).coef_norm();
	for (auto const &f : curv.field())
		r = std::max(r, f.max_abs_coef());
	return r;
}

double left_connection_axioms(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	LeftConnection D(shifted_splitting(alpha, random_central_one_form(rng, s)));
	auto x = random_derivation(rng, s);
	Section e;
	for (int i = 0; i < n; ++i)
		e.push_back(random_trigpoly(rng, s));
	return max_of({D.linearity_residual(random_trigpoly(rng, s), x),
	               D.leibniz_residual(x, random_element(rng, s), e)});
}

double decomposition_sum(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	auto omega = alpha + random_one_form(rng, s);
	CurvatureDecomposition dec(omega, alpha);
	auto xs = random_derivations(rng, s, 2);
	return (dec.sum(xs[0], xs[1]) - form_eval(curvature(omega), xs)).coef_norm();
}

double higgs_reference(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto omega = ConnectionForm(random_one_form(rng, s));
	auto b1 = decompose_omega(omega, random_su_connection(rng, s)).higgs.B;
	auto b2 = decompose_omega(omega, random_su_connection(rng, s)).higgs.B;
	double r = 0;
	for (size_t c = 0; c < b1.size(); ++c)
		r = std::max(r, (b1[c] - b2[c]).coef_norm());
	return r;
}

double reconstruction(Rng &rng, int n, int d)
{
	auto s = shape(n, d);
	auto alpha = random_su_connection(rng, s);
	auto omega = ConnectionForm(random_one_form(rng, s));
	return reconstruction_residual(decompose_omega(omega, alpha), alpha,
	                               random_derivation(rng, s));
}

double flat_points(Rng &, int n, int d)
{
	double r = 0;
	auto ref = ConnectionForm(-canonical_theta(n, d));
	for (auto const &w : {ConnectionForm::zero(n, d), ref})
	{
		auto h = higgs_conditions(decompose_omega(w, ref).higgs, ref);
		r = max_of({r, ymh_action(w), h.r1, h.r2});
	}
	return r;
}

double gradient_directional(Rng &rng, int n, int d)
{
	ActionConfig cfg;
	cfg.n = n;
	cfg.d = d;
	cfg.fourier_cutoff = 0;
	cfg.restrict_compatible = rng.integer(0, 1) == 1;
	ParameterSpace space(cfg);
	std::vector<double> x(space.size()), v(space.size());
	for (auto &p : x)
		p = rng.uniform(-0.5, 0.5);
	for (auto &p : v)
		p = rng.uniform(-1, 1);
	auto g = ymh_gradient(space.assemble(x), space);
	double h = 1e-5, gv = 0;
	auto shifted = [&](double t) {
		auto y = x;
		for (size_t i = 0; i < y.size(); ++i)
			y[i] += t * v[i];
		return ymh_action(space.assemble(y));
	};
	for (size_t i = 0; i < g.size(); ++i)
		gv += g[i] * v[i];
	double fd = (shifted(h) - shifted(-h)) / (2 * h);
	return std::abs(gv - fd) / std::max(1.0, std::abs(gv));
}

double action_sign(Rng &rng, int n, int d)
{
	auto w = ConnectionForm(random_one_form(rng, shape(n, d)));
	double s = ymh_action(w);
	return s >= 0 ? 0.0 : -s;
}

double descent_monotone(Rng &rng, int n, int d)
{
	ActionConfig cfg;
	cfg.n = n;
	cfg.d = d;
	cfg.fourier_cutoff = 0;
	cfg.max_iters = 10;
	ParameterSpace space(cfg);
	std::vector<double> x(space.size());
	for (auto &p : x)
		p = rng.uniform(-0.05, 0.05);
	auto res = minimize(space.assemble(x), cfg);
	double rise = 0;
	for (size_t i = 1; i < res.trajectory.size(); ++i)
		rise = std::max(rise, res.trajectory[i].action - res.trajectory[i - 1].action);
	return rise;
}

double product_commutative(Rng &rng, int, int d)
{
	RandomShape s{1, d, 2, 3, 1.0};
	auto f = random_trigpoly(rng, s), g = random_trigpoly(rng, s);
	auto h = random_trigpoly(rng, s);
	return max_of({(f * g - g * f).max_abs_coef(),
	               ((f * g) * h - f * (g * h)).max_abs_coef()});
}

double product_leibniz(Rng &rng, int, int d)
{
	RandomShape s{1, d, 2, 3, 1.0};
	auto f = random_trigpoly(rng, s), g = random_trigpoly(rng, s);
	int mu = rng.integer(0, d - 1);
	return ((f * g).partial(mu) - f.partial(mu) * g - f * g.partial(mu)).max_abs_coef();
}

double sl_structure(Rng &, int n, int)
{
	auto const &basis = sl_basis(n);
	double r = jacobi_residual(basis);
	for (int a = 0; a < basis.dim(); ++a)
		for (int b = 0; b < basis.dim(); ++b)
		{
			Matrix c = commutator(basis.E[a], basis.E[b]);
			for (int e = 0; e < basis.dim(); ++e)
				c -= basis.structure(e, a, b) * basis.E[e];
			r = max_of({r, c.cwiseAbs().maxCoeff(),
			            std::abs((basis.E[a] * basis.E[b]).trace() - (a == b ? 2.0 : 0.0))});
		}
	return r;
}

double structure_equation(Rng &, int n, int d)
{
	auto t = canonical_theta(n, d);
	return (dhat(t) - wedge(t, t)).coef_norm();
}

double dhat_squared(Rng &rng, int n, int d)
{
	int p = random_degree(rng, n, d);
	auto w = random_form(rng, shape(n, d), p, 3);
	return dhat(dhat(w)).coef_norm();
}

std::vector<Invariant> build_suite()
{
	std::vector<Invariant> s{
	    {"action_gauge_invariance", 1e-9, action_invariance},
	    {"action_nonnegative", 0.0, action_sign},
	    {"cartan_bracket_identity", 1e-11, cartan_bracket},
	    {"curvature_gauge_covariance", 1e-10, gauge_covariance},
	    {"curvature_horizontal", 1e-12, curvature_horizontal},
	    {"curvature_matches_field_strength", 1e-11, field_strength},
	    {"curvature_decomposition_sum", 1e-10, decomposition_sum},
	    {"descent_monotone", 0.0, descent_monotone},
	    {"dhat_squared_zero", 1e-12, dhat_squared},
	    {"dzero_flat", 1e-11, dzero_flat},
	    {"dzero_reference_independent", 1e-12, dzero_reference},
	    {"flat_points_exact", 0.0, flat_points},
	    {"gradient_directional_fd", 1e-6, gradient_directional},
	    {"graded_leibniz", 1e-12, graded_leibniz},
	    {"hermitian_metric_compatible", 1e-11, hermitian_metric},
	    {"higgs_reference_independent", 1e-12, higgs_reference},
	    {"higgs_reconstruction", 1e-11, reconstruction},
	    {"infinitesimal_gauge_action", 1e-11, infinitesimal_gauge},
	    {"koszul_formula", 1e-11, koszul},
	    {"left_connection_axioms", 1e-11, left_connection_axioms},
	    {"shifted_splitting_curvature", 1e-11, shifted_curvature},
	    {"sl_basis_structure", 1e-12, sl_structure},
	    {"structure_equation", 1e-12, structure_equation},
	    {"su_connection_predicates", 0.0, su_predicates},
	    {"transition_gluing", 1e-10, transition_gluing},
	    {"transition_trace", 1e-12, transition_trace},
	    {"trigpoly_product_commutative", 1e-12, product_commutative},
	    {"trigpoly_product_leibniz", 1e-12, product_leibniz},
	};
	std::sort(s.begin(), s.end(),
	          [](auto const &a, auto const &b) { return a.name < b.name; });
	return s;
}

struct TrialOutcome
{
	double residual = 0;
	std::string error;
};

TrialOutcome run_trial(Invariant const &inv, std::uint64_t seed, int t, int n, int d)
{
	Rng rng(seed, stream_id(inv.name) + static_cast<std::uint64_t>(t));
	try
	{
		double r = inv.trial(rng, n, d);
		return {std::isnan(r) ? kInf : r, {}};
	}
	catch (std::exception const &e)
	{
		return {kInf, e.what()};
	}
}

VerifyReport collect(int n, int d, std::uint64_t seed, int trials,
                     std::vector<TrialOutcome> const &outcomes)
{
	auto const &suite = invariant_suite();
	VerifyReport rep{n, d, seed, trials, {}};
	for (size_t i = 0; i < suite.size(); ++i)
	{
		InvariantResult r{suite[i].name, suite[i].tolerance, 0, trials, true, {}};
		for (int t = 0; t < trials; ++t)
		{
			auto const &o = outcomes[i * trials + t];
			r.max_residual = std::max(r.max_residual, o.residual);
			if (r.error.empty() && !o.error.empty())
				r.error = o.error;
		}
		r.pass = r.error.empty() && r.max_residual <= r.tolerance;
		rep.results.push_back(std::move(r));
	}
	return rep;
}

void check_sizes(int n, int d, int trials)
{
	if (n < 2)
		throw std::invalid_argument("n must be at least 2");
	if (d < 1 || d > kMaxDim)
		throw std::invalid_argument("d must lie in [1, 4]");
	if (d + n * n - 1 > 64)
		throw std::invalid_argument("n too large for the covector mask");
	if (trials < 0)
		throw std::invalid_argument("trials must be non-negative");
}

} // namespace

std::vector<Invariant> const &invariant_suite()
{
	static auto const suite = build_suite();
	return suite;
}

bool VerifyReport::pass() const
{
	return std::all_of(results.begin(), results.end(),
	                   [](auto const &r) { return r.pass; });
}

VerifyReport run_verify(int n, int d, std::uint64_t seed, int trials)
{
	check_sizes(n, d, trials);
	auto const &suite = invariant_suite();
	sl_basis(n);
	long total = static_cast<long>(suite.size()) * trials;
	std::vector<TrialOutcome> outcomes(total);
#pragma omp parallel for schedule(dynamic)
	for (long i = 0; i < total; ++i)
		outcomes[i] = run_trial(suite[i / trials], seed, static_cast<int>(i % trials), n, d);
	return collect(n, d, seed, trials, outcomes);
}

VerifyReport run_verify_serial(int n, int d, std::uint64_t seed, int trials)
{
	check_sizes(n, d, trials);
	auto const &suite = invariant_suite();
	std::vector<TrialOutcome> outcomes;
	for (auto const &inv : suite)
		for (int t = 0; t < trials; ++t)
			outcomes.push_back(run_trial(inv, seed, t, n, d));
	return collect(n, d, seed, trials, outcomes);
}

} // namespace ncg
