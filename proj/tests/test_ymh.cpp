#include "doctest.h"

#include "ncg/random.hpp"
#include "ncg/ymh.hpp"
#include "support.hpp"

#include <cmath>

using namespace ncg;
using ncg::test::freq;
using ncg::test::pauli;

namespace {

ConnectionForm flat(int n, int d)
{
	return ConnectionForm(-canonical_theta(n, d));
}

ConnectionForm theta_perturbed(std::vector<std::pair<int, Matrix>> const &shifts, int n = 2, int d = 1)
{
	auto w = -canonical_theta(n, d);
	for (auto const &[a, m] : shifts)
		w.add(w.theta(a), AlgElement::constant(m, d));
	return ConnectionForm(w);
}

std::vector<double> random_params(Rng &rng, size_t size, double scale)
{
	std::vector<double> p(size);
	for (auto &v : p)
		v = rng.uniform(-scale, scale);
	return p;
}

double fd_component(ParameterSpace const &space, std::vector<double> p, size_t i, double h)
{
	double x = p[i];
	p[i] = x + h;
	double up = ymh_action(space.assemble(p));
	p[i] = x - h;
	double down = ymh_action(space.assemble(p));
	return (up - down) / (2 * h);
}

} // namespace

TEST_SUITE("ymh")
{
	TEST_CASE("action at flat points")
	{
		CHECK(ymh_action(ConnectionForm::zero(2, 1)) == 0.0);
		CHECK(ymh_action(flat(2, 1)) == 0.0);
		CHECK(ymh_action(flat(3, 2)) == 0.0);
	}

	TEST_CASE("action of constant theta perturbations")
	{
		// the curvature of -i theta + eps s3 theta^3 has R(1,2) = 2i eps s3
		// and R(2,3), R(1,3) vanishing; weight 1/4 per inner pair gives
		// S = 2 * Tr((2 eps)^2) / 4 = 2 eps^2
		for (double eps : {0.1, 0.5, 1.0, -0.3})
		{
			auto w = theta_perturbed({{2, eps * pauli(3)}});
			CHECK(ymh_action(w) == doctest::Approx(2 * eps * eps).epsilon(1e-13));
			auto both = theta_perturbed({{2, eps * pauli(3)}, {0, eps * pauli(1)}});
			double e2 = eps * eps;
			CHECK(ymh_action(both) == doctest::Approx(4 * e2 + 2 * e2 * e2).epsilon(1e-13));
		}
		// a central shift c 1 on theta^2 survives only through -C^2_13 B_2:
		// R(1,3) = 2i c 1, Tr(R* R) = 8 c^2, weight 1/4, so S = 2 c^2
		CHECK(ymh_action(theta_perturbed({{1, 0.7 * Matrix::Identity(2, 2)}})) ==
		      doctest::Approx(2 * 0.49).epsilon(1e-13));
	}

	TEST_CASE("action is nonnegative, zero exactly when curvature is")
	{
		Rng rng(51, 0);
		for (int t = 0; t < 20; ++t)
		{
			RandomShape s{2, rng.integer(1, 2), 1, 2, 0.5};
			auto w = random_su_connection(rng, s) + random_one_form(rng, s);
			double S = ymh_action(w);
			CHECK(S >= 0.0);
			CHECK((S == 0.0) == curvature(w).is_zero());
			CHECK(action_from_curvature(curvature(w)) == S);
		}
		// any SU connection with a flat potential has zero action
		auto alpha = alpha_from_A(std::vector{AlgElement(2, 2), AlgElement(2, 2)});
		CHECK(ymh_action(alpha) == 0.0);
	}

	TEST_CASE("action is gauge invariant")
	{
		Rng rng(52, 0);
		for (int t = 0; t < 10; ++t)
		{
			RandomShape s{2, 1, 1, 2, 0.5};
			auto w = random_su_connection(rng, s) + random_one_form(rng, s);
			auto u = random_unitary(rng, s, false);
			double S = ymh_action(w);
			CHECK(std::abs(ymh_action(gauge_transform(w, u)) - S) < 1e-9 * std::max(1.0, S));
		}
	}

	TEST_CASE("parameter space shapes")
	{
		ActionConfig cfg;
		CHECK(ParameterSpace(cfg).size() == 48);
		cfg.restrict_compatible = false;
		CHECK(ParameterSpace(cfg).size() == 96);
		cfg.fourier_cutoff = 0;
		CHECK(ParameterSpace(cfg).size() == 32);
		cfg.restrict_compatible = true;
		CHECK(ParameterSpace(cfg).size() == 16);
	}

	TEST_CASE("assemble and project are inverse")
	{
		Rng rng(53, 0);
		for (bool restricted : {true, false})
		{
			ActionConfig cfg;
			cfg.d = 2;
			cfg.restrict_compatible = restricted;
			ParameterSpace space(cfg);
			auto p = random_params(rng, space.size(), 1.0);
			auto w = space.assemble(p);
			auto back = space.project(w);
			REQUIRE(back.size() == p.size());
			for (size_t i = 0; i < p.size(); ++i)
				CHECK(std::abs(back[i] - p[i]) < 1e-12);
			if (restricted)
				CHECK(is_compatible_hermitian(w).compatible);
		}
		ParameterSpace space(ActionConfig{});
		CHECK(space.project(ConnectionForm::zero(2, 1)).size() == space.size());
		CHECK(euclidean_norm(space.project(flat(2, 1))) == 0.0);
		auto high = -canonical_theta(2, 1);
		high.add(high.dx(0), AlgElement::from_matrix(pauli(1), TrigPoly::cos_mode(1, freq(2))));
		CHECK_THROWS_AS(space.project(ConnectionForm(high)), std::invalid_argument);
		// a hermitian dx part violates the compatibility constraint
		auto herm = -canonical_theta(2, 1);
		herm.add(herm.dx(0), AlgElement::constant(pauli(1), 1));
		CHECK_THROWS_AS(space.project(ConnectionForm(herm)), std::invalid_argument);
	}

	TEST_CASE("gradient vanishes at flat points")
	{
		for (bool restricted : {true, false})
		{
			ActionConfig cfg;
			cfg.restrict_compatible = restricted;
			ParameterSpace space(cfg);
			CHECK(euclidean_norm(ymh_gradient(flat(2, 1), space)) == 0.0);
			CHECK(euclidean_norm(ymh_gradient(ConnectionForm::zero(2, 1), space)) < 1e-14);
		}
	}

	TEST_CASE("gradient matches central differences")
	{
		Rng rng(54, 0);
		for (bool restricted : {true, false})
		{
			ActionConfig cfg;
			cfg.restrict_compatible = restricted;
			ParameterSpace space(cfg);
			for (int t = 0; t < 3; ++t)
			{
				auto p = random_params(rng, space.size(), 0.5);
				auto g = ymh_gradient(space.assemble(p), space);
				std::vector<double> fd(p.size());
				for (size_t i = 0; i < p.size(); ++i)
					fd[i] = fd_component(space, p, i, 1e-5);
				std::vector<double> diff(p.size());
				for (size_t i = 0; i < p.size(); ++i)
					diff[i] = g[i] - fd[i];
				CHECK(euclidean_norm(diff) / euclidean_norm(fd) < 1e-6);
			}
		}
	}

	TEST_CASE("parallel and serial gradients agree")
	{
		Rng rng(55, 0);
		ActionConfig cfg;
		cfg.d = 2;
		ParameterSpace space(cfg);
		auto w = space.assemble(random_params(rng, space.size(), 0.5));
		CHECK(ymh_gradient(w, space) == ymh_gradient_serial(w, space));
	}

	TEST_CASE("configuration validation")
	{
		ActionConfig ok;
		CHECK_NOTHROW(ok.validate());
		auto bad = [](auto mutate) {
			ActionConfig c;
			mutate(c);
			return c;
		};
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.n = 1; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.d = 0; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.fourier_cutoff = -1; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.step = 0; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.grad_tol = -1; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(bad([](ActionConfig &c) { c.max_iters = -1; }).validate(), std::invalid_argument);
		CHECK_THROWS_AS(minimize(flat(2, 1), bad([](ActionConfig &c) { c.step = -1; })),
		                std::invalid_argument);
	}

	TEST_CASE("minimize from a flat start")
	{
		for (auto const &w0 : {ConnectionForm::zero(2, 1), flat(2, 1)})
		{
			auto res = minimize(w0, ActionConfig{});
			CHECK(res.report.converged);
			CHECK(res.report.iterations == 0);
			CHECK(res.report.action == 0.0);
			CHECK(res.report.r1 == 0.0);
			CHECK(res.report.r2 == 0.0);
			CHECK(res.trajectory.size() == 1);
		}
	}

	TEST_CASE("descent from perturbed flat connections reaches a horizontal vacuum")
	{
		Rng rng(56, 0);
		ActionConfig cfg;
		ParameterSpace space(cfg);
		for (int t = 0; t < 3; ++t)
		{
			auto p = random_params(rng, space.size(), 1.0);
			double scale = 0.1 * rng.uniform() / euclidean_norm(p);
			for (auto &v : p)
				v *= scale;
			auto res = minimize(space.assemble(p), cfg);
			CHECK(res.report.converged);
			CHECK(res.report.action < 1e-10);
			CHECK(res.report.grad_norm < 1e-8);
			CHECK(res.report.r1 < 1e-5);
			CHECK(res.report.r2 < 1e-5);
			for (size_t i = 1; i < res.trajectory.size(); ++i)
				CHECK(res.trajectory[i].action <= res.trajectory[i - 1].action);
		}
	}

	TEST_CASE("unrestricted descent from a large perturbation stays finite and monotone")
	{
		Rng rng(57, 0);
		ActionConfig cfg;
		cfg.restrict_compatible = false;
		cfg.max_iters = 200;
		ParameterSpace space(cfg);
		auto p = random_params(rng, space.size(), 1.0);
		auto res = minimize(space.assemble(p), cfg);
		auto const &r = res.report;
		for (double v : {r.action, r.grad_norm, r.curvature_norm, r.r1, r.r2})
			CHECK(std::isfinite(v));
		CHECK(r.action >= 0.0);
		CHECK(res.trajectory.front().action > r.action);
		for (size_t i = 1; i < res.trajectory.size(); ++i)
			CHECK(res.trajectory[i].action <= res.trajectory[i - 1].action);
		CHECK((r.status == "converged" || r.status == "max_iters" || r.status == "line_search_stalled"));
	}

	TEST_CASE("non-finite action is reported")
	{
		auto w = theta_perturbed({{2, 1e200 * pauli(3)}});
		CHECK_THROWS_AS(minimize(w, ActionConfig{}), NonFiniteAction);
	}

	TEST_CASE("vacuum report fields")
	{
		ParameterSpace space(ActionConfig{});
		auto w = theta_perturbed({{2, 0.2 * pauli(3)}});
		auto g = ymh_gradient(w, space);
		auto r = vacuum_report(w, g);
		CHECK(r.action == doctest::Approx(0.08).epsilon(1e-13));
		CHECK(r.grad_norm == euclidean_norm(g));
		CHECK(r.curvature_norm > 0.0);
		CHECK(euclidean_norm(std::vector<double>{3, 4}) == 5.0);
	}
}
