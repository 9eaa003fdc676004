#include "doctest.h"

#include "ncg/json_io.hpp"
#include "ncg/random.hpp"
#include "support.hpp"

#include <sstream>

using namespace ncg;
using ncg::test::pauli;

TEST_SUITE("json_io")
{
	TEST_CASE("trigpoly round trip and schema")
	{
		Rng rng(61, 0);
		RandomShape s{2, 2, 2, 4, 1.0};
		for (int t = 0; t < 10; ++t)
		{
			auto f = random_trigpoly(rng, s);
			CHECK(trigpoly_from_json(to_json(f)) == f);
			CHECK(trigpoly_from_json(json::parse(to_json(f).dump())) == f);
		}
		auto j = json::parse(R"({"dim": 1, "terms": [{"k": [1], "re": 0.5, "im": 0}, {"k": [-1], "re": 0.5, "im": 0}]})");
		auto c = trigpoly_from_json(j);
		CHECK(c == TrigPoly::cos_mode(1, ncg::test::freq(1)));
	}

	TEST_CASE("matrix, element and form round trips")
	{
		Rng rng(62, 0);
		RandomShape s{3, 2, 1, 2, 1.0};
		auto m = pauli(2);
		CHECK(matrix_from_json(to_json(m)) == m);
		for (int t = 0; t < 10; ++t)
		{
			auto a = random_element(rng, s);
			CHECK(alg_from_json(to_json(a)) == a);
			auto w = random_form(rng, s, 2, 4);
			auto back = form_from_json(to_json(w));
			CHECK((back - w).is_zero());
			CHECK(back.degree() == 2);
		}
	}

	TEST_CASE("connection files")
	{
		Rng rng(63, 0);
		RandomShape s{2, 2, 1, 2, 0.5};
		ConnectionFile c{2, 2, random_potential(rng, s), random_one_form(rng, s)};
		auto back = connection_from_json(to_json(c));
		CHECK(back.A == c.A);
		CHECK((back.omega().form() - c.omega().form()).is_zero());
		CHECK((c.omega().form() - (alpha_from_A(c.A).form() + c.extra)).is_zero());

		auto j = to_json(c);
		j["A"][0] = to_json(AlgElement::constant(pauli(1), 2));
		CHECK_THROWS_AS(connection_from_json(j), std::invalid_argument);
		j = to_json(c);
		j["A"].erase(1);
		CHECK_THROWS_AS(connection_from_json(j), std::invalid_argument);
		j = to_json(c);
		j.erase("extra");
		CHECK_THROWS_AS(connection_from_json(j), std::invalid_argument);
		j = to_json(c);
		j["n"] = 1;
		CHECK_THROWS_AS(connection_from_json(j), std::invalid_argument);
	}

	TEST_CASE("malformed input is rejected")
	{
		CHECK_THROWS_AS(trigpoly_from_json(json::parse(R"({"terms": []})")), std::invalid_argument);
		CHECK_THROWS_AS(trigpoly_from_json(json::parse(R"({"dim": 1, "terms": [{"k": [1, 2], "re": 1, "im": 0}]})")),
		                std::invalid_argument);
		CHECK_THROWS_AS(trigpoly_from_json(json::parse(R"({"dim": 1, "terms": [{"k": [1], "re": "x", "im": 0}]})")),
		                std::invalid_argument);
		CHECK_THROWS_AS(alg_from_json(json::parse(R"({"n": 2, "d": 1, "entries": []})")), std::invalid_argument);
		CHECK_THROWS_AS(form_from_json(json::parse(
		                    R"({"n": 2, "d": 1, "degree": 1, "terms": [{"dx": [3], "theta": [], "coef": {}}]})")),
		                std::invalid_argument);
		CHECK_THROWS_AS(matrix_from_json(json::parse("[[1, 2], [3, 4]]")), std::invalid_argument);
		CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::invalid_argument);
	}

	TEST_CASE("config parsing")
	{
		auto cfg = config_from_json(json::parse(R"({"fourier_cutoff": 0, "grad_tol": 1e-9})"));
		CHECK(cfg.fourier_cutoff == 0);
		CHECK(cfg.grad_tol == 1e-9);
		CHECK(cfg.n == 2);
		auto back = config_from_json(to_json(cfg));
		CHECK(to_json(back) == to_json(cfg));
		CHECK_THROWS_AS(config_from_json(json::parse(R"({"stepsize": 1})")), std::invalid_argument);
		CHECK_THROWS_AS(config_from_json(json::parse(R"({"step": "big"})")), std::invalid_argument);
		CHECK_THROWS_AS(config_from_json(json::parse("[]")), std::invalid_argument);
	}

	TEST_CASE("reports and trajectories")
	{
		VacuumReport r;
		r.action = 1.5;
		r.status = "converged";
		auto j = to_json(r);
		CHECK(j["action"] == 1.5);
		CHECK(j["status"] == "converged");
		for (auto key : {"grad_norm", "curvature_norm", "r1", "r2", "iterations", "converged"})
			CHECK(j.contains(key));

		std::ostringstream os;
		write_trajectory_csv(os, {{0, 1.0, 2.0, 0.0}, {1, 0.1, 0.5, 0.25}});
		CHECK(os.str() == "iter,action,grad_norm,step\n0,1,2,0\n1,0.10000000000000001,0.5,0.25\n");
	}
}
