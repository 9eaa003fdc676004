// Batch front end: invariant suite, curvature reports, gauge transforms and
// descent to vacua. Exit status 0 on pass, 1 on an invariant failure, 2 on
// bad input.

#include "ncg/json_io.hpp"
#include "ncg/verify.hpp"

#include "CLI11.hpp"
#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace ncg;

namespace {

constexpr double kRoundTripTol = 1e-10;

struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

std::string utc_now()
{
	auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
	std::tm tm{};
	gmtime_r(&t, &tm);
	char buf[32];
	std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
	return buf;
}

void emit(std::string const &out, json const &j)
{
	if (out.empty() || out == "-")
		std::cout << j.dump(2) << '\n';
	else
		write_json_file(out, j);
}

json manifest(std::string const &command, std::vector<std::string> const &inputs,
              std::optional<std::uint64_t> seed, std::string const &out)
{
	json m{{"command", command}, {"inputs", inputs}, {"out", out}};
	m["seed"] = seed ? json(*seed) : json(nullptr);
	return m;
}

std::string direction_label(int c, int d)
{
	return c < d ? fmt::format("partial_{}", c) : fmt::format("ad_E_{}", c - d);
}

int cmd_verify(int n, int d, std::uint64_t seed, int trials, std::string const &out)
{
	auto started = utc_now();
	VerifyReport rep;
	try
	{
		rep = run_verify(n, d, seed, trials);
	}
	catch (std::invalid_argument const &e)
	{
		throw InputError(e.what());
	}
	json inv = json::object();
	for (auto const &r : rep.results)
	{
		json e{{"max_residual", r.max_residual},
		       {"tolerance", r.tolerance},
		       {"trials", r.trials},
		       {"pass", r.pass}};
		if (!r.error.empty())
			e["error"] = r.error;
		inv[r.name] = e;
		if (!r.pass)
			fmt::print(stderr, "FAIL {} residual {:.3e} tolerance {:.1e}{}\n", r.name,
			           r.max_residual, r.tolerance, r.error.empty() ? "" : " (" + r.error + ")");
	}
	json report{{"manifest", manifest("verify", {}, seed, out)},
	            {"n", n},
	            {"d", d},
	            {"trials", trials},
	            {"invariants", inv},
	            {"pass", rep.pass()},
	            {"timestamps", {{"started", started}, {"finished", utc_now()}}}};
	emit(out, report);
	fmt::print(stderr, "{} invariants, {}\n", rep.results.size(), rep.pass() ? "all pass" : "FAILED");
	return rep.pass() ? 0 : 1;
}

ConnectionFile load_connection(std::string const &path)
{
	try
	{
		return connection_from_json(read_json_file(path));
	}
	catch (std::exception const &e)
	{
		throw InputError(e.what());
	}
}

int cmd_curvature(std::string const &path, std::string const &out)
{
	auto started = utc_now();
	auto file = load_connection(path);
	auto omega = file.omega();
	auto R = curvature(omega).pruned();
	int d = omega.d();

	json comps = json::array();
	for (auto const &[mask, c] : R.terms())
	{
		std::vector<int> dirs;
		for (int b = 0; b < R.covector_count(); ++b)
			if (mask >> b & 1)
				dirs.push_back(b);
		double scale = std::sqrt(orthonormal_weight(R, mask));
		comps.push_back({{"P", direction_label(dirs[0], d)},
		                 {"Q", direction_label(dirs[1], d)},
		                 {"value", to_json(c * cplx(scale))}});
	}

	auto ref = ConnectionForm(-canonical_theta(omega.n(), d));
	auto dec = decompose_omega(omega, ref);
	auto res = higgs_conditions(dec.higgs, ref);
	json a = json::array(), B = json::array();
	for (auto const &x : dec.higgs.a)
		a.push_back(to_json(x));
	for (auto const &x : dec.higgs.B)
		B.push_back(to_json(x));

	double norm = 0;
	for (auto const &[mask, c] : R.terms())
		norm = std::max(norm, std::sqrt(orthonormal_weight(R, mask)) * c.coef_norm());

	json report{{"manifest", manifest("curvature", {path}, std::nullopt, out)},
	            {"n", omega.n()},
	            {"d", d},
	            {"curvature", comps},
	            {"curvature_norm", norm},
	            {"action", ymh_action(omega)},
	            {"decomposition", {{"reference", "-i theta"}, {"a", a}, {"B", B}}},
	            {"r1", res.r1},
	            {"r2", res.r2},
	            {"timestamps", {{"started", started}, {"finished", utc_now()}}}};
	emit(out, report);
	return 0;
}

/// omega^U split back into potential and extra parts:
///   A'_mu = U* A_mu U + theta(U* d_mu U)
///   extra' = U* extra U + sum_mu Tr(U* d_mu U) / n dx^mu
ConnectionFile gauge_split(ConnectionFile const &c, AlgElement const &u)
{
	auto ustar = u.star();
	ConnectionFile r{c.n, c.d, {}, ustar * c.extra * u};
	for (int mu = 0; mu < c.d; ++mu)
	{
		auto inhom = ustar * u.partial(mu);
		r.A.push_back(ustar * c.A[mu] * u + inhom.theta_project());
		auto tr = inhom.trace() * cplx(1.0 / c.n);
		if (!tr.is_zero())
			r.extra.add(r.extra.dx(mu), AlgElement::central(c.n, tr));
	}
	return r;
}

int cmd_gauge(std::string const &conn_path, std::string const &gauge_path,
              bool require_special, std::string const &out)
{
	auto file = load_connection(conn_path);
	AlgElement u;
	try
	{
		u = alg_from_json(read_json_file(gauge_path));
	}
	catch (std::exception const &e)
	{
		throw InputError(e.what());
	}
	if (u.n() != file.n || u.d() != file.d)
		throw InputError("gauge element shape differs from the connection");
	auto group = require_special ? GaugeGroup::special_unitary : GaugeGroup::unitary;
	auto omega = file.omega();
	ConnectionForm transformed;
	try
	{
		transformed = gauge_transform(omega, u, group);
	}
	catch (std::domain_error const &e)
	{
		throw InputError(e.what());
	}
	auto result = gauge_split(file, u);
	double split_res = (result.omega().form() - transformed.form()).coef_norm();
	auto back = gauge_transform(transformed, u.star(), group);
	double round_trip = (back.form() - omega.form()).coef_norm();

	json checks{{"split_residual", split_res},
	            {"round_trip_residual", round_trip},
	            {"unitarity_residual", unitarity_residual(u)},
	            {"det_residual", det_residual(u)}};
	bool ok = split_res <= kRoundTripTol && round_trip <= kRoundTripTol;
	emit(out, to_json(result));
	fmt::print(stderr, "{}\n", checks.dump());
	return ok ? 0 : 1;
}

int cmd_minimize(std::string const &conn_path, std::string const &config_path,
                 std::optional<int> cutoff, std::optional<int> max_iters,
                 std::optional<double> grad_tol, std::string const &out,
                 std::string trajectory_path)
{
	auto started = utc_now();
	auto file = load_connection(conn_path);
	ActionConfig cfg;
	cfg.n = file.n;
	cfg.d = file.d;
	try
	{
		if (!config_path.empty())
			cfg = config_from_json(read_json_file(config_path), cfg);
		if (cutoff)
			cfg.fourier_cutoff = *cutoff;
		if (max_iters)
			cfg.max_iters = *max_iters;
		if (grad_tol)
			cfg.grad_tol = *grad_tol;
		if (cfg.n != file.n || cfg.d != file.d)
			throw std::invalid_argument("config n, d differ from the connection");
		cfg.validate();
	}
	catch (std::exception const &e)
	{
		throw InputError(e.what());
	}

	MinimizeResult res;
	try
	{
		res = minimize(file.omega(), cfg);
	}
	catch (NonFiniteAction const &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return 1;
	}
	catch (std::invalid_argument const &e)
	{
		throw InputError(e.what());
	}

	std::vector<std::string> inputs{conn_path};
	if (!config_path.empty())
		inputs.push_back(config_path);
	std::vector<AlgElement> zero_A(cfg.d, AlgElement(cfg.n, cfg.d));
	ConnectionFile final_file{cfg.n, cfg.d, zero_A,
	                          res.omega.form() - alpha_from_A(zero_A).form()};
	json report{{"manifest", manifest("minimize", inputs, std::nullopt, out)},
	            {"config", to_json(cfg)},
	            {"report", to_json(res.report)},
	            {"omega", to_json(final_file)},
	            {"timestamps", {{"started", started}, {"finished", utc_now()}}}};
	emit(out, report);

	if (trajectory_path.empty() && !out.empty() && out != "-")
		trajectory_path = out + ".trajectory.csv";
	if (!trajectory_path.empty())
	{
		std::ofstream csv(trajectory_path);
		if (!csv)
			throw InputError("cannot write " + trajectory_path);
		write_trajectory_csv(csv, res.trajectory);
	}
	fmt::print(stderr, "{} after {} iterations: action {:.3e} grad {:.3e} r1 {:.3e} r2 {:.3e}\n",
	           res.report.status, res.report.iterations, res.report.action,
	           res.report.grad_norm, res.report.r1, res.report.r2);
	return res.report.converged ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Noncommutative gauge geometry on C^inf(T^d) (x) M_n(C)"};
	app.require_subcommand(1);

	int n = 2, d = 1, trials = 50;
	std::uint64_t seed = 0;
	std::string out;
	auto verify = app.add_subcommand("verify", "run the randomised invariant suite");
	verify->add_option("--n", n, "matrix size")->capture_default_str();
	verify->add_option("--d", d, "torus dimension")->capture_default_str();
	verify->add_option("--seed", seed, "seed for all random instances")->capture_default_str();
	verify->add_option("--trials", trials, "random instances per invariant")->capture_default_str();
	verify->add_option("--out", out, "report path (default stdout)");

	std::string conn, second;
	auto curv = app.add_subcommand("curvature", "curvature, Higgs decomposition and residuals");
	curv->add_option("connection", conn, "connection JSON")->required();
	curv->add_option("--out", out, "report path (default stdout)");

	bool require_special = false;
	auto gauge = app.add_subcommand("gauge", "apply a gauge transformation");
	gauge->add_option("connection", conn, "connection JSON")->required();
	gauge->add_option("gauge", second, "gauge element JSON")->required();
	gauge->add_flag("--require-special", require_special, "reject det U != 1");
	gauge->add_option("--out", out, "transformed connection path (default stdout)");

	std::optional<int> cutoff, max_iters;
	std::optional<double> grad_tol;
	std::string trajectory;
	auto mini = app.add_subcommand("minimize", "gradient descent on the action");
	mini->add_option("connection", conn, "starting connection JSON")->required();
	mini->add_option("config", second, "action config JSON");
	mini->add_option("--cutoff", cutoff, "Fourier cutoff of the parametrisation");
	mini->add_option("--max-iters", max_iters, "iteration limit");
	mini->add_option("--grad-tol", grad_tol, "stop when the gradient norm is below");
	mini->add_option("--out", out, "report path (default stdout)");
	mini->add_option("--trajectory", trajectory, "trajectory CSV (default <out>.trajectory.csv)");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try
	{
		if (*verify)
			return cmd_verify(n, d, seed, trials, out);
		if (*curv)
			return cmd_curvature(conn, out);
		if (*gauge)
			return cmd_gauge(conn, second, require_special, out);
		return cmd_minimize(conn, second, cutoff, max_iters, grad_tol, out, trajectory);
	}
	catch (std::exception const &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return 2;
	}
}
