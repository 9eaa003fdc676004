#include "ncg/json_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ncg {

namespace {

[[noreturn]] void fail(std::string const &what)
{
	throw std::invalid_argument(what);
}

json const &field(json const &j, char const *key, char const *where)
{
	if (!j.is_object())
		fail(std::string(where) + ": expected an object");
	auto it = j.find(key);
	if (it == j.end())
		fail(std::string(where) + ": missing \"" + key + "\"");
	return *it;
}

int int_field(json const &j, char const *key, char const *where)
{
	auto const &v = field(j, key, where);
	if (!v.is_number_integer())
		fail(std::string(where) + ": \"" + key + "\" must be an integer");
	return v.get<int>();
}

double number(json const &v, char const *where)
{
	if (!v.is_number())
		fail(std::string(where) + ": expected a number");
	return v.get<double>();
}

json const &array_field(json const &j, char const *key, char const *where)
{
	auto const &v = field(j, key, where);
	if (!v.is_array())
		fail(std::string(where) + ": \"" + key + "\" must be an array");
	return v;
}

} // namespace

json to_json(TrigPoly const &f)
{
	json terms = json::array();
	for (auto const &[k, c] : f.terms())
	{
		json kk = json::array();
		for (int mu = 0; mu < f.dim(); ++mu)
			kk.push_back(k[mu]);
		terms.push_back({{"k", kk}, {"re", c.real()}, {"im", c.imag()}});
	}
	return {{"dim", f.dim()}, {"terms", terms}};
}

TrigPoly trigpoly_from_json(json const &j)
{
	int dim = int_field(j, "dim", "TrigPoly");
	if (dim < 1 || dim > kMaxDim)
		fail("TrigPoly: dim out of range");
	std::vector<TrigPoly::Term> terms;
	for (auto const &t : array_field(j, "terms", "TrigPoly"))
	{
		auto const &k = array_field(t, "k", "TrigPoly term");
		if (static_cast<int>(k.size()) != dim)
			fail("TrigPoly term: k has wrong length");
		Freq freq{};
		for (int mu = 0; mu < dim; ++mu)
		{
			if (!k[mu].is_number_integer())
				fail("TrigPoly term: k must be integers");
			freq[mu] = k[mu].get<int>();
		}
		double re = number(field(t, "re", "TrigPoly term"), "TrigPoly term re");
		double im = number(field(t, "im", "TrigPoly term"), "TrigPoly term im");
		terms.emplace_back(freq, cplx(re, im));
	}
	return TrigPoly::from_terms(dim, std::move(terms), 0.0);
}

json to_json(Matrix const &m)
{
	json out = json::array();
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			out.push_back({m(i, j).real(), m(i, j).imag()});
	return out;
}

Matrix matrix_from_json(json const &j)
{
	if (!j.is_array())
		fail("matrix: expected an array of [re, im] pairs");
	auto size = j.size();
	int n = 0;
	while (static_cast<size_t>(n * n) < size)
		++n;
	if (static_cast<size_t>(n * n) != size || n == 0)
		fail("matrix: entry count is not a positive square");
	Matrix m(n, n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			auto const &p = j[i * n + k];
			if (!p.is_array() || p.size() != 2)
				fail("matrix: entries must be [re, im] pairs");
			m(i, k) = {number(p[0], "matrix"), number(p[1], "matrix")};
		}
	return m;
}

json to_json(AlgElement const &a)
{
	json entries = json::array();
	for (auto const &f : a.entries())
		entries.push_back(to_json(f));
	return {{"n", a.n()}, {"d", a.d()}, {"entries", entries}};
}

AlgElement alg_from_json(json const &j)
{
	int n = int_field(j, "n", "AlgElement");
	int d = int_field(j, "d", "AlgElement");
	if (n < 1 || d < 1 || d > kMaxDim)
		fail("AlgElement: n or d out of range");
	auto const &entries = array_field(j, "entries", "AlgElement");
	if (entries.size() != static_cast<size_t>(n * n))
		fail("AlgElement: expected n*n entries");
	AlgElement a(n, d);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			auto f = trigpoly_from_json(entries[i * n + k]);
			if (f.dim() != d)
				fail("AlgElement: entry dim differs from d");
			a(i, k) = std::move(f);
		}
	return a;
}

json to_json(NCForm const &w)
{
	json terms = json::array();
	for (auto const &[mask, c] : w.terms())
	{
		json dx = json::array(), th = json::array();
		for (int b = 0; b < w.covector_count(); ++b)
			if (mask >> b & 1)
				(b < w.d() ? dx : th).push_back(b < w.d() ? b : b - w.d());
		terms.push_back({{"dx", dx}, {"theta", th}, {"coef", to_json(c)}});
	}
	return {{"n", w.n()}, {"d", w.d()}, {"degree", w.degree()}, {"terms", terms}};
}

NCForm form_from_json(json const &j)
{
	int n = int_field(j, "n", "NCForm");
	int d = int_field(j, "d", "NCForm");
	int degree = int_field(j, "degree", "NCForm");
	if (n < 2 || d < 1 || d > kMaxDim)
		fail("NCForm: n or d out of range");
	if (d + n * n - 1 > 64)
		fail("NCForm: too many covectors");
	NCForm w(n, d, degree);
	for (auto const &t : array_field(j, "terms", "NCForm"))
	{
		CovectorMask mask = 0;
		auto put = [&](int bit) {
			CovectorMask b = CovectorMask{1} << bit;
			if (mask & b)
				fail("NCForm term: repeated covector");
			mask |= b;
		};
		for (auto const &v : array_field(t, "dx", "NCForm term"))
		{
			if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= d)
				fail("NCForm term: dx index out of range");
			put(v.get<int>());
		}
		for (auto const &v : array_field(t, "theta", "NCForm term"))
		{
			if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n * n - 1)
				fail("NCForm term: theta index out of range");
			put(d + v.get<int>());
		}
		if (degree_of(mask) != degree)
			fail("NCForm term: covector count differs from degree");
		auto c = alg_from_json(field(t, "coef", "NCForm term"));
		if (c.n() != n || c.d() != d)
			fail("NCForm term: coefficient shape differs from the form");
		w.add(mask, c);
	}
	return w;
}

ConnectionForm ConnectionFile::omega() const
{
	return alpha_from_A(A) + extra;
}

json to_json(ConnectionFile const &c)
{
	json a = json::array();
	for (auto const &x : c.A)
		a.push_back(to_json(x));
	return {{"n", c.n}, {"d", c.d}, {"A", a}, {"extra", to_json(c.extra)}};
}

ConnectionFile connection_from_json(json const &j)
{
	ConnectionFile c;
	c.n = int_field(j, "n", "connection");
	c.d = int_field(j, "d", "connection");
	if (c.n < 2 || c.d < 1 || c.d > kMaxDim)
		fail("connection: n or d out of range");
	for (auto const &x : array_field(j, "A", "connection"))
	{
		auto a = alg_from_json(x);
		if (a.n() != c.n || a.d() != c.d)
			fail("connection: A component shape differs from n, d");
		if (!a.is_traceless() || !a.is_antihermitian())
			fail("connection: A components must be traceless and antihermitian");
		c.A.push_back(std::move(a));
	}
	if (static_cast<int>(c.A.size()) != c.d)
		fail("connection: A needs one component per axis");
	c.extra = form_from_json(field(j, "extra", "connection"));
	if (c.extra.degree() != 1 || c.extra.n() != c.n || c.extra.d() != c.d)
		fail("connection: extra must be a 1-form of the same shape");
	return c;
}

json to_json(ActionConfig const &cfg)
{
	return {{"n", cfg.n},
	        {"d", cfg.d},
	        {"fourier_cutoff", cfg.fourier_cutoff},
	        {"step", cfg.step},
	        {"max_iters", cfg.max_iters},
	        {"grad_tol", cfg.grad_tol},
	        {"restrict_compatible", cfg.restrict_compatible}};
}

ActionConfig config_from_json(json const &j, ActionConfig cfg)
{
	if (!j.is_object())
		fail("config: expected an object");
	try
	{
		for (auto const &[key, v] : j.items())
		{
			if (key == "n")
				cfg.n = v.get<int>();
			else if (key == "d")
				cfg.d = v.get<int>();
			else if (key == "fourier_cutoff")
				cfg.fourier_cutoff = v.get<int>();
			else if (key == "step")
				cfg.step = v.get<double>();
			else if (key == "max_iters")
				cfg.max_iters = v.get<int>();
			else if (key == "grad_tol")
				cfg.grad_tol = v.get<double>();
			else if (key == "restrict_compatible")
				cfg.restrict_compatible = v.get<bool>();
			else
				fail("config: unknown key \"" + key + "\"");
		}
	}
	catch (json::exception const &e)
	{
		fail(std::string("config: ") + e.what());
	}
	return cfg;
}

json to_json(VacuumReport const &r)
{
	return {{"action", r.action},       {"grad_norm", r.grad_norm},
	        {"curvature_norm", r.curvature_norm}, {"r1", r.r1},
	        {"r2", r.r2},               {"iterations", r.iterations},
	        {"converged", r.converged}, {"status", r.status}};
}

void write_trajectory_csv(std::ostream &os, std::vector<TrajectoryPoint> const &traj)
{
	os << "iter,action,grad_norm,step\n";
	auto old = os.precision(17);
	for (auto const &p : traj)
		os << p.iter << ',' << p.action << ',' << p.grad_norm << ',' << p.step << '\n';
	os.precision(old);
}

json read_json_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		fail("cannot open " + path);
	try
	{
		return json::parse(in);
	}
	catch (json::parse_error const &e)
	{
		fail(path + ": " + e.what());
	}
}

void write_json_file(std::string const &path, json const &j)
{
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write " + path);
	out << j.dump(2) << '\n';
}

} // namespace ncg
