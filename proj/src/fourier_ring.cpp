#include "ncg/fourier_ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

void check_dim(int dim)
{
	if (dim < 1 || dim > kMaxDim)
		throw std::invalid_argument("torus dimension must be in [1, " +
		                            std::to_string(kMaxDim) + "], got " +
		                            std::to_string(dim));
}

void check_freq(int dim, Freq const &k)
{
	for (int mu = dim; mu < kMaxDim; ++mu)
		if (k[mu] != 0)
			throw std::invalid_argument("frequency has components past dim");
}

bool less_key(TrigPoly::Term const &a, TrigPoly::Term const &b)
{
	return a.first < b.first;
}

} // namespace

Freq negate(Freq k)
{
	for (auto &x : k)
		x = -x;
	return k;
}

TrigPoly::TrigPoly(int dim) : dim_(dim) { check_dim(dim); }

TrigPoly TrigPoly::constant(int dim, cplx c) { return mode(dim, Freq{}, c); }

TrigPoly TrigPoly::mode(int dim, Freq const &k, cplx c)
{
	TrigPoly f(dim);
	check_freq(dim, k);
	if (std::abs(c) >= kDropTol)
		f.terms_.emplace_back(k, c);
	return f;
}

TrigPoly TrigPoly::cos_mode(int dim, Freq const &k)
{
	return mode(dim, k, 0.5) + mode(dim, negate(k), 0.5);
}

TrigPoly TrigPoly::sin_mode(int dim, Freq const &k)
{
	return mode(dim, k, cplx(0, -0.5)) + mode(dim, negate(k), cplx(0, 0.5));
}

TrigPoly TrigPoly::from_terms(int dim, std::vector<Term> terms, double drop_tol)
{
	TrigPoly f(dim);
	for (auto const &t : terms)
		check_freq(dim, t.first);
	std::sort(terms.begin(), terms.end(), less_key);
	for (auto &t : terms)
	{
		if (!f.terms_.empty() && f.terms_.back().first == t.first)
			f.terms_.back().second += t.second;
		else
			f.terms_.push_back(t);
	}
	f.prune(drop_tol);
	return f;
}

cplx TrigPoly::coef(Freq const &k) const
{
	auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{k, 0.0},
	                           less_key);
	if (it != terms_.end() && it->first == k)
		return it->second;
	return 0.0;
}

void TrigPoly::check_same_dim(TrigPoly const &g) const
{
	if (dim_ != g.dim_)
		throw std::invalid_argument("TrigPoly dimension mismatch: " +
		                            std::to_string(dim_) + " vs " +
		                            std::to_string(g.dim_));
}

void TrigPoly::prune(double tol)
{
	std::erase_if(terms_, [tol](Term const &t) { return std::abs(t.second) < tol; });
}

TrigPoly TrigPoly::operator-() const
{
	TrigPoly r = *this;
	for (auto &t : r.terms_)
		t.second = -t.second;
	return r;
}

TrigPoly &TrigPoly::operator+=(TrigPoly const &g)
{
	check_same_dim(g);
	if (g.terms_.empty())
		return *this;
	std::vector<Term> out;
	out.reserve(terms_.size() + g.terms_.size());
	auto a = terms_.begin();
	auto b = g.terms_.begin();
	while (a != terms_.end() || b != g.terms_.end())
	{
		if (b == g.terms_.end() || (a != terms_.end() && a->first < b->first))
			out.push_back(*a++);
		else if (a == terms_.end() || b->first < a->first)
			out.push_back(*b++);
		else
		{
			cplx c = a->second + b->second;
			if (std::abs(c) >= kDropTol)
				out.emplace_back(a->first, c);
			++a;
			++b;
		}
	}
	terms_ = std::move(out);
	return *this;
}

TrigPoly &TrigPoly::operator-=(TrigPoly const &g) { return *this += -g; }

TrigPoly &TrigPoly::operator*=(cplx s)
{
	for (auto &t : terms_)
		t.second *= s;
	prune();
	return *this;
}

TrigPoly operator*(TrigPoly const &f, TrigPoly const &g)
{
	f.check_same_dim(g);
	TrigPoly r(f.dim_);
	if (f.terms_.empty() || g.terms_.empty())
		return r;
	if (f.terms_.size() == 1 && f.terms_[0].first == Freq{})
		return g * f.terms_[0].second;
	if (g.terms_.size() == 1 && g.terms_[0].first == Freq{})
		return f * g.terms_[0].second;

	std::vector<TrigPoly::Term> prod;
	prod.reserve(f.terms_.size() * g.terms_.size());
	for (auto const &[kf, cf] : f.terms_)
		for (auto const &[kg, cg] : g.terms_)
		{
			Freq k;
			for (int mu = 0; mu < kMaxDim; ++mu)
				k[mu] = kf[mu] + kg[mu];
			prod.emplace_back(k, cf * cg);
		}
	return TrigPoly::from_terms(f.dim_, std::move(prod));
}

TrigPoly TrigPoly::conj() const
{
	TrigPoly r(dim_);
	r.terms_.reserve(terms_.size());
	for (auto const &[k, c] : terms_)
		r.terms_.emplace_back(negate(k), std::conj(c));
	std::sort(r.terms_.begin(), r.terms_.end(), less_key);
	return r;
}

TrigPoly TrigPoly::partial(int mu) const
{
	if (mu < 0 || mu >= dim_)
		throw std::out_of_range("axis " + std::to_string(mu) +
		                        " out of range for dim " + std::to_string(dim_));
	TrigPoly r(dim_);
	for (auto const &[k, c] : terms_)
		if (k[mu] != 0)
			r.terms_.emplace_back(k, cplx(0, k[mu]) * c);
	return r;
}

cplx TrigPoly::eval(std::span<double const> x) const
{
	if (static_cast<int>(x.size()) < dim_)
		throw std::invalid_argument("evaluation point has too few coordinates");
	cplx s = 0;
	for (auto const &[k, c] : terms_)
	{
		double phase = 0;
		for (int mu = 0; mu < dim_; ++mu)
			phase += k[mu] * x[mu];
		s += c * std::polar(1.0, phase);
	}
	return s;
}

bool TrigPoly::is_real(double tol) const
{
	for (auto const &[k, c] : terms_)
		if (std::abs(coef(negate(k)) - std::conj(c)) > tol)
			return false;
	return true;
}

double TrigPoly::max_abs_coef() const
{
	double m = 0;
	for (auto const &t : terms_)
		m = std::max(m, std::abs(t.second));
	return m;
}

double TrigPoly::l1_norm() const
{
	double s = 0;
	for (auto const &t : terms_)
		s += std::abs(t.second);
	return s;
}

int TrigPoly::max_abs_freq() const
{
	int m = 0;
	for (auto const &t : terms_)
		for (int x : t.first)
			m = std::max(m, std::abs(x));
	return m;
}

cplx inner(TrigPoly const &f, TrigPoly const &g)
{
	if (f.dim() != g.dim())
		throw std::invalid_argument("TrigPoly dimension mismatch in inner product");
	cplx s = 0;
	auto a = f.terms().begin();
	auto b = g.terms().begin();
	while (a != f.terms().end() && b != g.terms().end())
	{
		if (a->first < b->first)
			++a;
		else if (b->first < a->first)
			++b;
		else
		{
			s += std::conj(a->second) * b->second;
			++a;
			++b;
		}
	}
	return s;
}

} // namespace ncg
