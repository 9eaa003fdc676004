#include "ncg/nc_form.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

constexpr CovectorMask bit(int c) { return CovectorMask{1} << c; }

std::vector<int> covectors(CovectorMask m)
{
	std::vector<int> out;
	while (m)
	{
		out.push_back(std::countr_zero(m));
		m &= m - 1;
	}
	return out;
}

} // namespace

int degree_of(CovectorMask m) { return std::popcount(m); }

int wedge_sign(CovectorMask a, CovectorMask b)
{
	if (a & b)
		return 0;
	// count pairs (i in a, j in b) with i > j
	int inversions = 0;
	for (CovectorMask rest = b; rest; rest &= rest - 1)
	{
		int j = std::countr_zero(rest);
		CovectorMask above = j >= 63 ? 0 : ~((bit(j) << 1) - 1);
		inversions += std::popcount(a & above);
	}
	return inversions % 2 ? -1 : 1;
}

NCForm::NCForm(int n, int d, int degree) : n_(n), d_(d), degree_(degree)
{
	if (n < 1 || d < 1 || d > kMaxDim)
		throw std::invalid_argument("invalid form shape");
	if (covector_count() > 64)
		throw std::invalid_argument("d + n^2 - 1 exceeds 64 covectors");
	if (degree < 0 || degree > covector_count())
		throw std::invalid_argument("form degree out of range: " +
		                            std::to_string(degree));
}

NCForm NCForm::scalar(AlgElement s)
{
	NCForm w(s.n(), s.d(), 0);
	w.terms_.emplace(0, std::move(s));
	return w;
}

NCForm NCForm::monomial(CovectorMask mask, AlgElement coef)
{
	NCForm w(coef.n(), coef.d(), degree_of(mask));
	w.add(mask, coef);
	return w;
}

CovectorMask NCForm::dx(int mu) const
{
	if (mu < 0 || mu >= d_)
		throw std::out_of_range("dx index out of range");
	return bit(mu);
}

CovectorMask NCForm::theta(int a) const
{
	if (a < 0 || a >= n_ * n_ - 1)
		throw std::out_of_range("theta index out of range");
	return bit(d_ + a);
}

CovectorMask NCForm::theta_block() const
{
	CovectorMask all = covector_count() == 64 ? ~CovectorMask{0}
	                                          : bit(covector_count()) - 1;
	return all & ~(bit(d_) - 1);
}

AlgElement NCForm::coefficient(CovectorMask mask) const
{
	auto it = terms_.find(mask);
	return it == terms_.end() ? AlgElement(n_, d_) : it->second;
}

void NCForm::add(CovectorMask mask, AlgElement const &coef)
{
	if (coef.n() != n_ || coef.d() != d_)
		throw std::invalid_argument("coefficient shape does not match form");
	if (degree_of(mask) != degree_)
		throw std::invalid_argument("basis element has wrong degree");
	if (covector_count() < 64 && (mask >> covector_count()))
		throw std::invalid_argument("covector index out of range");
	if (coef.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(mask, coef);
	if (!inserted)
		it->second += coef;
}

void NCForm::check_shape(NCForm const &b) const
{
	if (n_ != b.n_ || d_ != b.d_)
		throw std::invalid_argument("form shape mismatch");
}

NCForm NCForm::operator-() const
{
	NCForm r = *this;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

NCForm &NCForm::operator+=(NCForm const &b)
{
	check_shape(b);
	if (b.degree_ != degree_)
		throw std::invalid_argument("adding forms of different degree");
	for (auto const &[m, c] : b.terms_)
		add(m, c);
	return *this;
}

NCForm &NCForm::operator-=(NCForm const &b) { return *this += -b; }

NCForm &NCForm::operator*=(cplx s)
{
	for (auto &[m, c] : terms_)
		c *= s;
	return *this;
}

NCForm operator*(AlgElement const &s, NCForm const &w)
{
	NCForm r(w.n_, w.d_, w.degree_);
	for (auto const &[m, c] : w.terms_)
		r.add(m, s * c);
	return r;
}

NCForm operator*(NCForm const &w, AlgElement const &s)
{
	NCForm r(w.n_, w.d_, w.degree_);
	for (auto const &[m, c] : w.terms_)
		r.add(m, c * s);
	return r;
}

double NCForm::coef_norm() const
{
	double m = 0;
	for (auto const &[mask, c] : terms_)
		m = std::max(m, c.coef_norm());
	return m;
}

bool NCForm::is_horizontal(double tol) const
{
	for (auto const &[mask, c] : terms_)
		if ((mask & theta_block()) && c.coef_norm() > tol)
			return false;
	return true;
}

bool NCForm::is_basic(double tol) const
{
	if (!is_horizontal(tol))
		return false;
	for (auto const &[mask, c] : terms_)
		if (!c.is_central(tol))
			return false;
	auto const &basis = sl_basis(n_);
	for (auto const &e : basis.E)
	{
		auto x = Derivation::inner(AlgElement::constant(e, d_));
		if (lie_derive(x, *this).coef_norm() > tol)
			return false;
	}
	return true;
}

NCForm NCForm::pruned() const
{
	NCForm r(n_, d_, degree_);
	for (auto const &[m, c] : terms_)
		if (!c.is_zero())
			r.terms_.emplace(m, c);
	return r;
}

NCForm wedge(NCForm const &a, NCForm const &b)
{
	if (a.n() != b.n() || a.d() != b.d())
		throw std::invalid_argument("wedge: form shape mismatch");
	NCForm r(a.n(), a.d(), a.degree() + b.degree());
	for (auto const &[ma, ca] : a.terms())
		for (auto const &[mb, cb] : b.terms())
		{
			int s = wedge_sign(ma, mb);
			if (s == 0)
				continue;
			auto prod = ca * cb;
			if (s < 0)
				prod = -prod;
			r.add(ma | mb, prod);
		}
	return r;
}

NCForm dhat(NCForm const &w)
{
	int n = w.n(), d = w.d();
	if (w.degree() == w.covector_count())
		return NCForm(n, d, w.degree());
	NCForm r(n, d, w.degree() + 1);
	auto const &basis = sl_basis(n);
	int m = basis.dim();

	for (auto const &[mask, s] : w.terms())
	{
		// derivative of the coefficient: (d_mu S) dx^mu + [E_a, S] theta^a,
		// placed in front of the existing covectors
		for (int mu = 0; mu < d; ++mu)
		{
			int sign = wedge_sign(bit(mu), mask);
			if (sign == 0)
				continue;
			auto ds = s.partial(mu);
			if (ds.is_zero())
				continue;
			r.add(mask | bit(mu), sign > 0 ? ds : -ds);
		}
		for (int a = 0; a < m; ++a)
		{
			int sign = wedge_sign(bit(d + a), mask);
			if (sign == 0)
				continue;
			auto cs = basis.E[a] * s - s * basis.E[a];
			if (cs.is_zero())
				continue;
			r.add(mask | bit(d + a), sign > 0 ? cs : -cs);
		}

		// S times the differential of the covector product; dx^mu is closed
		// and d theta^a = -1/2 C^a_bc theta^b ^ theta^c
		auto cov = covectors(mask);
		for (size_t j = 0; j < cov.size(); ++j)
		{
			int c = cov[j];
			if (c < d)
				continue;
			int a = c - d;
			CovectorMask prefix = mask & (bit(c) - 1);
			CovectorMask suffix = mask & ~((bit(c) << 1) - 1);
			double pos_sign = j % 2 ? -1.0 : 1.0;
			for (int b1 = 0; b1 < m; ++b1)
				for (int b2 = b1 + 1; b2 < m; ++b2)
				{
					cplx coef = basis.structure(a, b1, b2);
					if (coef == cplx(0))
						continue;
					CovectorMask pair = bit(d + b1) | bit(d + b2);
					int s1 = wedge_sign(prefix, pair);
					int s2 = wedge_sign(prefix | pair, suffix);
					if (s1 == 0 || s2 == 0)
						continue;
					r.add(prefix | pair | suffix, s * (-coef * (pos_sign * s1 * s2)));
				}
		}
	}
	return r;
}

TrigPoly ring_det(std::vector<std::vector<TrigPoly>> const &mat)
{
	int p = static_cast<int>(mat.size());
	if (p == 0)
		throw std::invalid_argument("ring_det of an empty matrix");
	int dim = mat[0][0].dim();
	std::vector<int> perm(p);
	std::iota(perm.begin(), perm.end(), 0);
	TrigPoly total(dim);
	do
	{
		int inversions = 0;
		for (int i = 0; i < p; ++i)
			for (int j = i + 1; j < p; ++j)
				if (perm[i] > perm[j])
					++inversions;
		TrigPoly prod = TrigPoly::constant(dim, inversions % 2 ? -1.0 : 1.0);
		for (int i = 0; i < p && !prod.is_zero(); ++i)
			prod = prod * mat[i][perm[i]];
		total += prod;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

AlgElement form_eval(NCForm const &w, std::span<Derivation const> ders)
{
	int p = w.degree();
	if (static_cast<int>(ders.size()) != p)
		throw std::invalid_argument("form_eval: expected " + std::to_string(p) +
		                            " derivations, got " +
		                            std::to_string(ders.size()));
	AlgElement r(w.n(), w.d());
	if (p == 0)
		return w.coefficient(0);

	std::vector<std::vector<TrigPoly>> comps;
	comps.reserve(p);
	for (auto const &x : ders)
	{
		if (x.n() != w.n() || x.d() != w.d())
			throw std::invalid_argument("form_eval: derivation shape mismatch");
		comps.push_back(x.components());
	}

	for (auto const &[mask, coef] : w.terms())
	{
		auto cov = covectors(mask);
		std::vector<std::vector<TrigPoly>> pairing(p, std::vector<TrigPoly>(p));
		for (int i = 0; i < p; ++i)
			for (int j = 0; j < p; ++j)
				pairing[i][j] = comps[j][cov[i]];
		auto det = ring_det(pairing);
		if (!det.is_zero())
			r += coef * det;
	}
	return r;
}

AlgElement koszul_eval(NCForm const &w, std::span<Derivation const> ders)
{
	int p = w.degree();
	if (static_cast<int>(ders.size()) != p + 1)
		throw std::invalid_argument("koszul_eval: expected " +
		                            std::to_string(p + 1) + " derivations");
	AlgElement r(w.n(), w.d());
	int k = p + 1;

	for (int i = 0; i < k; ++i)
	{
		std::vector<Derivation> rest;
		for (int l = 0; l < k; ++l)
			if (l != i)
				rest.push_back(ders[l]);
		auto term = ders[i].apply(form_eval(w, rest));
		if (i % 2)
			r -= term;
		else
			r += term;
	}
	for (int i = 0; i < k; ++i)
		for (int j = i + 1; j < k; ++j)
		{
			std::vector<Derivation> args{bracket(ders[i], ders[j])};
			for (int l = 0; l < k; ++l)
				if (l != i && l != j)
					args.push_back(ders[l]);
			auto term = form_eval(w, args);
			if ((i + j) % 2)
				r -= term;
			else
				r += term;
		}
	return r;
}

NCForm contract(Derivation const &x, NCForm const &w)
{
	if (w.degree() == 0)
		throw std::invalid_argument("interior product of a 0-form");
	if (x.n() != w.n() || x.d() != w.d())
		throw std::invalid_argument("contract: shape mismatch");
	auto comps = x.components();
	NCForm r(w.n(), w.d(), w.degree() - 1);
	for (auto const &[mask, coef] : w.terms())
	{
		auto cov = covectors(mask);
		for (size_t j = 0; j < cov.size(); ++j)
		{
			auto const &f = comps[cov[j]];
			if (f.is_zero())
				continue;
			auto term = coef * f;
			r.add(mask & ~bit(cov[j]), j % 2 ? -term : term);
		}
	}
	return r;
}

NCForm lie_derive(Derivation const &x, NCForm const &w)
{
	if (w.degree() == 0)
		return contract(x, dhat(w));
	auto r = dhat(contract(x, w));
	// dhat of a top-degree form is zero
	if (w.degree() < w.covector_count())
		r += contract(x, dhat(w));
	return r;
}

NCForm canonical_theta(int n, int d)
{
	NCForm w(n, d, 1);
	auto const &basis = sl_basis(n);
	for (int a = 0; a < basis.dim(); ++a)
		w.add(w.theta(a), AlgElement::constant(basis.E[a], d));
	return w;
}

NCForm form_star(NCForm const &w)
{
	if (w.degree() > 1)
		throw std::invalid_argument(
		    "involution is only defined for forms of degree <= 1");
	NCForm r(w.n(), w.d(), w.degree());
	for (auto const &[mask, coef] : w.terms())
	{
		// real inner derivations are ad of i E_a with hermitian E_a, so the
		// theta components pick up a sign
		bool inner = (mask & w.theta_block()) != 0;
		r.add(mask, inner ? -coef.star() : coef.star());
	}
	return r;
}

bool is_hermitian_form(NCForm const &w, double tol)
{
	return (form_star(w) - w).coef_norm() <= tol;
}

bool is_antihermitian_form(NCForm const &w, double tol)
{
	return (form_star(w) + w).coef_norm() <= tol;
}

} // namespace ncg
