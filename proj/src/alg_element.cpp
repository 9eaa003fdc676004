#include "ncg/alg_element.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

std::string shape_str(int n, int d)
{
	return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

TrigPoly laplace_det(AlgElement const &a, std::vector<int> const &rows,
                     std::vector<int> const &cols)
{
	if (rows.size() == 1)
		return a(rows[0], cols[0]);
	TrigPoly s(a.d());
	std::vector<int> sub_rows(rows.begin() + 1, rows.end());
	for (size_t j = 0; j < cols.size(); ++j)
	{
		auto const &pivot = a(rows[0], cols[j]);
		if (pivot.is_zero())
			continue;
		std::vector<int> sub_cols;
		for (size_t l = 0; l < cols.size(); ++l)
			if (l != j)
				sub_cols.push_back(cols[l]);
		auto term = pivot * laplace_det(a, sub_rows, sub_cols);
		if (j % 2)
			s -= term;
		else
			s += term;
	}
	return s;
}

} // namespace

AlgElement::AlgElement(int n, int d)
    : n_(n), d_(d), entries_(static_cast<size_t>(n) * n, TrigPoly(d))
{
	if (n < 1)
		throw std::invalid_argument("matrix size must be positive");
}

AlgElement AlgElement::identity(int n, int d)
{
	return central(n, TrigPoly::constant(d, 1.0));
}

AlgElement AlgElement::central(int n, TrigPoly const &f)
{
	AlgElement a(n, f.dim());
	for (int i = 0; i < n; ++i)
		a(i, i) = f;
	return a;
}

AlgElement AlgElement::constant(Matrix const &m, int d)
{
	return from_matrix(m, TrigPoly::constant(d, 1.0));
}

AlgElement AlgElement::from_matrix(Matrix const &m, TrigPoly const &f)
{
	if (m.rows() != m.cols())
		throw std::invalid_argument("from_matrix needs a square matrix");
	int n = static_cast<int>(m.rows());
	AlgElement a(n, f.dim());
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (m(i, j) != cplx(0))
				a(i, j) = f * m(i, j);
	return a;
}

void AlgElement::check_shape(AlgElement const &b) const
{
	if (n_ != b.n_ || d_ != b.d_)
		throw std::invalid_argument("AlgElement shape mismatch: " +
		                            shape_str(n_, d_) + " vs " +
		                            shape_str(b.n_, b.d_));
}

AlgElement AlgElement::operator-() const
{
	AlgElement r = *this;
	for (auto &e : r.entries_)
		e = -e;
	return r;
}

AlgElement &AlgElement::operator+=(AlgElement const &b)
{
	check_shape(b);
	for (size_t i = 0; i < entries_.size(); ++i)
		entries_[i] += b.entries_[i];
	return *this;
}

AlgElement &AlgElement::operator-=(AlgElement const &b)
{
	check_shape(b);
	for (size_t i = 0; i < entries_.size(); ++i)
		entries_[i] -= b.entries_[i];
	return *this;
}

AlgElement &AlgElement::operator*=(cplx s)
{
	for (auto &e : entries_)
		e *= s;
	return *this;
}

AlgElement &AlgElement::operator*=(TrigPoly const &f)
{
	if (f.dim() != d_)
		throw std::invalid_argument("scaling by a function of the wrong dimension");
	for (auto &e : entries_)
		e = e * f;
	return *this;
}

AlgElement operator*(AlgElement const &a, AlgElement const &b)
{
	a.check_shape(b);
	int n = a.n_;
	AlgElement r(n, a.d_);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			auto const &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (!b(k, j).is_zero())
					r(i, j) += aik * b(k, j);
		}
	return r;
}

AlgElement operator*(AlgElement const &a, Matrix const &m)
{
	if (m.rows() != a.n_ || m.cols() != a.n_)
		throw std::invalid_argument("constant matrix shape mismatch");
	int n = a.n_;
	AlgElement r(n, a.d_);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			auto const &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (m(k, j) != cplx(0))
					r(i, j) += aik * m(k, j);
		}
	return r;
}

AlgElement operator*(Matrix const &m, AlgElement const &a)
{
	if (m.rows() != a.n_ || m.cols() != a.n_)
		throw std::invalid_argument("constant matrix shape mismatch");
	int n = a.n_;
	AlgElement r(n, a.d_);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			if (m(i, k) == cplx(0))
				continue;
			for (int j = 0; j < n; ++j)
				if (!a(k, j).is_zero())
					r(i, j) += a(k, j) * m(i, k);
		}
	return r;
}

AlgElement AlgElement::star() const
{
	AlgElement r(n_, d_);
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			r(i, j) = (*this)(j, i).conj();
	return r;
}

TrigPoly AlgElement::trace() const
{
	TrigPoly t(d_);
	for (int i = 0; i < n_; ++i)
		t += (*this)(i, i);
	return t;
}

TrigPoly AlgElement::det() const
{
	std::vector<int> idx(n_);
	for (int i = 0; i < n_; ++i)
		idx[i] = i;
	return laplace_det(*this, idx, idx);
}

AlgElement AlgElement::partial(int mu) const
{
	AlgElement r(n_, d_);
	for (size_t i = 0; i < entries_.size(); ++i)
		r.entries_[i] = entries_[i].partial(mu);
	return r;
}

AlgElement AlgElement::theta_project() const
{
	AlgElement r = *this;
	auto shift = trace() * cplx(1.0 / n_);
	for (int i = 0; i < n_; ++i)
		r(i, i) -= shift;
	return r;
}

Matrix AlgElement::eval(std::span<double const> x) const
{
	Matrix m(n_, n_);
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
			m(i, j) = (*this)(i, j).eval(x);
	return m;
}

bool AlgElement::is_zero() const
{
	return std::all_of(entries_.begin(), entries_.end(),
	                   [](TrigPoly const &e) { return e.is_zero(); });
}

double AlgElement::coef_norm() const
{
	double m = 0;
	for (auto const &e : entries_)
		m = std::max(m, e.max_abs_coef());
	return m;
}

double AlgElement::sup_bound() const
{
	double m = 0;
	for (auto const &e : entries_)
		m = std::max(m, e.l1_norm());
	return m;
}

bool AlgElement::is_traceless(double tol) const
{
	return trace().max_abs_coef() <= tol;
}

bool AlgElement::is_hermitian(double tol) const
{
	return (star() - *this).coef_norm() <= tol;
}

bool AlgElement::is_antihermitian(double tol) const
{
	return (star() + *this).coef_norm() <= tol;
}

bool AlgElement::is_central(double tol) const
{
	auto const &f = (*this)(0, 0);
	for (int i = 0; i < n_; ++i)
		for (int j = 0; j < n_; ++j)
		{
			auto diff = i == j ? (*this)(i, j) - f : (*this)(i, j);
			if (diff.max_abs_coef() > tol)
				return false;
		}
	return true;
}

AlgElement commutator(AlgElement const &a, AlgElement const &b)
{
	return a * b - b * a;
}

cplx trace_inner(AlgElement const &a, AlgElement const &b)
{
	if (a.n() != b.n() || a.d() != b.d())
		throw std::invalid_argument("trace_inner: shape mismatch");
	cplx s = 0;
	auto ea = a.entries();
	auto eb = b.entries();
	for (size_t i = 0; i < ea.size(); ++i)
		s += inner(ea[i], eb[i]);
	return s;
}

std::vector<TrigPoly> decompose_traceless(AlgElement const &g, double tol)
{
	if (!g.is_traceless(tol))
		throw std::invalid_argument("decompose_traceless: element has trace");
	auto const &basis = sl_basis(g.n());
	int m = basis.dim();
	int n = g.n();
	// t_b = Tr(E_b^dagger g), then gamma = gram^-1 t
	std::vector<TrigPoly> t(m, TrigPoly(g.d()));
	for (int b = 0; b < m; ++b)
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				cplx w = std::conj(basis.E[b](i, j));
				if (w != cplx(0))
					t[b] += g(i, j) * w;
			}
	std::vector<TrigPoly> gamma(m, TrigPoly(g.d()));
	for (int a = 0; a < m; ++a)
		for (int b = 0; b < m; ++b)
			if (basis.gram_inv(a, b) != cplx(0))
				gamma[a] += t[b] * basis.gram_inv(a, b);
	return gamma;
}

AlgElement combine(std::span<TrigPoly const> coeffs, int n)
{
	auto const &basis = sl_basis(n);
	if (static_cast<int>(coeffs.size()) != basis.dim())
		throw std::invalid_argument("coefficient count does not match sl(n) basis");
	int d = coeffs.empty() ? 1 : coeffs[0].dim();
	AlgElement g(n, d);
	for (int a = 0; a < basis.dim(); ++a)
		if (!coeffs[a].is_zero())
			g += AlgElement::from_matrix(basis.E[a], coeffs[a]);
	return g;
}

} // namespace ncg
