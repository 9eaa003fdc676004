#include "ncg/derivation.hpp"

#include <stdexcept>

namespace ncg {

Derivation::Derivation(std::vector<TrigPoly> field, AlgElement gamma)
    : field_(std::move(field)), gamma_(std::move(gamma))
{
	if (static_cast<int>(field_.size()) != gamma_.d())
		throw std::invalid_argument("vector field has wrong number of components");
	for (auto const &f : field_)
		if (f.dim() != gamma_.d())
			throw std::invalid_argument("vector field component of wrong dimension");
	if (!gamma_.is_traceless())
		throw std::invalid_argument(
		    "inner part of a derivation must be traceless; apply theta_project");
}

Derivation Derivation::zero(int n, int d)
{
	return {std::vector<TrigPoly>(d, TrigPoly(d)), AlgElement(n, d)};
}

Derivation Derivation::coordinate(int n, int d, int mu)
{
	if (mu < 0 || mu >= d)
		throw std::out_of_range("coordinate axis out of range");
	std::vector<TrigPoly> field(d, TrigPoly(d));
	field[mu] = TrigPoly::constant(d, 1.0);
	return {std::move(field), AlgElement(n, d)};
}

Derivation Derivation::inner(AlgElement gamma)
{
	int d = gamma.d();
	return {std::vector<TrigPoly>(d, TrigPoly(d)), std::move(gamma)};
}

Derivation Derivation::vector_field(std::vector<TrigPoly> field, int n)
{
	if (field.empty())
		throw std::invalid_argument("vector field needs at least one component");
	int d = field[0].dim();
	return {std::move(field), AlgElement(n, d)};
}

AlgElement Derivation::apply_field(AlgElement const &s) const
{
	if (s.n() != n() || s.d() != d())
		throw std::invalid_argument("derivation applied to element of wrong shape");
	AlgElement r(n(), d());
	for (int mu = 0; mu < d(); ++mu)
		if (!field_[mu].is_zero())
			r += s.partial(mu) * field_[mu];
	return r;
}

AlgElement Derivation::apply(AlgElement const &s) const
{
	auto r = apply_field(s);
	if (!gamma_.is_zero())
		r += commutator(gamma_, s);
	return r;
}

TrigPoly Derivation::apply(TrigPoly const &f) const
{
	return ncg::apply_field(field_, f);
}

std::vector<TrigPoly> Derivation::components() const
{
	std::vector<TrigPoly> c = field_;
	auto g = decompose_traceless(gamma_);
	c.insert(c.end(), g.begin(), g.end());
	return c;
}

Derivation Derivation::operator-() const
{
	Derivation r = *this;
	for (auto &f : r.field_)
		f = -f;
	r.gamma_ = -r.gamma_;
	return r;
}

Derivation &Derivation::operator+=(Derivation const &b)
{
	if (b.n() != n() || b.d() != d())
		throw std::invalid_argument("derivation shape mismatch");
	for (int mu = 0; mu < d(); ++mu)
		field_[mu] += b.field_[mu];
	gamma_ += b.gamma_;
	return *this;
}

Derivation operator*(TrigPoly const &f, Derivation const &x)
{
	Derivation r = x;
	for (auto &c : r.field_)
		c = f * c;
	r.gamma_ *= f;
	return r;
}

bool Derivation::is_real(double tol) const
{
	for (auto const &f : field_)
		if (!f.is_real(tol))
			return false;
	return gamma_.is_antihermitian(tol);
}

std::vector<TrigPoly> anchor(Derivation const &x) { return x.field(); }

TrigPoly apply_field(std::vector<TrigPoly> const &x, TrigPoly const &f)
{
	TrigPoly r(f.dim());
	if (static_cast<int>(x.size()) != f.dim())
		throw std::invalid_argument("vector field / function dimension mismatch");
	for (int mu = 0; mu < f.dim(); ++mu)
		if (!x[mu].is_zero())
			r += x[mu] * f.partial(mu);
	return r;
}

std::vector<TrigPoly> bracket(std::vector<TrigPoly> const &x,
                              std::vector<TrigPoly> const &y)
{
	if (x.size() != y.size())
		throw std::invalid_argument("vector field dimension mismatch");
	std::vector<TrigPoly> r;
	r.reserve(x.size());
	for (size_t nu = 0; nu < x.size(); ++nu)
		r.push_back(apply_field(x, y[nu]) - apply_field(y, x[nu]));
	return r;
}

Derivation bracket(Derivation const &x, Derivation const &y)
{
	if (x.n() != y.n() || x.d() != y.d())
		throw std::invalid_argument("derivation shape mismatch in bracket");
	auto inner = x.apply_field(y.gamma()) - y.apply_field(x.gamma()) +
	             commutator(x.gamma(), y.gamma());
	return {bracket(x.field(), y.field()), std::move(inner)};
}

} // namespace ncg
