#include "ncg/atiyah.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

namespace {

double section_norm(Section const &e)
{
	double m = 0;
	for (auto const &f : e)
		m = std::max(m, f.max_abs_coef());
	return m;
}

Section subtract(Section a, Section const &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

} // namespace

AtiyahOp::AtiyahOp(std::vector<TrigPoly> field, AlgElement matrix)
    : field_(std::move(field)), matrix_(std::move(matrix))
{
	if (static_cast<int>(field_.size()) != matrix_.d())
		throw std::invalid_argument("AtiyahOp: field has wrong number of components");
}

Section multiply(AlgElement const &s, Section const &e)
{
	if (static_cast<int>(e.size()) != s.n())
		throw std::invalid_argument("section has wrong rank");
	Section r(s.n(), TrigPoly(s.d()));
	for (int i = 0; i < s.n(); ++i)
		for (int j = 0; j < s.n(); ++j)
			if (!s(i, j).is_zero() && !e[j].is_zero())
				r[i] += s(i, j) * e[j];
	return r;
}

Section AtiyahOp::apply(Section const &e) const
{
	auto r = multiply(matrix_, e);
	for (size_t i = 0; i < e.size(); ++i)
		r[i] += apply_field(field_, e[i]);
	return r;
}

Derivation AtiyahOp::to_derivation() const
{
	return {field_, matrix_.theta_project()};
}

AtiyahOp &AtiyahOp::operator+=(AtiyahOp const &b)
{
	if (b.n() != n() || b.d() != d())
		throw std::invalid_argument("AtiyahOp shape mismatch");
	for (size_t mu = 0; mu < field_.size(); ++mu)
		field_[mu] += b.field_[mu];
	matrix_ += b.matrix_;
	return *this;
}

AtiyahOp operator-(AtiyahOp const &a, AtiyahOp const &b)
{
	auto field = a.field_;
	for (size_t mu = 0; mu < field.size(); ++mu)
		field[mu] -= b.field_[mu];
	return {std::move(field), a.matrix_ - b.matrix_};
}

double AtiyahOp::coef_norm() const
{
	double m = matrix_.coef_norm();
	for (auto const &f : field_)
		m = std::max(m, f.max_abs_coef());
	return m;
}

AtiyahOp commutator(AtiyahOp const &t, AtiyahOp const &u)
{
	if (t.n() != u.n() || t.d() != u.d())
		throw std::invalid_argument("AtiyahOp shape mismatch in commutator");
	auto tx = Derivation::vector_field(t.field(), t.n());
	auto ux = Derivation::vector_field(u.field(), u.n());
	auto matrix = tx.apply_field(u.matrix()) - ux.apply_field(t.matrix()) +
	              commutator(t.matrix(), u.matrix());
	return {bracket(t.field(), u.field()), std::move(matrix)};
}

AtiyahOp d_zero(Derivation const &x, ConnectionForm const &alpha_ref)
{
	if (!is_su_connection(alpha_ref))
		throw std::invalid_argument("d_zero: reference is not an SU connection");
	auto A = potential(alpha_ref);
	AlgElement ax(x.n(), x.d());
	for (int mu = 0; mu < x.d(); ++mu)
		if (!x.field()[mu].is_zero())
			ax += A[mu] * x.field()[mu];
	return {x.field(), ax - alpha_ref(x)};
}

Splitting shifted_splitting(ConnectionForm const &alpha_ref, NCForm phi)
{
	if (phi.degree() != 1)
		throw std::invalid_argument("shift of a splitting must be a 1-form");
	for (auto const &[mask, c] : phi.terms())
		if (!c.is_central())
			throw std::invalid_argument("shift of a splitting must be central-valued");
	return [alpha_ref, phi = std::move(phi)](Derivation const &x) {
		auto base = d_zero(x, alpha_ref);
		auto shift = form_eval(phi, std::span<Derivation const>(&x, 1));
		return AtiyahOp(base.field(), base.matrix() + shift);
	};
}

void LeftConnection::check_anchor(std::span<Derivation const> probes,
                                  double tol) const
{
	for (auto const &x : probes)
	{
		auto t = split_(x);
		for (size_t mu = 0; mu < t.field().size(); ++mu)
			if ((t.field()[mu] - x.field()[mu]).max_abs_coef() > tol)
				throw std::invalid_argument("splitting does not preserve the anchor");
	}
}

double LeftConnection::linearity_residual(TrigPoly const &f,
                                          Derivation const &x) const
{
	auto lhs = split_(f * x);
	auto rhs = split_(x);
	std::vector<TrigPoly> field;
	for (auto const &c : rhs.field())
		field.push_back(f * c);
	return (lhs - AtiyahOp(std::move(field), rhs.matrix() * f)).coef_norm();
}

double LeftConnection::leibniz_residual(Derivation const &x, AlgElement const &s,
                                        Section const &e) const
{
	auto lhs = apply(x, multiply(s, e));
	auto rhs = multiply(x.apply(s), e);
	auto se = multiply(s, apply(x, e));
	for (size_t i = 0; i < rhs.size(); ++i)
		rhs[i] += se[i];
	return section_norm(subtract(lhs, rhs));
}

Section LeftConnection::apply(Derivation const &x, Section const &e) const
{
	return split_(x).apply(e);
}

AtiyahOp LeftConnection::curvature(Derivation const &x, Derivation const &y) const
{
	return commutator(split_(x), split_(y)) - split_(bracket(x, y));
}

} // namespace ncg
