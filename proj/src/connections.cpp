#include "ncg/connections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncg {

ConnectionForm::ConnectionForm(NCForm omega) : omega_(std::move(omega))
{
	if (omega_.degree() != 1)
		throw std::invalid_argument("connection form must have degree 1");
}

ConnectionForm ConnectionForm::zero(int n, int d)
{
	return ConnectionForm(NCForm(n, d, 1));
}

AlgElement ConnectionForm::operator()(Derivation const &x) const
{
	return form_eval(omega_, std::span<Derivation const>(&x, 1));
}

AlgElement ConnectionForm::on_axis(int mu) const
{
	return omega_.coefficient(omega_.dx(mu));
}

AlgElement ConnectionForm::on_inner(int a) const
{
	return omega_.coefficient(omega_.theta(a));
}

ConnectionForm operator+(ConnectionForm const &a, NCForm const &extra)
{
	return ConnectionForm(a.form() + extra);
}

double SuResiduals::max() const
{
	return std::max({inner_block, trace, antihermitian});
}

SuResiduals su_connection_residuals(ConnectionForm const &w)
{
	SuResiduals r;
	auto const &basis = sl_basis(w.n());
	for (int a = 0; a < basis.dim(); ++a)
	{
		auto v = w.on_inner(a) + AlgElement::constant(basis.E[a], w.d());
		r.inner_block = std::max(r.inner_block, v.coef_norm());
	}
	for (auto const &[mask, c] : w.form().terms())
		r.trace = std::max(r.trace, c.trace().max_abs_coef());
	r.antihermitian = (form_star(w.form()) + w.form()).coef_norm();
	return r;
}

ConnectionForm alpha_from_A(std::span<AlgElement const> A)
{
	if (A.empty())
		throw std::invalid_argument("alpha_from_A: empty potential");
	int n = A[0].n(), d = A[0].d();
	if (static_cast<int>(A.size()) != d)
		throw std::invalid_argument("alpha_from_A: need one component per axis");
	NCForm w = -canonical_theta(n, d);
	for (int mu = 0; mu < d; ++mu)
	{
		if (A[mu].n() != n || A[mu].d() != d)
			throw std::invalid_argument("alpha_from_A: component shape mismatch");
		if (!A[mu].is_traceless())
			throw std::invalid_argument("alpha_from_A: A_" + std::to_string(mu) +
			                            " is not traceless");
		if (!A[mu].is_antihermitian())
			throw std::invalid_argument("alpha_from_A: A_" + std::to_string(mu) +
			                            " is not antihermitian");
		w.add(w.dx(mu), A[mu]);
	}
	return ConnectionForm(std::move(w));
}

std::vector<AlgElement> potential(ConnectionForm const &alpha)
{
	std::vector<AlgElement> A;
	for (int mu = 0; mu < alpha.d(); ++mu)
		A.push_back(alpha.on_axis(mu));
	return A;
}

NCForm curvature(ConnectionForm const &w)
{
	return dhat(w.form()) + wedge(w.form(), w.form());
}

AlgElement connection_apply(ConnectionForm const &w, Derivation const &x,
                            AlgElement const &s)
{
	return x.apply(s) + w(x) * s;
}

Compatibility is_compatible_hermitian(ConnectionForm const &w, double tol)
{
	double res = 0;
	for (int mu = 0; mu < w.d(); ++mu)
	{
		auto v = w.on_axis(mu);
		res = std::max(res, (v.star() + v).coef_norm());
	}
	auto const &basis = sl_basis(w.n());
	for (int a = 0; a < basis.dim(); ++a)
	{
		// omega(ad_{i E_a}) = i omega_a
		auto v = w.on_inner(a) * cplx(0, 1);
		res = std::max(res, (v.star() + v).coef_norm());
	}
	return {res <= tol, res};
}

double hermitian_form_residual(ConnectionForm const &w, Derivation const &x,
                               AlgElement const &s, AlgElement const &s2)
{
	auto lhs = x.apply(s.star() * s2);
	auto rhs = connection_apply(w, x, s).star() * s2 +
	           s.star() * connection_apply(w, x, s2);
	return (lhs - rhs).coef_norm();
}

double unitarity_residual(AlgElement const &u)
{
	return (u.star() * u - AlgElement::identity(u.n(), u.d())).coef_norm();
}

double det_residual(AlgElement const &u)
{
	return (u.det() - TrigPoly::constant(u.d(), 1.0)).max_abs_coef();
}

ConnectionForm gauge_transform(ConnectionForm const &w, AlgElement const &u,
                               GaugeGroup group, double tol)
{
	if (u.n() != w.n() || u.d() != w.d())
		throw std::invalid_argument("gauge element shape mismatch");
	double ures = unitarity_residual(u);
	if (ures > tol)
		throw std::domain_error("gauge element is not unitary (residual " +
		                        std::to_string(ures) + ")");
	if (group == GaugeGroup::special_unitary)
	{
		double dres = det_residual(u);
		if (dres > tol)
			throw std::domain_error("gauge element does not have determinant 1 "
			                        "(residual " +
			                        std::to_string(dres) + ")");
	}
	auto ustar = u.star();
	return ConnectionForm(ustar * w.form() * u + ustar * dhat(NCForm::scalar(u)));
}

NCForm lie_gauge_action(ConnectionForm const &alpha, AlgElement const &xi)
{
	if (!is_su_connection(alpha))
		throw std::invalid_argument("lie_gauge_action: alpha is not an SU connection");
	if (!xi.is_traceless() || !xi.is_antihermitian())
		throw std::invalid_argument(
		    "lie_gauge_action: xi must be traceless and antihermitian");
	return lie_derive(Derivation::inner(xi), alpha.form());
}

namespace {

double max_entry(Matrix const &m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TransitionResiduals transition_check(AlgElement const &gamma,
                                     std::span<Matrix const> gamma_primed,
                                     AlgElement const &potential_x,
                                     std::span<Matrix const> potential_primed,
                                     AlgElement const &g,
                                     std::vector<TrigPoly> const &field,
                                     std::span<Point const> points)
{
	if (gamma_primed.size() != points.size() ||
	    potential_primed.size() != points.size())
		throw std::invalid_argument("transition_check: sample count mismatch");
	int n = g.n();
	auto xg = Derivation::vector_field(field, n).apply_field(g);
	TransitionResiduals r;
	Matrix id = Matrix::Identity(n, n);
	for (size_t i = 0; i < points.size(); ++i)
	{
		auto const &x = points[i];
		Matrix gm = g.eval(x);
		double ures = max_entry(gm.adjoint() * gm - id);
		double dres = std::abs(gm.determinant() - cplx(1));
		if (ures > 1e-10 || dres > 1e-10)
			throw std::domain_error("transition function is not special unitary "
			                        "at sample " +
			                        std::to_string(i));
		Matrix ginv = gm.inverse();
		Matrix inhom = ginv * xg.eval(x);
		Matrix gam = gamma.eval(x);
		Matrix pot = potential_x.eval(x);

		Matrix gam_expected = ginv * gam * gm + inhom;
		Matrix pot_expected = ginv * pot * gm + inhom;
		r.gamma = std::max(r.gamma, max_entry(gamma_primed[i] - gam_expected));
		r.potential =
		    std::max(r.potential, max_entry(potential_primed[i] - pot_expected));
		Matrix glued = potential_primed[i] - gamma_primed[i];
		r.gluing = std::max(r.gluing, max_entry(glued - ginv * (pot - gam) * gm));
		r.inhomogeneous_trace = std::max(r.inhomogeneous_trace, std::abs(inhom.trace()));
	}
	return r;
}

} // namespace ncg
