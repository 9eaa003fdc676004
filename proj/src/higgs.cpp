#include "ncg/higgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

namespace {

AlgElement field_combination(std::vector<AlgElement> const &comps,
                             std::vector<TrigPoly> const &field, int n)
{
	int d = static_cast<int>(field.size());
	AlgElement r(n, d);
	for (int mu = 0; mu < d; ++mu)
		if (!field[mu].is_zero())
			r += comps[mu] * field[mu];
	return r;
}

} // namespace

AlgElement HiggsData::apply_B(AlgElement const &gamma) const
{
	auto coeffs = decompose_traceless(gamma);
	AlgElement r(gamma.n(), gamma.d());
	for (size_t c = 0; c < coeffs.size(); ++c)
		if (!coeffs[c].is_zero())
			r += B[c] * coeffs[c];
	return r;
}

AlgElement HiggsData::apply_a(std::vector<TrigPoly> const &field) const
{
	if (a.empty())
		throw std::invalid_argument("HiggsData has no components");
	return field_combination(a, field, a[0].n());
}

Derivation horizontal_lift(ConnectionForm const &alpha_ref, int mu)
{
	auto A = alpha_ref.on_axis(mu);
	auto lift = Derivation::coordinate(alpha_ref.n(), alpha_ref.d(), mu);
	return lift + Derivation::inner(A);
}

OmegaDecomposition decompose_omega(ConnectionForm const &omega,
                                   ConnectionForm const &alpha_ref)
{
	if (!is_su_connection(alpha_ref))
		throw std::invalid_argument("decompose_omega: reference is not an SU connection");
	OmegaDecomposition dec{omega.form() - alpha_ref.form(), {}};
	ConnectionForm extra(dec.extra);
	for (int mu = 0; mu < omega.d(); ++mu)
		dec.higgs.a.push_back(extra(horizontal_lift(alpha_ref, mu)));
	auto const &basis = sl_basis(omega.n());
	for (int c = 0; c < basis.dim(); ++c)
		dec.higgs.B.push_back(extra.on_inner(c));
	return dec;
}

double reconstruction_residual(OmegaDecomposition const &dec,
                               ConnectionForm const &alpha_ref,
                               Derivation const &x)
{
	auto direct = ConnectionForm(dec.extra)(x);
	auto rebuilt = dec.higgs.apply_a(x.field()) - dec.higgs.apply_B(alpha_ref(x));
	return (direct - rebuilt).coef_norm();
}

HorizontalityResiduals higgs_conditions(HiggsData const &h,
                                        ConnectionForm const &alpha_ref,
                                        int per_axis)
{
	HorizontalityResiduals r;
	if (h.B.empty())
		return r;
	int n = h.B[0].n(), d = h.B[0].d();
	auto const &basis = sl_basis(n);
	int m = basis.dim();

	std::vector<AlgElement> cond1;
	for (int a = 0; a < m; ++a)
		for (int b = a + 1; b < m; ++b)
		{
			auto v = commutator(h.B[a], h.B[b]);
			for (int c = 0; c < m; ++c)
				if (basis.structure(c, a, b) != cplx(0))
					v -= h.B[c] * basis.structure(c, a, b);
			cond1.push_back(std::move(v));
		}
	r.r1 = grid_sup_norm(cond1, per_axis);

	auto A = potential(alpha_ref);
	std::vector<AlgElement> cond2;
	for (int mu = 0; mu < d; ++mu)
	{
		auto shifted = A[mu] + h.a[mu];
		for (int a = 0; a < m; ++a)
		{
			auto e = AlgElement::constant(basis.E[a], d);
			// nabla_mu E_a = [A_mu, E_a] since E_a is constant
			auto v = h.B[a].partial(mu) + commutator(shifted, h.B[a]) -
			         h.apply_B(commutator(A[mu], e));
			cond2.push_back(std::move(v));
		}
	}
	r.r2 = grid_sup_norm(cond2, per_axis);
	return r;
}

CurvatureDecomposition::CurvatureDecomposition(ConnectionForm const &omega,
                                               ConnectionForm const &alpha_ref)
    : alpha_(alpha_ref), A_(potential(alpha_ref)),
      dec_(decompose_omega(omega, alpha_ref))
{
}

AlgElement CurvatureDecomposition::reference_curvature(
    std::vector<TrigPoly> const &x, std::vector<TrigPoly> const &y) const
{
	int d = alpha_.d(), n = alpha_.n();
	AlgElement r(n, d);
	// R^E(X,Y) = sum_{mu<nu} F_{mu nu} (X^mu Y^nu - X^nu Y^mu)
	for (int mu = 0; mu < d; ++mu)
		for (int nu = mu + 1; nu < d; ++nu)
		{
			auto w = x[mu] * y[nu] - x[nu] * y[mu];
			if (w.is_zero())
				continue;
			auto f = A_[nu].partial(mu) - A_[mu].partial(nu) + commutator(A_[mu], A_[nu]);
			r += f * w;
		}
	return r;
}

AlgElement CurvatureDecomposition::covariant(std::vector<TrigPoly> const &x,
                                             AlgElement const &s) const
{
	auto r = Derivation::vector_field(x, alpha_.n()).apply_field(s);
	auto ax = field_combination(A_, x, alpha_.n());
	return r + commutator(ax, s);
}

std::array<AlgElement, 5> CurvatureDecomposition::evaluate(Derivation const &x,
                                                           Derivation const &y) const
{
	auto const &h = dec_.higgs;
	auto const &X = x.field();
	auto const &Y = y.field();
	auto aX = h.apply_a(X);
	auto aY = h.apply_a(Y);
	auto bX = h.apply_B(alpha_(x));
	auto bY = h.apply_B(alpha_(y));

	std::array<AlgElement, 5> g;
	g[0] = reference_curvature(X, Y);
	g[1] = covariant(X, aY) - covariant(Y, aX) - h.apply_a(bracket(X, Y)) +
	       commutator(aX, aY);
	g[2] = -(covariant(X, bY) + commutator(aX, bY));
	g[3] = covariant(Y, bX) + commutator(aY, bX);
	g[4] = commutator(bX, bY) + h.apply_B(alpha_(bracket(x, y)));
	return g;
}

AlgElement CurvatureDecomposition::sum(Derivation const &x, Derivation const &y) const
{
	auto g = evaluate(x, y);
	auto s = g[0];
	for (int i = 1; i < 5; ++i)
		s += g[i];
	return s;
}

AlgElement CurvatureDecomposition::horizontal_form(Derivation const &x,
                                                   Derivation const &y) const
{
	auto g = evaluate(x, y);
	return g[0] + g[1] - dec_.higgs.apply_B(g[0]);
}

} // namespace ncg
