#pragma once

// Noncommutative connection 1-forms on the right module C^inf(T^d) (x) M_n(C)
// and the SU(n) connections they contain.

#include "ncg/kernels.hpp"
#include "ncg/nc_form.hpp"

#include <span>
#include <vector>

namespace ncg {

/// A noncommutative 1-form omega; the connection is
/// nabla_X S = X S + omega(X) S.
class ConnectionForm
{
public:
	ConnectionForm() = default;
	explicit ConnectionForm(NCForm omega);

	static ConnectionForm zero(int n, int d);

	NCForm const &form() const { return omega_; }
	int n() const { return omega_.n(); }
	int d() const { return omega_.d(); }

	AlgElement operator()(Derivation const &x) const;
	/// omega(d_mu)
	AlgElement on_axis(int mu) const;
	/// omega(ad_{E_a})
	AlgElement on_inner(int a) const;

private:
	NCForm omega_;
};

ConnectionForm operator+(ConnectionForm const &a, NCForm const &extra);

/// Residuals of the three conditions characterising the image of an SU(n)
/// connection: omega(ad_gamma) = -gamma, traceless values, antihermitian on
/// real derivations.
struct SuResiduals
{
	double inner_block = 0;
	double trace = 0;
	double antihermitian = 0;

	double max() const;
	bool holds(double tol = 1e-12) const { return max() <= tol; }
};

SuResiduals su_connection_residuals(ConnectionForm const &w);
inline bool is_su_connection(ConnectionForm const &w, double tol = 1e-12)
{
	return su_connection_residuals(w).holds(tol);
}

/// alpha = sum_mu A_mu dx^mu - i theta from a traceless antihermitian
/// potential; alpha(X + ad_gamma) = A(X) - gamma.
ConnectionForm alpha_from_A(std::span<AlgElement const> A);

/// The potential A_mu = alpha(d_mu) of an SU connection form.
std::vector<AlgElement> potential(ConnectionForm const &alpha);

/// dhat omega + omega ^ omega
NCForm curvature(ConnectionForm const &w);

AlgElement connection_apply(ConnectionForm const &w, Derivation const &x,
                            AlgElement const &s);

struct Compatibility
{
	bool compatible = false;
	double residual = 0;
};

/// omega(X)* + omega(X) = 0 on the real derivations d_mu and ad_{i E_a},
/// which span the real derivations over real functions.
Compatibility is_compatible_hermitian(ConnectionForm const &w, double tol = 1e-12);

/// Coefficient norm of X<S,S'> - <nabla_X S, S'> - <S, nabla_X S'> with
/// <S,S'> = S* S'.
double hermitian_form_residual(ConnectionForm const &w, Derivation const &x,
                               AlgElement const &s, AlgElement const &s2);

enum class GaugeGroup
{
	unitary,
	special_unitary,
};

double unitarity_residual(AlgElement const &u);
double det_residual(AlgElement const &u);

/// omega -> U* omega U + U* dhat U. Throws if U is not unitary (or not of
/// determinant one for the special group) within tol.
ConnectionForm gauge_transform(ConnectionForm const &w, AlgElement const &u,
                               GaugeGroup group = GaugeGroup::unitary,
                               double tol = 1e-10);

/// Lie derivative of an SU connection form along ad_xi, xi in the gauge
/// Lie algebra, via the Cartan formula.
NCForm lie_gauge_action(ConnectionForm const &alpha, AlgElement const &xi);

/// Residuals of the chart-change relations for a derivation X + ad_gamma
/// and a potential A under a transition function g, on sample points.
struct TransitionResiduals
{
	double gamma = 0;      ///< gamma' vs g^-1 gamma g + g^-1 X(g)
	double potential = 0;  ///< A'(X) vs g^-1 A(X) g + g^-1 X(g)
	double gluing = 0;     ///< A'(X) - gamma' vs g^-1 (A(X) - gamma) g
	double inhomogeneous_trace = 0; ///< |Tr g^-1 X(g)|
};

/// gamma_primed and potential_primed hold the primed-chart fields sampled at
/// points. Throws if g is not special unitary at some point (tol 1e-10).
TransitionResiduals transition_check(AlgElement const &gamma,
                                     std::span<Matrix const> gamma_primed,
                                     AlgElement const &potential_x,
                                     std::span<Matrix const> potential_primed,
                                     AlgElement const &g,
                                     std::vector<TrigPoly> const &field,
                                     std::span<Point const> points);

} // namespace ncg
