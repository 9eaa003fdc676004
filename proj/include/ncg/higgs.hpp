#pragma once

// Splitting a noncommutative connection against a reference SU(n)
// connection into a gauge-like part a and a Higgs field B.

#include "ncg/connections.hpp"

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace ncg {

/// omega = alpha_ref + Ax with Ax(X) = a(X) - B(alpha_ref(X)).
struct HiggsData
{
	/// a_mu = Ax(horizontal lift of d_mu)
	std::vector<AlgElement> a;
	/// B_c = B(E_c); B extends linearly over the center.
	std::vector<AlgElement> B;

	/// B(gamma) for traceless gamma.
	AlgElement apply_B(AlgElement const &gamma) const;
	/// a(X) = X^mu a_mu
	AlgElement apply_a(std::vector<TrigPoly> const &field) const;
};

struct OmegaDecomposition
{
	/// omega - alpha_ref
	NCForm extra;
	HiggsData higgs;
};

/// The derivation over d_mu on which alpha_ref vanishes.
Derivation horizontal_lift(ConnectionForm const &alpha_ref, int mu);

OmegaDecomposition decompose_omega(ConnectionForm const &omega,
                                   ConnectionForm const &alpha_ref);

/// Coefficient norm of Ax(X) - (a(X) - B(alpha_ref(X))).
double reconstruction_residual(OmegaDecomposition const &dec,
                               ConnectionForm const &alpha_ref,
                               Derivation const &x);

struct HorizontalityResiduals
{
	/// max_ab |[B_a, B_b] - C^c_ab B_c|
	double r1 = 0;
	/// max_{mu,a} |d_mu B_a + [A_mu + a_mu, B_a] - B([A_mu, E_a])|
	double r2 = 0;
};

/// Both conditions, measured as sup norms on a per_axis^d grid.
HorizontalityResiduals higgs_conditions(HiggsData const &h,
                                        ConnectionForm const &alpha_ref,
                                        int per_axis = 16);

/// The curvature of omega = alpha_ref + Ax split into the five groups
///   R^E(X,Y)
///   nabla_X a(Y) - nabla_Y a(X) - a([X,Y]) + [a(X), a(Y)]
///   -nabla_X B(alpha(Y)) - [a(X), B(alpha(Y))]
///   +nabla_Y B(alpha(X)) + [a(Y), B(alpha(X))]
///   [B(alpha(X)), B(alpha(Y))] + B(alpha([X,Y]))
/// each evaluated directly from A, a and B.
class CurvatureDecomposition
{
public:
	static constexpr std::array<std::string_view, 5> labels = {
	    "reference_curvature", "shifted_gauge", "higgs_covariant_x",
	    "higgs_covariant_y", "higgs_bracket"};

	CurvatureDecomposition(ConnectionForm const &omega,
	                       ConnectionForm const &alpha_ref);

	std::array<AlgElement, 5> evaluate(Derivation const &x, Derivation const &y) const;
	AlgElement sum(Derivation const &x, Derivation const &y) const;
	/// R'^E(X,Y) - B(R^E(X,Y)); equals the curvature when both horizontality
	/// conditions hold.
	AlgElement horizontal_form(Derivation const &x, Derivation const &y) const;

	HiggsData const &higgs() const { return dec_.higgs; }

private:
	AlgElement reference_curvature(std::vector<TrigPoly> const &x,
	                               std::vector<TrigPoly> const &y) const;
	AlgElement covariant(std::vector<TrigPoly> const &x, AlgElement const &s) const;

	ConnectionForm alpha_;
	std::vector<AlgElement> A_;
	OmegaDecomposition dec_;
};

} // namespace ncg
