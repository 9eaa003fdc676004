#pragma once

#include "ncg/alg_element.hpp"

#include <vector>

namespace ncg {

/// A derivation sum_mu f^mu d_mu + ad_gamma of C^inf(T^d) (x) M_n(C), in the
/// canonical split into a vector field and a traceless inner part.
class Derivation
{
public:
	Derivation() = default;
	/// Throws if gamma has a trace; callers project first.
	Derivation(std::vector<TrigPoly> field, AlgElement gamma);

	static Derivation zero(int n, int d);
	static Derivation coordinate(int n, int d, int mu);
	static Derivation inner(AlgElement gamma);
	static Derivation vector_field(std::vector<TrigPoly> field, int n);

	int n() const { return gamma_.n(); }
	int d() const { return gamma_.d(); }
	std::vector<TrigPoly> const &field() const { return field_; }
	AlgElement const &gamma() const { return gamma_; }

	/// X(S) + [gamma, S]
	AlgElement apply(AlgElement const &s) const;
	/// Action on the center: X(f).
	TrigPoly apply(TrigPoly const &f) const;
	/// Vector-field part alone applied entrywise.
	AlgElement apply_field(AlgElement const &s) const;

	/// Coordinates on the dual basis (dx^mu, theta^a): f^mu then gamma^a.
	std::vector<TrigPoly> components() const;

	Derivation operator-() const;
	Derivation &operator+=(Derivation const &b);
	friend Derivation operator+(Derivation a, Derivation const &b) { return a += b; }
	friend Derivation operator-(Derivation a, Derivation const &b) { return a += -b; }
	/// Module structure over the center.
	friend Derivation operator*(TrigPoly const &f, Derivation const &x);

	/// Real derivations commute with the involution: f^mu real, gamma
	/// antihermitian.
	bool is_real(double tol = 1e-12) const;

private:
	std::vector<TrigPoly> field_;
	AlgElement gamma_;
};

/// Vector field part; the anchor onto Der(C^inf(T^d)).
std::vector<TrigPoly> anchor(Derivation const &x);

/// Lie bracket of derivations.
Derivation bracket(Derivation const &x, Derivation const &y);

/// Lie bracket of vector fields on the torus.
std::vector<TrigPoly> bracket(std::vector<TrigPoly> const &x,
                              std::vector<TrigPoly> const &y);

/// X(f) for a vector field X.
TrigPoly apply_field(std::vector<TrigPoly> const &x, TrigPoly const &f);

} // namespace ncg
