#pragma once

// First-order operators on sections of the trivial bundle T^d x C^n, the
// canonical flat splitting of Der over them, and left connections.

#include "ncg/connections.hpp"

#include <functional>
#include <span>
#include <vector>

namespace ncg {

/// A section: n component functions.
using Section = std::vector<TrigPoly>;

/// e -> X(e) + A e with A not necessarily traceless.
class AtiyahOp
{
public:
	AtiyahOp() = default;
	AtiyahOp(std::vector<TrigPoly> field, AlgElement matrix);

	int n() const { return matrix_.n(); }
	int d() const { return matrix_.d(); }
	std::vector<TrigPoly> const &field() const { return field_; }
	AlgElement const &matrix() const { return matrix_; }

	Section apply(Section const &e) const;
	/// The anchor of the Atiyah algebra.
	std::vector<TrigPoly> const &symbol() const { return field_; }
	/// S -> [T, S]; the central part of the matrix acts trivially.
	Derivation to_derivation() const;

	AtiyahOp &operator+=(AtiyahOp const &b);
	friend AtiyahOp operator+(AtiyahOp a, AtiyahOp const &b) { return a += b; }
	friend AtiyahOp operator-(AtiyahOp const &a, AtiyahOp const &b);

	/// Largest coefficient over field and matrix parts.
	double coef_norm() const;

private:
	std::vector<TrigPoly> field_;
	AlgElement matrix_;
};

AtiyahOp commutator(AtiyahOp const &t, AtiyahOp const &u);

/// S e for S in the algebra.
Section multiply(AlgElement const &s, Section const &e);

/// D°(X) = nabla^E_X - alpha(X) for a reference SU connection alpha.
AtiyahOp d_zero(Derivation const &x, ConnectionForm const &alpha_ref);

/// A linear map from derivations to first-order operators.
using Splitting = std::function<AtiyahOp(Derivation const &)>;

/// Splitting D° + phi for a 1-form phi with central values.
Splitting shifted_splitting(ConnectionForm const &alpha_ref, NCForm phi);

/// A noncommutative left connection on sections given by a splitting.
class LeftConnection
{
public:
	explicit LeftConnection(Splitting split) : split_(std::move(split)) {}

	/// Throws if the splitting fails to preserve the anchor on any probe.
	void check_anchor(std::span<Derivation const> probes, double tol = 1e-12) const;
	/// Residual of D(f X) - f D(X).
	double linearity_residual(TrigPoly const &f, Derivation const &x) const;
	/// Residual of nabla_X (S e) - (X S) e - S nabla_X e.
	double leibniz_residual(Derivation const &x, AlgElement const &s,
	                        Section const &e) const;

	Section apply(Derivation const &x, Section const &e) const;
	AtiyahOp operator()(Derivation const &x) const { return split_(x); }
	/// [D X, D Y] - D [X, Y]
	AtiyahOp curvature(Derivation const &x, Derivation const &y) const;

private:
	Splitting split_;
};

} // namespace ncg
