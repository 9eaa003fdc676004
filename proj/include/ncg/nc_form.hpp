#pragma once

// Noncommutative differential forms of the derivation-based calculus on
// C^inf(T^d) (x) M_n(C), stored in the bigraded basis
//
//     omega = sum_{I,A} omega_{I,A} dx^I ^ theta^A
//
// with coefficients in the algebra written to the left of the central
// covectors. Covector c < d is dx^c; covector d + a is theta^a, the dual of
// ad_{E_a}. A multi-index is a bitmask over these d + n^2 - 1 covectors.

#include "ncg/alg_element.hpp"
#include "ncg/derivation.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ncg {

using CovectorMask = std::uint64_t;

/// +1 / -1 for sorting the concatenated covector list (a, b); 0 on overlap.
int wedge_sign(CovectorMask a, CovectorMask b);
int degree_of(CovectorMask m);

class NCForm
{
public:
	NCForm() = default;
	NCForm(int n, int d, int degree);

	/// A 0-form.
	static NCForm scalar(AlgElement s);
	static NCForm monomial(CovectorMask mask, AlgElement coef);

	int n() const { return n_; }
	int d() const { return d_; }
	int degree() const { return degree_; }
	int covector_count() const { return d_ + n_ * n_ - 1; }
	CovectorMask dx(int mu) const;
	CovectorMask theta(int a) const;
	/// Bits of the theta block.
	CovectorMask theta_block() const;

	std::map<CovectorMask, AlgElement> const &terms() const { return terms_; }
	AlgElement coefficient(CovectorMask mask) const;
	/// Accumulates coef onto the given basis element.
	void add(CovectorMask mask, AlgElement const &coef);

	NCForm operator-() const;
	NCForm &operator+=(NCForm const &b);
	NCForm &operator-=(NCForm const &b);
	NCForm &operator*=(cplx s);
	friend NCForm operator+(NCForm a, NCForm const &b) { return a += b; }
	friend NCForm operator-(NCForm a, NCForm const &b) { return a -= b; }
	friend NCForm operator*(NCForm a, cplx s) { return a *= s; }
	friend NCForm operator*(cplx s, NCForm a) { return a *= s; }
	/// Left / right multiplication of every coefficient.
	friend NCForm operator*(AlgElement const &s, NCForm const &w);
	friend NCForm operator*(NCForm const &w, AlgElement const &s);

	double coef_norm() const;
	bool is_zero(double tol = 0.0) const { return coef_norm() <= tol; }
	bool is_horizontal(double tol = 1e-12) const;
	bool is_basic(double tol = 1e-12) const;
	/// Drops coefficients that are exactly zero.
	NCForm pruned() const;

private:
	void check_shape(NCForm const &b) const;

	int n_ = 0;
	int d_ = 1;
	int degree_ = 0;
	std::map<CovectorMask, AlgElement> terms_;
};

NCForm wedge(NCForm const &a, NCForm const &b);

/// The differential d + d' acting on the basis representation.
NCForm dhat(NCForm const &w);

/// omega(X_1, ..., X_p) by pairing the covectors with the derivations
/// (determinant over the center).
AlgElement form_eval(NCForm const &w, std::span<Derivation const> ders);

/// d omega(X_1, ..., X_{p+1}) straight from the Koszul formula, using only
/// form_eval of omega itself, derivation action and brackets.
AlgElement koszul_eval(NCForm const &w, std::span<Derivation const> ders);

/// Interior product; degree must be at least 1.
NCForm contract(Derivation const &x, NCForm const &w);
/// i_X dhat + dhat i_X
NCForm lie_derive(Derivation const &x, NCForm const &w);

/// i theta = sum_a E_a theta^a
NCForm canonical_theta(int n, int d);

/// Involution on forms of degree <= 1, fixed by omega*(X) = omega(X)* on
/// real derivations. Higher degrees are rejected.
NCForm form_star(NCForm const &w);
bool is_hermitian_form(NCForm const &w, double tol = 1e-12);
bool is_antihermitian_form(NCForm const &w, double tol = 1e-12);

/// Determinant of a square matrix over the ring of trigonometric polynomials.
TrigPoly ring_det(std::vector<std::vector<TrigPoly>> const &m);

} // namespace ncg
