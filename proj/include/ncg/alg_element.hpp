#pragma once

// Elements of the algebra C^inf(T^d) (x) M_n(C): n x n matrices of
// trigonometric polynomials.

#include "ncg/fourier_ring.hpp"
#include "ncg/matrix_geometry.hpp"

#include <span>
#include <vector>

namespace ncg {

class AlgElement
{
public:
	AlgElement() = default;
	/// The zero element.
	AlgElement(int n, int d);

	static AlgElement identity(int n, int d);
	/// f * 1, an element of the center.
	static AlgElement central(int n, TrigPoly const &f);
	/// Constant matrix-valued function.
	static AlgElement constant(Matrix const &m, int d);
	/// f * m
	static AlgElement from_matrix(Matrix const &m, TrigPoly const &f);

	int n() const { return n_; }
	int d() const { return d_; }
	TrigPoly &operator()(int i, int j) { return entries_[i * n_ + j]; }
	TrigPoly const &operator()(int i, int j) const { return entries_[i * n_ + j]; }
	std::span<TrigPoly const> entries() const { return entries_; }

	AlgElement operator-() const;
	AlgElement &operator+=(AlgElement const &b);
	AlgElement &operator-=(AlgElement const &b);
	AlgElement &operator*=(cplx s);
	AlgElement &operator*=(TrigPoly const &f);

	friend AlgElement operator+(AlgElement a, AlgElement const &b) { return a += b; }
	friend AlgElement operator-(AlgElement a, AlgElement const &b) { return a -= b; }
	friend AlgElement operator*(AlgElement a, cplx s) { return a *= s; }
	friend AlgElement operator*(cplx s, AlgElement a) { return a *= s; }
	friend AlgElement operator*(AlgElement a, TrigPoly const &f) { return a *= f; }
	friend AlgElement operator*(TrigPoly const &f, AlgElement a) { return a *= f; }
	/// Matrix product over the ring.
	friend AlgElement operator*(AlgElement const &a, AlgElement const &b);
	/// a * m for a constant matrix m (and m * a below).
	friend AlgElement operator*(AlgElement const &a, Matrix const &m);
	friend AlgElement operator*(Matrix const &m, AlgElement const &a);

	/// Conjugate transpose with pointwise conjugation of entries.
	AlgElement star() const;
	TrigPoly trace() const;
	/// Determinant over the commutative ring (Laplace expansion).
	TrigPoly det() const;
	AlgElement partial(int mu) const;
	/// S - (Tr S / n) 1
	AlgElement theta_project() const;
	Matrix eval(std::span<double const> x) const;

	bool is_zero() const;
	/// Largest coefficient modulus over all entries.
	double coef_norm() const;
	/// Largest entrywise l1 norm: bounds the pointwise entry moduli.
	double sup_bound() const;
	bool is_traceless(double tol = 1e-12) const;
	bool is_hermitian(double tol = 1e-12) const;
	bool is_antihermitian(double tol = 1e-12) const;
	bool is_central(double tol = 1e-12) const;

	friend bool operator==(AlgElement const &, AlgElement const &) = default;

private:
	void check_shape(AlgElement const &b) const;

	int n_ = 0;
	int d_ = 1;
	std::vector<TrigPoly> entries_;
};

AlgElement commutator(AlgElement const &a, AlgElement const &b);

/// Normalized (2 pi)^-d int Tr(a^dagger b).
cplx trace_inner(AlgElement const &a, AlgElement const &b);

/// Components gamma^a (functions) of a traceless element in the sl(n) basis.
std::vector<TrigPoly> decompose_traceless(AlgElement const &g,
                                          double tol = 1e-12);
/// sum_a coeffs[a] E_a
AlgElement combine(std::span<TrigPoly const> coeffs, int n);

} // namespace ncg
