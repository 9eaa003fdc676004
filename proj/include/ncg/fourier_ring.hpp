#pragma once

// Trigonometric polynomials on the flat torus T^d: the commutative
// coefficient ring C^inf(T^d) truncated to finite Fourier sums.

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace ncg {

using cplx = std::complex<double>;

/// Largest supported torus dimension.
inline constexpr int kMaxDim = 4;

/// Frequency vector k in Z^d; components past dim are always zero.
using Freq = std::array<int, kMaxDim>;

/// Coefficients with modulus below this are dropped after arithmetic.
inline constexpr double kDropTol = 1e-14;

/// f(x) = sum_k c_k exp(i k.x), stored as a sorted list of (k, c_k).
///
/// Values are immutable once built; every arithmetic result is pruned with
/// kDropTol so exact identities hold to machine precision without the
/// frequency support growing without bound.
class TrigPoly
{
public:
	using Term = std::pair<Freq, cplx>;

	TrigPoly() = default;
	explicit TrigPoly(int dim);

	static TrigPoly constant(int dim, cplx c);
	/// c * exp(i k.x)
	static TrigPoly mode(int dim, Freq const &k, cplx c = 1.0);
	/// cos(k.x) and sin(k.x)
	static TrigPoly cos_mode(int dim, Freq const &k);
	static TrigPoly sin_mode(int dim, Freq const &k);
	/// Sums duplicate frequencies, then prunes with drop_tol.
	static TrigPoly from_terms(int dim, std::vector<Term> terms,
	                           double drop_tol = kDropTol);

	int dim() const { return dim_; }
	std::span<Term const> terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	cplx coef(Freq const &k) const;

	TrigPoly operator-() const;
	TrigPoly &operator+=(TrigPoly const &g);
	TrigPoly &operator-=(TrigPoly const &g);
	TrigPoly &operator*=(cplx s);

	friend TrigPoly operator+(TrigPoly f, TrigPoly const &g) { return f += g; }
	friend TrigPoly operator-(TrigPoly f, TrigPoly const &g) { return f -= g; }
	friend TrigPoly operator*(TrigPoly const &f, TrigPoly const &g);
	friend TrigPoly operator*(TrigPoly f, cplx s) { return f *= s; }
	friend TrigPoly operator*(cplx s, TrigPoly f) { return f *= s; }

	/// Pointwise complex conjugate: c_k -> conj(c_{-k}).
	TrigPoly conj() const;
	/// Exact partial derivative along axis mu: c_k -> i k_mu c_k.
	TrigPoly partial(int mu) const;
	/// Normalized Haar integral (2 pi)^-d int f, i.e. c_0.
	cplx integrate() const { return coef(Freq{}); }
	cplx eval(std::span<double const> x) const;

	/// c_{-k} = conj(c_k) for all stored k, up to tol.
	bool is_real(double tol = 1e-12) const;
	double max_abs_coef() const;
	/// sum |c_k|, an upper bound for the sup norm on the torus.
	double l1_norm() const;
	int max_abs_freq() const;

	friend bool operator==(TrigPoly const &, TrigPoly const &) = default;

private:
	void check_same_dim(TrigPoly const &g) const;
	void prune(double tol = kDropTol);

	int dim_ = 1;
	std::vector<Term> terms_;
};

Freq negate(Freq k);

/// Normalized inner product (2 pi)^-d int conj(f) g.
cplx inner(TrigPoly const &f, TrigPoly const &g);

} // namespace ncg
