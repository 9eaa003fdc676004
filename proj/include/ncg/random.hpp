#pragma once

// Reproducible random instances for property checks. Every draw is a pure
// function of (seed, stream, counter), so results do not depend on thread
// scheduling or platform.

#include "ncg/connections.hpp"

#include <cstdint>
#include <string_view>

namespace ncg {

/// Counter-based generator: output i is splitmix64(key(seed, stream) + i).
class Rng
{
public:
	Rng(std::uint64_t seed, std::uint64_t stream);

	std::uint64_t next_u64();
	/// Uniform in [0, 1) with 53 random bits.
	double uniform();
	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
	/// Uniform integer in [lo, hi].
	int integer(int lo, int hi);
	cplx complex_unit_box() { return {uniform(-1, 1), uniform(-1, 1)}; }

private:
	std::uint64_t key_;
	std::uint64_t counter_ = 0;
};

/// Stable 64-bit hash of a label, for deriving stream ids from names.
std::uint64_t stream_id(std::string_view label);

struct RandomShape
{
	int n = 2;
	int d = 1;
	/// Frequencies satisfy |k_mu| <= max_freq.
	int max_freq = 1;
	/// Number of Fourier terms drawn per function.
	int terms = 2;
	double scale = 1.0;
};

TrigPoly random_trigpoly(Rng &rng, RandomShape const &s);
/// Real-valued function (c_{-k} = conj c_k).
TrigPoly random_real_trigpoly(Rng &rng, RandomShape const &s);
AlgElement random_element(Rng &rng, RandomShape const &s);
AlgElement random_traceless(Rng &rng, RandomShape const &s);
/// sum_a i h^a E_a with real h^a.
AlgElement random_traceless_antihermitian(Rng &rng, RandomShape const &s);
std::vector<TrigPoly> random_field(Rng &rng, RandomShape const &s);
Derivation random_derivation(Rng &rng, RandomShape const &s);
/// Real field and antihermitian inner part.
Derivation random_real_derivation(Rng &rng, RandomShape const &s);
/// A p-form with `count` random basis monomials.
NCForm random_form(Rng &rng, RandomShape const &s, int degree, int count);
/// Every basis monomial of degree 1 filled with a random coefficient.
NCForm random_one_form(Rng &rng, RandomShape const &s);
/// A 1-form with central coefficients.
NCForm random_central_one_form(Rng &rng, RandomShape const &s);
std::vector<AlgElement> random_potential(Rng &rng, RandomShape const &s);
ConnectionForm random_su_connection(Rng &rng, RandomShape const &s);

/// Constant unitary from the QR factor of a random matrix; determinant one
/// when special.
Matrix random_constant_unitary(Rng &rng, int n, bool special);
/// V diag(exp(i k_j.x)) W with constant unitaries V, W and frequencies
/// |k_j| <= max_freq; the frequencies sum to zero when special.
AlgElement random_unitary(Rng &rng, RandomShape const &s, bool special);

} // namespace ncg
