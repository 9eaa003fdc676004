#pragma once

// Yang-Mills-Higgs action over noncommutative connection forms, its exact
// gradient on a truncated Fourier parametrisation, and gradient descent to
// vacua.

#include "ncg/higgs.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

struct ActionConfig
{
	int n = 2;
	int d = 1;
	/// Largest |k_mu| of the Fourier modes parametrising omega.
	int fourier_cutoff = 1;
	/// Initial step of each backtracking line search.
	double step = 0.5;
	int max_iters = 20000;
	double grad_tol = 1e-8;
	/// Keep omega antihermitian on real derivations.
	bool restrict_compatible = true;

	/// Throws std::invalid_argument on out-of-range fields.
	void validate() const;
};

/// Weight |P ^ Q|^2 of a degree-2 basis element under the orthonormal
/// directions {d_mu} u {ad_{E_a} / sqrt 2}.
double orthonormal_weight(NCForm const &shape, CovectorMask mask);

/// S = sum_{P<Q} int Tr(R_PQ^dagger R_PQ) over orthonormal directions.
double ymh_action(ConnectionForm const &w);
double action_from_curvature(NCForm const &curvature);

/// Real coordinates on omega = -i theta + (truncated extra part).
///
/// Unrestricted: real and imaginary parts of every Fourier coefficient of
/// every matrix entry of every component. Restricted: the dx components are
/// i H and the theta components H for hermitian H = sum_b h^b T_b with real
/// functions h^b, T_0 = sqrt(2/n) 1 and T_b = E_b; coordinates are Re c_0
/// and (Re c_k, Im c_k) for k in the positive half of the frequency box.
class ParameterSpace
{
public:
	explicit ParameterSpace(ActionConfig const &cfg);

	size_t size() const { return directions_.size(); }
	ActionConfig const &config() const { return cfg_; }

	NCForm const &direction(size_t i) const { return directions_[i]; }
	/// dhat of direction(i); omega-independent.
	NCForm const &direction_differential(size_t i) const { return differentials_[i]; }

	NCForm extra(std::span<double const> params) const;
	ConnectionForm assemble(std::span<double const> params) const;
	/// Inverse of assemble; throws if omega is outside the truncated space.
	std::vector<double> project(ConnectionForm const &w, double tol = 1e-10) const;

private:
	struct Reader
	{
		CovectorMask mask;
		Matrix T;
		Freq k;
		bool imaginary;
		bool restricted;
		cplx factor;
	};

	ActionConfig cfg_;
	std::vector<NCForm> directions_;
	std::vector<NCForm> differentials_;
	std::vector<Reader> readers_;
};

/// Exact gradient of the action in the coordinates of space. Parameter
/// components are evaluated concurrently.
std::vector<double> ymh_gradient(ConnectionForm const &w, ParameterSpace const &space);
/// Same result, one component at a time.
std::vector<double> ymh_gradient_serial(ConnectionForm const &w,
                                        ParameterSpace const &space);

struct VacuumReport
{
	double action = 0;
	double grad_norm = 0;
	/// max over orthonormal pairs of the largest coefficient of R_PQ
	double curvature_norm = 0;
	double r1 = 0;
	double r2 = 0;
	int iterations = 0;
	bool converged = false;
	std::string status;
};

struct TrajectoryPoint
{
	int iter;
	double action;
	double grad_norm;
	double step;
};

struct MinimizeResult
{
	ConnectionForm omega;
	VacuumReport report;
	std::vector<TrajectoryPoint> trajectory;
};

/// Thrown when the action stops being finite.
class NonFiniteAction : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Gradient descent with Armijo backtracking (c = 1e-4, halving) from
/// omega0, which must lie in the truncated space of cfg.
MinimizeResult minimize(ConnectionForm const &omega0, ActionConfig const &cfg);

/// Report fields derived from a final omega (residuals against -i theta).
VacuumReport vacuum_report(ConnectionForm const &w, std::span<double const> gradient);

double euclidean_norm(std::span<double const> v);

} // namespace ncg
