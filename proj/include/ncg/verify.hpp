#pragma once

// Randomised invariant suite over every module, driven by an explicit seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncg {

class Rng;

struct Invariant
{
	std::string name;
	double tolerance;
	/// One random trial; returns the residual compared against tolerance.
	std::function<double(Rng &, int n, int d)> trial;
};

/// All invariants, sorted by name.
std::vector<Invariant> const &invariant_suite();

struct InvariantResult
{
	std::string name;
	double tolerance = 0;
	double max_residual = 0;
	int trials = 0;
	bool pass = true;
	/// First exception message, if any trial threw.
	std::string error;
};

struct VerifyReport
{
	int n = 2;
	int d = 1;
	std::uint64_t seed = 0;
	int trials = 0;
	std::vector<InvariantResult> results;

	bool pass() const;
};

/// Runs every invariant `trials` times. Trial t of invariant I draws from
/// Rng(seed, stream_id(I.name) + t), so the report does not depend on how
/// trials are scheduled. Throws std::invalid_argument for n < 2 or d
/// outside [1, 4].
VerifyReport run_verify(int n, int d, std::uint64_t seed, int trials);
/// Same, one trial at a time.
VerifyReport run_verify_serial(int n, int d, std::uint64_t seed, int trials);

} // namespace ncg
