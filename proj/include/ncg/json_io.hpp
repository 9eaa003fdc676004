#pragma once

// JSON encodings of the engine's values. Decoders throw std::invalid_argument
// with a path-like diagnostic on malformed input.

#include "ncg/ymh.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace ncg {

using json = nlohmann::json;

json to_json(TrigPoly const &f);
TrigPoly trigpoly_from_json(json const &j);

/// Row-major list of [re, im] pairs.
json to_json(Matrix const &m);
Matrix matrix_from_json(json const &j);

json to_json(AlgElement const &a);
AlgElement alg_from_json(json const &j);

json to_json(NCForm const &w);
NCForm form_from_json(json const &j);

/// The potential part and extra part of omega = alpha_from_A(A) + extra.
struct ConnectionFile
{
	int n = 2;
	int d = 1;
	std::vector<AlgElement> A;
	NCForm extra;

	ConnectionForm omega() const;
};

json to_json(ConnectionFile const &c);
ConnectionFile connection_from_json(json const &j);

json to_json(ActionConfig const &cfg);
/// Missing keys keep their defaults.
ActionConfig config_from_json(json const &j, ActionConfig base = {});

json to_json(VacuumReport const &r);

void write_trajectory_csv(std::ostream &os, std::vector<TrajectoryPoint> const &traj);

json read_json_file(std::string const &path);
/// Pretty-printed with a trailing newline.
void write_json_file(std::string const &path, json const &j);

} // namespace ncg
