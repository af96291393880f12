#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mentee/bayes/grid_belief.hpp"

namespace mentee {

// Flat key=value dump of the grid posteriors: position=, trapped=,
// env.<cell>=p_empty,p_wall,p_dispenser,p_trap and optionally
// mentor.<cell>=<15 subset weights> in subset-mask order.
void write_snapshot(std::ostream& out, const GridBelief& env, const MentorGridPosterior* mentor);
std::string snapshot_string(const GridBelief& env, const MentorGridPosterior* mentor);
std::map<std::string, std::vector<double>> parse_snapshot(std::istream& in);

}  // namespace mentee
