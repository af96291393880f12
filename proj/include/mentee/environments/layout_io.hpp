#pragma once

#include <iosfwd>
#include <string>

#include "mentee/environments/gridworld.hpp"

namespace mentee {

// One row per line using E/W/D/T; lines starting with '#' are comments and
// blank lines are skipped. The start is the top-left cell, which must be E.
GridLayout parse_layout(std::istream& in, const GridRewards& rewards = {});
GridLayout parse_layout_string(const std::string& text, const GridRewards& rewards = {});
GridLayout load_layout(const std::string& path, const GridRewards& rewards = {});
std::string format_layout(const GridLayout& layout);

}  // namespace mentee
