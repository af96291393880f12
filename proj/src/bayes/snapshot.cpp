#include "mentee/bayes/snapshot.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mentee {

namespace {

template <class Array>
void write_row(std::ostream& out, const std::string& key, const Array& values) {
  out << key << '=';
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out << (i ? "," : "") << buf;
  }
  out << '\n';
}

}  // namespace

void write_snapshot(std::ostream& out, const GridBelief& env, const MentorGridPosterior* mentor) {
  out << "position=" << env.position() << '\n';
  out << "trapped=" << (env.trapped() ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < env.geometry().cells(); ++i) write_row(out, "env." + std::to_string(i), env.cell(i));
  if (mentor) {
    for (std::size_t i = 0; i < mentor->num_cells(); ++i) {
      write_row(out, "mentor." + std::to_string(i), mentor->cell(i));
    }
  }
}

std::string snapshot_string(const GridBelief& env, const MentorGridPosterior* mentor) {
  std::ostringstream out;
  write_snapshot(out, env, mentor);
  return out.str();
}

std::map<std::string, std::vector<double>> parse_snapshot(std::istream& in) {
  std::map<std::string, std::vector<double>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("snapshot: missing '=' in line: " + line);
    std::vector<double> values;
    std::stringstream fields(line.substr(eq + 1));
    std::string field;
    while (std::getline(fields, field, ',')) values.push_back(std::stod(field));
    out[line.substr(0, eq)] = std::move(values);
  }
  return out;
}

}  // namespace mentee
