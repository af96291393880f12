#include "mentee/environments/layout_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mentee {

namespace {

Cell parse_symbol(char c, std::size_t line_no) {
  switch (c) {
    case 'E': return Cell::Empty;
    case 'W': return Cell::Wall;
    case 'D': return Cell::Dispenser;
    case 'T': return Cell::Trap;
    default:
      throw std::runtime_error("layout line " + std::to_string(line_no) +
                               ": unknown cell symbol '" + std::string(1, c) + "'");
  }
}

}  // namespace

GridLayout parse_layout(std::istream& in, const GridRewards& rewards) {
  GridLayout layout;
  layout.rewards = rewards;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    if (height == 0) {
      width = line.size();
    } else if (line.size() != width) {
      throw std::runtime_error("layout line " + std::to_string(line_no) + ": expected " +
                               std::to_string(width) + " cells, found " +
                               std::to_string(line.size()));
    }
    for (char c : line) layout.cells.push_back(parse_symbol(c, line_no));
    ++height;
  }
  if (height == 0) throw std::runtime_error("layout: no rows");
  layout.geometry = {width, height};
  layout.start = 0;
  if (layout.cells[0] != Cell::Empty) throw std::runtime_error("layout: start cell must be E");
  return layout;
}

GridLayout parse_layout_string(const std::string& text, const GridRewards& rewards) {
  std::istringstream in(text);
  return parse_layout(in, rewards);
}

GridLayout load_layout(const std::string& path, const GridRewards& rewards) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open layout file: " + path);
  try {
    return parse_layout(in, rewards);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string format_layout(const GridLayout& layout) {
  std::string out;
  for (std::size_t y = 0; y < layout.geometry.height; ++y) {
    for (std::size_t x = 0; x < layout.geometry.width; ++x) {
      out += cell_symbol(layout.cells[layout.geometry.index(x, y)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mentee
