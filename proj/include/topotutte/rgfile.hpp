#pragma once

// Text format for ribbon graphs:
//
//   # comment
//   vertex <name>: <half> <half> ...          rotation, counterclockwise
//   edge <name>: <halfA> <halfB> [twist] [x=<poly>] [y=<poly>] [sign=+|-] [zero] [phantom]
//   arrow v:<vertex>:<gap>|e:<edge>:<0|1> <+|-> ...
//
// Edge indices follow the order of the edge lines; halfA is half-edge 2e.
// Weights are rationals or polynomial expressions without spaces (x=3/2,
// x=x_a). Several arrow lines on one arc append in order.

#include "topotutte/ribbon_graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace topotutte {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

RibbonGraph parse_rg(std::string_view text);
std::string serialize_rg(const RibbonGraph& g);

RibbonGraph read_rg_file(const std::string& path);

}  // namespace topotutte
