#pragma once

#include <iosfwd>
#include <string>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

// `.tgl` text format, one item per line, '#' starts a comment:
//   T = (((1,2),3),(4,5))
//   S = (((1,(2,3)),4),5)
//   phi = 4 2 5 1 3        # i-th entry is phi of the i-th smallest T label
Tanglegram read_tanglegram(std::istream& in);
Tanglegram read_tanglegram_file(const std::string& path);
std::string write_tanglegram(const Tanglegram& tg);

// Layout text format, two lines:
//   X = 3 1 2 5 4
//   Y = 5 4 2 3 1
Layout read_layout(std::istream& in);
Layout read_layout_file(const std::string& path);
std::string write_layout(const Layout& ly);

}  // namespace tangle
