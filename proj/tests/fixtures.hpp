#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pcenter/instance.hpp"

namespace fixtures {

/// Four collinear points at coordinates 0, 1, 4, 9 with I = J and
/// distances |x_i - x_j|. Optimum for p = 2 is 3 at open sites {1, 3}
/// (coordinates 1 and 9); the candidate radii are {0,1,3,4,5,8,9}.
inline pcenter::Instance four_point_line(int p = 2) {
  const std::vector<double> x{0, 1, 4, 9};
  std::vector<std::vector<double>> d(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d[i][j] = std::abs(x[i] - x[j]);
  return pcenter::Instance::from_matrix(d, p);
}

/// Three sites a,b,c where customer 0 has distances (1,3,5) — the
/// worked separation examples all refer to this row.
inline pcenter::Instance cuts_triple() {
  return pcenter::Instance::from_matrix(
      {{1, 3, 5}, {3, 0, 2}, {5, 2, 0}}, 1);
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::string("pcenter_test_") + std::to_string(counter++) + ".tmp";
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace fixtures
