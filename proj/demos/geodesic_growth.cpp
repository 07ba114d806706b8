// Prints, for the sets S_{4n} u {z}, the size of the geodesic between the first point and
// y_{4n} next to the solution bound of the three-point boundary {x1, x2, x3}.

#include <cstdlib>
#include <iostream>

#include "goodsets/goodsets.hpp"

int main(int argc, char** argv) {
  using namespace goodsets;
  std::size_t n_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 3;
  std::cout << "n  points  geodesic  inverse_row_sum  solution_bound\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto s = family_S4n_plus_z(n);
    auto g = geodesic(s, 0, 4 * n - 1);
    auto a_bound = max_row_abs_sum(invert(matrix_A(n)));
    auto bound = solution_bound_report(s, family_boundary({}));
    std::cout << n << "  " << s.size() << "  " << g.points.size() << "  " << to_string(a_bound) << " ("
              << a_bound.get_d() << ")  " << to_string(bound) << " (" << bound.get_d() << ")\n";
  }
}
