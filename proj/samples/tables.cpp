// Prints the first rows of the dual-code table at P1 and one CSS range for q = 2, n = 5,
// then checks a small evaluation code over F_64.
#include <iostream>

#include "gk2/gk2.hpp"

int main() {
  const auto c = gk2::CurveParams::make(2, 5);
  const auto s = gk2::h_o1(c);
  std::cout << "genus " << c.g << ", length " << c.code_length() << '\n';
  for (const auto& row : gk2::code_table(s, c, 1, 8))
    std::cout << "k=" << row.dimension << " rho=" << row.rho << " nu=" << row.nu << " d_ord=" << row.d_ord << '\n';

  const auto range = gk2::range_prop(c, s, 60);
  std::cout << "l=60: D >= " << range.d_floor << ", s in [" << range.s_min << ", " << range.s_max << "]\n";

  const auto small = gk2::CurveParams::make(2, 3);
  const auto f = gk2::make_curve_field(small);
  const auto pts = gk2::enumerate_points(small, f);
  const auto cm = gk2::code_matrix(small, f, pts, gk2::Orbit::o2, 10);
  std::cout << pts.size() << " points over F_" << f.size() << ", rank " << gk2::rank(cm.matrix, f) << " for l=10\n";
}
