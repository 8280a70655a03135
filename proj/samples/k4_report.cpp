// Structures on K_4 by two independent routes, grouped up to symmetry.

#include "arithlab/arithlab.hpp"

#include <iostream>

using namespace arithlab;

int main() {
  auto k4 = complete_graph(4);
  auto fractions = enumerate_complete(4);
  auto box = enumerate_bounded(k4, certified_box_complete(4));
  std::cout << "unit fractions: " << fractions.size() << "\nbox search:     " << box.size() << '\n'
            << (fractions == box ? "sets agree" : "sets differ") << "\n\n";

  auto classes = group_classes(k4, fractions);
  std::cout << classes.size() << " classes\n";
  for (const auto &c : classes) {
    const auto &s = c.front();
    std::cout << "  " << format_structure(s.d, s.r) << "  x" << c.size() << "  critical group "
              << critical_group(k4, s).torsion_string() << '\n';
  }
}
