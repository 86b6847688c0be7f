#include <iostream>

#include "lexcount/paths.hpp"
#include "lexcount/qstats.hpp"
#include "lexcount/routes.hpp"
#include "lexcount/transfer_matrix.hpp"

using namespace lexcount;

int main() {
  for (const char* spec : {"EN:3x3", "EN:4x3", "NE:3x4"}) {
    for (const char* pat : {"213", "1243", "2143"}) {
      const CountQuery q{parse_poset_spec(spec), {parse_permutation(pat)}};
      const auto out = count(q);
      std::cout << spec << " avoiding " << pat << ": " << out.primary.value << " via " << out.primary.label;
      if (out.checked.size() > 1) std::cout << " (" << out.checked.size() - 1 << " cross-checks)";
      std::cout << '\n';
    }
  }

  // Walk every extension of the 3x2 sawblade through its lattice path and back.
  const int s = 3, t = 2;
  for (const auto& pi : linear_extensions(saw_poset(s, t)).collect()) {
    const auto path = ext_to_fcpath(pi, s, t);
    std::cout << to_string(pi) << " -> " << format_ne(path)
              << (fcpath_to_ext(path, s, t) == pi ? "" : "  round trip failed") << '\n';
  }

  std::cout << "det(I - xB) for t = 4: " << char_poly(4).pretty('x') << '\n';
  std::cout << "inv polynomial of NE:2x3 avoiding 213: "
            << stat_gf(GridPoset::build(Family::NE, 2, 3), {parse_permutation("213")}, Stat::Inv).pretty('q') << '\n';
}
