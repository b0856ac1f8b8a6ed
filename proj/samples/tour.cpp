// A short walk through the library: build a few constructions, test them and
// compute their homogeneous numbers.

#include <iostream>

#include "hyperfree/exact.hpp"
#include "hyperfree/generators.hpp"
#include "hyperfree/homogeneous.hpp"
#include "hyperfree/structure.hpp"

using namespace hyperfree;

int main() {
  const auto ff = parse_family("4:1,4:3,4:4");
  for (int n : {7, 9, 11}) {
    auto g = gen_ngon(n);
    auto r = homogeneous(g);
    std::cout << "ngon(" << n << "): " << g.edge_count() << " edges, free=" << is_q_free(g, ff).free << ", alpha=" << r.alpha
              << ", omega=" << r.omega << '\n';
  }

  std::vector<int> parts{2, 2, 2, 2, 2, 2};
  auto b = gen_blowup(parts);
  auto cls = ff_recognize(b);
  std::cout << "blow-up of H' with parts of size 2: kind=" << to_string(cls.kind) << ", h=" << homogeneous(b).h << '\n';

  auto s = gen_plane_stars(3);
  auto rep = check_charac_2_4(s);
  std::cout << "stars on the lines of PG(2,3): " << rep.components.size() << " tight components, all stars="
            << rep.all_components_stars << ", edge bound holds=" << edge_bound_check(s).holds << '\n';

  auto fano = gen_projective_plane(2).lines;
  std::cout << "Fano plane: alpha2=" << alpha2(fano).size << ", g=" << g_value(fano)
            << ", h(clique fill)=" << homogeneous(clique_fill(fano)).h << '\n';

  auto rec = exact_h(6, parse_family("4:0,4:2,4:3"));
  std::cout << "h_3(6, {(4,0),(4,2),(4,3)}) = " << *rec.value << " over " << rec.explored << " classes; witness:\n"
            << to_h3_string(*rec.witness);
  return 0;
}
