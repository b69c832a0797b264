// Builds B((3,2),4), prints each vertex with its key, then the fiber minima
// together with mu(bottom, x).

#include <iostream>

#include "xtal/crystal.hpp"
#include "xtal/keymap.hpp"
#include "xtal/poset.hpp"

int main() {
    using namespace xtal;
    const auto g = generate(Shape{3, 2}, 4);
    const auto keys = compute_keys(g);
    std::cout << g.size() << " vertices, top rank " << g.max_rank() << "\n";
    for (VertexId v = 0; v < g.size(); ++v)
        std::cout << to_string(g.tableau(v)) << "  " << to_string(keys[v]) << "\n";

    MobiusCache<VertexId> cache;
    for (const auto& [j, x] : minimal_fiber_elements(g, keys))
        std::cout << "min of fiber at w_o" << to_string(j) << ": " << to_string(g.tableau(x))
                  << "  mu = " << mobius(g, g.bottom(), x, cache) << "\n";
}
