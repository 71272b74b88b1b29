// Symmetry of the spine-and-blobs gadget: group size, orbits, and the
// cheapest colorings that break every symmetry.
#include <iostream>

#include "symcolor/symcolor.hpp"

using namespace symcolor;

int main() {
    for (std::size_t blobs = 1; blobs <= 4; ++blobs) {
        FiniteGraph g = realize({GadgetKind::g_pendant, 2, blobs});
        AutomorphismSet aut = enumerate_automorphisms(g);
        std::cout << "blobs=" << blobs << " order=" << g.order() << " |Aut|=" << aut.size() << " orbits:";
        for (const auto& orbit : orbits(aut)) {
            std::cout << " {";
            for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? "," : "") << g.label(orbit[i]);
            std::cout << "}";
        }
        std::cout << "\n";
        for (Parameter p : {Parameter::d, Parameter::chi_d, Parameter::d_total}) {
            ParameterResult r = compute_parameter(g, p);
            std::cout << "  " << to_string(p) << " = " << *r.value << "\n";
        }
    }
}
