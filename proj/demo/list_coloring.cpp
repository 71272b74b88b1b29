// Proper distinguishing coloring of a gadget truncation from rotated lists,
// printed together with the repairs that were needed.
#include <iostream>

#include "symcolor/symcolor.hpp"

using namespace symcolor;

int main(int argc, char** argv) {
    const std::size_t blobs = argc > 1 ? std::stoul(argv[1]) : 4;
    FiniteGraph g = realize({GadgetKind::h1_independent, 2, blobs});
    VertexId root = 0;
    while (g.degree(root) != max_degree(g)) ++root;
    ListAssignment lists = rotated_lists(g, root, 2 * max_degree(g) - 1);
    ListDistinguishingResult r = list_distinguishing(g, lists);
    for (VertexId v = 0; v < g.order(); ++v) std::cout << g.label(v) << " -> " << r.coloring.vertex[v] << "\n";
    std::cout << "repairs:\n" << trace_to_json_lines(r.trace);
}
