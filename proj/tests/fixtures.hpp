#ifndef TRI4_TESTS_FIXTURES_HPP
#define TRI4_TESTS_FIXTURES_HPP

#include <array>
#include <vector>

#include "tri4/colouring.hpp"
#include "tri4/triangulation.hpp"

namespace tri4::tests {

// Boundary of the 5-simplex on vertices 0..5: pentachoron i is the face
// omitting vertex i, slots in increasing vertex order. The standard minimal
// simplicial S^4.
inline Triangulation boundary_5_simplex() {
    Triangulation tri(6);
    auto slot_of = [](int pent, int vertex) {
        // position of `vertex` among {0..5} \ {pent}
        return vertex < pent ? vertex : vertex - 1;
    };
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            // shared facet omits vertices i and j
            std::array<std::uint8_t, 5> img{};
            for (int v = 0; v < 6; ++v) {
                if (v == i || v == j) continue;
                img[slot_of(i, v)] = static_cast<std::uint8_t>(slot_of(j, v));
            }
            img[slot_of(i, j)] = static_cast<std::uint8_t>(slot_of(j, i));
            tri.glue_pair(i, slot_of(i, j), j, slot_of(j, i),
                          Perm5::from_images(img));
        }
    }
    return tri;
}

// The colouring of boundary_5_simplex() that pairs vertices {0,1}, {2,3},
// {4,5}. Vertex classes are ordered 1,2,3,4,5,0 by least corner.
inline Colouring pair_colouring_for_boundary_5_simplex() {
    return Colouring{{0, 1, 1, 2, 2, 0}};
}

// Two pentachora glued by the identity on all five facets; a singular S^4.
inline Triangulation double_pentachoron() {
    Triangulation tri(2);
    for (int f = 0; f < 5; ++f)
        tri.glue_pair(0, f, 1, f, Perm5::identity());
    return tri;
}

// Relabels pentachora by `perm` (new id of pentachoron p is perm[p]).
inline Triangulation relabel(const Triangulation& tri,
                             const std::vector<PentId>& perm) {
    Triangulation out(tri.size());
    for (PentId p = 0; p < tri.size(); ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            if (!gl.glued()) continue;
            out.set_half_gluing(perm[p], f, Gluing{perm[gl.pent], gl.facet, gl.perm});
        }
    }
    if (tri.has_types()) {
        std::vector<std::int8_t> types(tri.size() * 5);
        for (PentId p = 0; p < tri.size(); ++p)
            for (int s = 0; s < 5; ++s)
                types[perm[p] * 5 + s] = static_cast<std::int8_t>(tri.type_of(p, s));
        out.set_types(std::move(types));
    }
    return out;
}

} // namespace tri4::tests

#endif
