#ifndef TRI4_PRESENTATION_HPP
#define TRI4_PRESENTATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tri4/triangulation.hpp"

namespace tri4 {

/**
 * Presentation of the fundamental group read off the dual 2-complex:
 * one generator per facet-gluing pair outside the dual spanning tree, one
 * relator per triangle class, spelled by walking once around the triangle's
 * corner cycle and recording each non-tree dual edge crossed.
 *
 * Letters are signed 1-based generator indices: +k when the dual edge is
 * crossed from its lexicographically smaller (pentachoron, facet) side,
 * -k the other way.
 */
struct GroupPresentation {
    std::int64_t generators = 0;
    std::vector<std::vector<std::int64_t>> relators;
    // generator id -> canonical (smaller) half of its dual edge
    std::vector<std::pair<PentId, int>> generator_edges;
};

// Requires a valid, closed, dual-connected triangulation. Throws UserError
// "non-manifold triangle class" when a triangle's corner walk does not close
// into a single cycle covering the class.
GroupPresentation pi1_presentation(const Triangulation& tri);

// Text export: "pres v1", generator count, one "rel ..." line per relator,
// lines sorted lexicographically.
std::string write_presentation(const GroupPresentation& pres);

} // namespace tri4

#endif
