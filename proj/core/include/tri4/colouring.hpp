#ifndef TRI4_COLOURING_HPP
#define TRI4_COLOURING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tri4/face_classes.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

/**
 * A tricolouring: one colour in {0,1,2} per vertex class. Valid when every
 * pentachoron sees the pattern 2-2-1 — two slots of one colour, two of a
 * second, one of the third (the singleton, whose opposite facet is the
 * pentachoron's pure facet).
 *
 * Indexed by the vertex-class ids of FaceClasses::compute(tri, 0).
 */
struct Colouring {
    std::vector<std::uint8_t> by_class;
};

struct ColouringCheck {
    bool ok = true;
    std::vector<PentId> violating; // pentachora without the 2-2-1 pattern
};

// Checks the 2-2-1 pattern pentachoron by pentachoron. Throws UserError if
// the colouring's domain does not match the triangulation's vertex classes.
ColouringCheck verify_colouring(const Triangulation& tri,
                                const FaceClasses& vertex_classes,
                                const Colouring& colouring);

// Exhaustive backtracking over vertex classes in class-id (representative)
// order, colours tried in increasing order, pruned by 2-2-1 feasibility.
// The first solution found is the lexicographically least valid colouring;
// its first class is always colour 0. Returns nullopt when the search space
// is exhausted. Aborts with UserError when more than node_budget search
// nodes are expanded.
std::optional<Colouring> find_colouring(const Triangulation& tri,
                                        std::int64_t node_budget = 50'000'000);

// Colour from per-slot vertex types: types {0,1} -> colour 0, {2} -> 1,
// {3,4} -> 2. Requires types present, every class type-uniform, and the
// result to verify.
Colouring colouring_from_types(const Triangulation& tri,
                               const FaceClasses& vertex_classes);

} // namespace tri4

#endif
