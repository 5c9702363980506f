#ifndef TRI4_DAVIS_HPP
#define TRI4_DAVIS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tri4/colouring.hpp"
#include "tri4/coxeter.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

/**
 * The Davis manifold pipeline.
 *
 * The 120-cell with dihedral angle 2 pi / 5 is tiled by the 14,400 copies of
 * the Coxeter simplex indexed by the [5,3,3] group: one pentachoron per
 * element, slot i carrying the barycentre type i (vertex, edge midpoint,
 * pentagon centre, dodecahedron centre, centre of the 120-cell). Facet i of
 * element g is glued to facet i of g r_i for i <= 3; facet 4 (opposite the
 * centre vertex) is the boundary.
 *
 * Closing the complex means identifying opposite boundary dodecahedra. The
 * antipodal map is the central element z = (r0 r1 r2 r3)^15; the
 * combinatorial twist of the identification is not pinned by that alone, so
 * the pairing g -> z g w is searched over the involutions w of the
 * dodecahedral stabiliser <r0, r1, r2>, and each candidate is accepted or
 * rejected on hard evidence: validity, orientability, the quotient census
 * (1 vertex, 60 edges, 144 pentagons, 60 dodecahedra) and chi = 26.
 */
struct DavisCandidate {
    std::int32_t w_coset = -1;
    std::vector<int> w_word;
    bool fixed_point_free = false;
    bool valid = false;
    bool orientable = false;
    // vertex classes per type 0..4 of the closed complex
    std::array<std::int64_t, 5> type_counts{};
    std::int64_t chi = 0;
    bool passes = false;
    std::string failure; // first failed check, empty when passing
};

// Trivial-subgroup table of the [5,3,3] group (order 14,400).
CosetTable davis_coset_table(std::int64_t coset_budget = 1'000'000);

// The bounded, typed triangulation of the 120-cell: 14,400 pentachora, one
// unglued facet each (opposite the type-4 slot). Validates the boundary
// census (600 vertices, 1200 edges, 720 pentagons, 120 dodecahedra as typed
// vertex-class counts) and throws InternalError on mismatch.
Triangulation build_120cell(const CosetTable& table);

struct DavisSearch {
    std::vector<DavisCandidate> candidates; // every involution tried, in order
    std::vector<std::size_t> passing;       // indices of passing candidates
};

// Runs the identification search. build_each = false only records
// fixed-point-freeness (used by --list-candidates without the full cost).
DavisSearch davis_search(const CosetTable& table, const Triangulation& bounded);

// The closed Davis triangulation: the first passing candidate (candidates
// are ordered by twist coset, so this is deterministic). Throws UserError
// if z fails to be a nontrivial central involution or no candidate passes.
// When several candidates pass, all are reported in `search` and the first
// is returned; the acceptance path cross-checks their extracted data.
struct DavisManifold {
    Triangulation tri; // closed, typed
    std::int32_t w_coset = -1;
    DavisSearch search;
};
DavisManifold davis_identify(const CosetTable& table, const Triangulation& bounded);

// Colour classes from types: {0,1} -> 0, {2} -> 1, {3,4} -> 2.
Colouring davis_colouring(const Triangulation& tri,
                          const FaceClasses& vertex_classes);

} // namespace tri4

#endif
