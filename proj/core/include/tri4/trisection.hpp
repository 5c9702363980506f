#ifndef TRI4_TRISECTION_HPP
#define TRI4_TRISECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tri4/colouring.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

// Subgraph of the 1-skeleton spanned by the colour-k vertex classes. Its
// first Betti number is the genus of the corresponding handlebody piece.
struct SpineGraph {
    int colour = 0;
    std::int64_t vertices = 0;  // colour-k vertex classes
    std::int64_t edges = 0;     // edge classes with both endpoints colour k
    std::int64_t components = 0;
    std::int64_t betti1 = 0;    // E - V + components
    bool connected = false;     // exactly one component on a nonempty graph
};

// The central surface: one square per pentachoron, corners on trichromatic
// triangle classes, edges crossing trichromatic facets.
struct SurfaceCensus {
    std::int64_t squares = 0;   // F = pentachoron count
    std::int64_t edges = 0;     // E = 2F
    std::int64_t vertices = 0;  // trichromatic triangle classes
    std::int64_t chi = 0;       // V - E + F
    std::int64_t components = 0;
    bool connected = false;
    bool orientable = false;
    std::optional<std::int64_t> genus; // (2 - chi)/2 when connected orientable
    std::vector<std::int64_t> vertex_degrees; // corners per trichromatic class
    std::string diagnostic; // why genus is absent, when it is
};

struct TrisectionReport {
    std::int64_t genus = 0;                 // g of the central surface
    std::array<std::int64_t, 3> handle_genus{}; // g0, g1, g2 (spine betti1)
    SurfaceCensus surface;
    std::array<SpineGraph, 3> spines;
    std::int64_t chi = 0;                   // of the 4-manifold
    bool chi_check = false;                 // 2 + g - g0 - g1 - g2 == chi
};

// Requirements shared by the extraction operations: valid, closed, every
// pentachoron 2-2-1, and pure facets glued pure-to-pure apex-to-apex (the
// checkable part of "the move pipeline has run"). Throws UserError.
void require_trisection_input(const Triangulation& tri,
                              const FaceClasses& vertex_classes,
                              const Colouring& colouring);

SpineGraph spine_graph(const Triangulation& tri, const FaceClasses& vertex_classes,
                       const Colouring& colouring, int colour);

// Census of the square complex. Errors (disconnected, non-orientable) are
// reported in the census, not thrown; genus is set only when the surface is
// connected and orientable.
SurfaceCensus central_surface(const Triangulation& tri,
                              const FaceClasses& vertex_classes,
                              const Colouring& colouring);

// Full extraction. Throws UserError when a spine graph is disconnected or
// the surface lacks a genus (the decomposition is then not a trisection),
// and InternalError when the integer identity 2 + g - g0 - g1 - g2 = chi
// fails (a pipeline bug, not bad input).
TrisectionReport trisection_report(const Triangulation& tri,
                                   const FaceClasses& vertex_classes,
                                   const Colouring& colouring);

// Stable key-sorted JSON rendering of the report.
std::string report_to_json(const TrisectionReport& report);

} // namespace tri4

#endif
