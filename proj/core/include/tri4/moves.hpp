#ifndef TRI4_MOVES_HPP
#define TRI4_MOVES_HPP

#include <cstdint>
#include <vector>

#include "tri4/colouring.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

// A double-pentachoron: two pentachora glued along their shared pure facet
// (the facet opposite each one's singleton-colour apex).
struct PentPair {
    PentId first = -1;
    PentId second = -1;
    std::int8_t first_apex = -1;  // apex slot == pure facet index
    std::int8_t second_apex = -1;
    std::uint8_t apex_colour = 0;
};

struct DoublePairing {
    std::vector<PentPair> pairs; // sorted by first; first < second
};

// Matches every pentachoron with its partner across the pure facet. The
// relation must be a fixed-point-free involution and paired apexes must
// share the singleton colour; both are validated and violations throw
// UserError (they cannot occur for a verified colouring on a closed valid
// complex, but the checks keep hostile input honest).
DoublePairing pair_doubles(const Triangulation& tri,
                           const FaceClasses& vertex_classes,
                           const Colouring& colouring);

struct MoveResult {
    Triangulation tri;
    Colouring colouring; // on the new triangulation's vertex classes
};

// Applies one 2-4 bistellar move: the two pentachora of pairs[pair_index]
// (sharing pure facet tau with apexes a, b) are replaced by four pentachora,
// each spanned by {a, b} and one triangle of tau. Surviving pentachora keep
// their relative order; the four new ones are appended. Vertex types are
// dropped (the replacement gluings do not preserve them). Throws UserError
// if the pair is stale.
MoveResult move_2_4(const Triangulation& tri, const FaceClasses& vertex_classes,
                    const Colouring& colouring, const DoublePairing& pairing,
                    std::size_t pair_index);

struct PipelineResult {
    Triangulation tri;
    Colouring colouring;
    std::int64_t pairs_processed = 0;
    FVector f_before, f_after;
    bool orientable_before = false, orientable_after = false;
};

// Pairs all pentachora and applies the 2-4 move to every double, in order
// of each pair's first pentachoron. Output pentachora are numbered by move:
// pair k yields pentachora 4k..4k+3. Postconditions (pentachoron count
// doubles, chi and orientability unchanged, colouring still valid) are
// recomputed and enforced; failure throws InternalError.
PipelineResult run_pipeline(const Triangulation& tri,
                            const FaceClasses& vertex_classes,
                            const Colouring& colouring);

} // namespace tri4

#endif
