#ifndef TRI4_TRIANGULATION_HPP
#define TRI4_TRIANGULATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tri4/perm5.hpp"

namespace tri4 {

using PentId = std::int32_t;

// One half of a facet gluing: the target pentachoron/facet and the slot
// bijection carrying source slots to target slots. pent < 0 means unglued.
struct Gluing {
    PentId pent = -1;
    std::int8_t facet = -1;
    Perm5 perm;

    bool glued() const { return pent >= 0; }
    friend bool operator==(const Gluing&, const Gluing&) = default;
};

/**
 * A (possibly singular) triangulation of a 4-manifold: n pentachora whose
 * facets are glued in pairs. Facet f of a pentachoron is the tetrahedron
 * opposite vertex slot f. Identity of every face is positional — a vertex
 * is a (pentachoron, slot) corner, never a label — so repeated and
 * self-identified faces are fully supported.
 *
 * A well-formed gluing table is an involution: if (p,f) maps to (q,g) under
 * perm pi then (q,g) maps back to (p,f) under pi^-1, with pi(f) = g and
 * (p,f) != (q,g). glue_pair() maintains this; set_half_gluing() writes one
 * side only, so defective tables can be built for validate() to report on.
 *
 * Pentachora may optionally carry a per-slot vertex type in 0..9 (the Davis
 * builder labels barycentre types 0..4); gluings are then expected to
 * preserve types, which validate() checks.
 */
class Triangulation {
public:
    explicit Triangulation(std::int64_t pentachora = 0);

    std::int64_t size() const { return static_cast<std::int64_t>(gluings_.size()) / 5; }

    // Appends an unglued pentachoron and returns its id.
    PentId add_pentachoron();

    const Gluing& gluing(PentId p, int facet) const { return gluings_[idx(p, facet)]; }
    bool is_glued(PentId p, int facet) const { return gluing(p, facet).glued(); }

    // Glues (p,f) to (q,g) via perm (and (q,g) back via the inverse).
    // Requires perm[f] == g, (p,f) != (q,g) and both facets unglued.
    void glue_pair(PentId p, int f, PentId q, int g, const Perm5& perm);

    // Removes the gluing at (p,f) and at its partner.
    void unglue_pair(PentId p, int f);

    // Raw single-sided write; use for constructing defective tables under
    // test or inside move surgery that restores consistency afterwards.
    void set_half_gluing(PentId p, int f, const Gluing& target);

    bool has_types() const { return !types_.empty(); }
    int type_of(PentId p, int slot) const { return types_[idx(p, slot)]; }
    void set_types(std::vector<std::int8_t> per_slot_types);
    void clear_types() { types_.clear(); }
    const std::vector<std::int8_t>& raw_types() const { return types_; }

    std::int64_t unglued_facet_count() const;
    bool closed() const { return unglued_facet_count() == 0; }

private:
    std::size_t idx(PentId p, int facet) const {
        return static_cast<std::size_t>(p) * 5 + static_cast<std::size_t>(facet);
    }

    std::vector<Gluing> gluings_;     // 5 per pentachoron
    std::vector<std::int8_t> types_;  // empty, or 5 per pentachoron
};

struct Violation {
    PentId pent;
    int facet;
    std::string message;
};

struct ValidationReport {
    bool valid = true;           // no violations
    bool closed = false;         // every facet glued
    std::int64_t unglued = 0;
    std::vector<Violation> violations;
};

// Checks the gluing involution, the no-self-gluing rule, perm consistency
// (perm[f] == g on both sides, inverse pairing) and type preservation when
// types are present. Diagnostics are the return value; nothing throws.
ValidationReport validate(const Triangulation& tri);

// Throws UserError if validate() reports violations (message names the
// first one). Used as the entry guard of downstream operations.
void require_valid(const Triangulation& tri, const char* operation);
void require_closed(const Triangulation& tri, const char* operation);

struct FVector {
    std::int64_t f[5] = {0, 0, 0, 0, 0};
    std::int64_t chi = 0;
};

// Face-class counts per dimension; f[4] is the pentachoron count and chi
// the alternating sum. Requires a valid closed triangulation.
FVector f_vector(const Triangulation& tri);

struct DualGraph {
    std::int64_t nodes = 0;
    std::int64_t edges = 0;          // glued facet pairs
    bool connected = false;
    std::int64_t components = 0;
    // component id per pentachoron, breadth-first from pentachoron 0
    std::vector<std::int32_t> component;
    // spanning forest: for each pentachoron != BFS root, the facet gluing
    // (pent, facet) on the path toward the root; facet -1 at roots
    std::vector<std::int8_t> tree_facet;
    std::vector<PentId> tree_parent;
};

// Multigraph on pentachora with one edge per glued facet pair, plus the
// deterministic BFS spanning forest (root 0, ties by facet index).
DualGraph dual_graph(const Triangulation& tri);

struct OrientationResult {
    bool orientable = false;
    // +1/-1 per pentachoron when orientable
    std::vector<std::int8_t> sign;
    // when non-orientable: an odd cycle of gluings, as (pent, facet) hops
    std::vector<std::pair<PentId, int>> witness_cycle;
};

// Propagates a sign across gluings (flipping by the permutation's parity);
// succeeds iff a consistent assignment exists. Requires the dual graph to
// be connected; throws UserError listing component count otherwise.
OrientationResult orientability(const Triangulation& tri);

} // namespace tri4

#endif
