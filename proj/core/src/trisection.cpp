#include "tri4/trisection.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tri4/errors.hpp"
#include "tri4/moves.hpp"

namespace tri4 {

namespace {

struct UnionFind {
    std::vector<std::int64_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int64_t find(std::int64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// The square inside one 2-2-1 pentachoron: corners on the four trichromatic
// triangles, one edge on each trichromatic facet. Corners are named by the
// slot bitmask of their triangle; edges carry a fixed traversal direction
// (the reference orientation of the square).
struct Square {
    // edge on trichromatic facet `facet`: start/end corner triangle masks
    struct Edge {
        int facet;
        std::uint32_t start, end;
    };
    std::array<Edge, 4> edges;
    int pure_facet; // the bichromatic facet (opposite the apex)
};

Square square_of(const FaceClasses& classes, const Colouring& colouring, PentId p) {
    int slots_by_colour[3][5];
    int counts[3] = {0, 0, 0};
    for (int s = 0; s < 5; ++s) {
        const int c = colouring.by_class[classes.class_of(p, s)];
        slots_by_colour[c][counts[c]++] = s;
    }
    int apex = -1, cs = -1, ds = -1;
    for (int c = 0; c < 3; ++c) {
        if (counts[c] == 1) apex = slots_by_colour[c][0];
        else if (cs == -1) cs = c;
        else ds = c;
    }
    if (apex == -1 || counts[cs] != 2 || counts[ds] != 2)
        throw UserError("central_surface: pentachoron " + std::to_string(p) +
                        " is not 2-2-1");
    const int x1 = slots_by_colour[cs][0], x2 = slots_by_colour[cs][1];
    const int y1 = slots_by_colour[ds][0], y2 = slots_by_colour[ds][1];
    const auto corner = [apex](int x, int y) {
        return (1u << x) | (1u << y) | (1u << apex);
    };
    Square sq;
    sq.pure_facet = apex;
    sq.edges = {Square::Edge{x2, corner(x1, y1), corner(x1, y2)},
                Square::Edge{y1, corner(x1, y2), corner(x2, y2)},
                Square::Edge{x1, corner(x2, y2), corner(x2, y1)},
                Square::Edge{y2, corner(x2, y1), corner(x1, y1)}};
    return sq;
}

std::uint32_t apply_mask(const Perm5& perm, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (int s = 0; s < 5; ++s)
        if (mask & (1u << s)) out |= 1u << perm[s];
    return out;
}

} // namespace

void require_trisection_input(const Triangulation& tri,
                              const FaceClasses& vertex_classes,
                              const Colouring& colouring) {
    require_closed(tri, "trisection");
    const ColouringCheck check = verify_colouring(tri, vertex_classes, colouring);
    if (!check.ok)
        throw UserError("trisection: colouring violates the 2-2-1 pattern at "
                        "pentachoron " + std::to_string(check.violating.front()));
    // pure facets must pair apex-to-apex; pair_doubles validates exactly that
    (void)pair_doubles(tri, vertex_classes, colouring);
}

SpineGraph spine_graph(const Triangulation& tri, const FaceClasses& vertex_classes,
                       const Colouring& colouring, int colour) {
    require_closed(tri, "spine_graph");
    if (colour < 0 || colour > 2)
        throw UserError("spine_graph: colour must be 0, 1 or 2");
    const ColouringCheck check = verify_colouring(tri, vertex_classes, colouring);
    if (!check.ok)
        throw UserError("spine_graph: invalid colouring");

    SpineGraph graph;
    graph.colour = colour;

    std::vector<std::int64_t> local(vertex_classes.count(), -1);
    for (std::int32_t cls = 0; cls < vertex_classes.count(); ++cls)
        if (colouring.by_class[cls] == colour) local[cls] = graph.vertices++;

    UnionFind uf(static_cast<std::size_t>(graph.vertices));
    const FaceClasses edge_classes = FaceClasses::compute(tri, 1);
    const FaceTable& edges = face_table(1);
    for (std::int32_t cls = 0; cls < edge_classes.count(); ++cls) {
        const Corner rep = edge_classes.representative(cls);
        const int s = edges.slots[rep.face][0];
        const int t = edges.slots[rep.face][1];
        const std::int64_t a = local[vertex_classes.class_of(rep.pent, s)];
        const std::int64_t b = local[vertex_classes.class_of(rep.pent, t)];
        if (a < 0 || b < 0) continue;
        ++graph.edges;
        uf.unite(a, b);
    }
    for (std::int64_t v = 0; v < graph.vertices; ++v)
        if (uf.find(v) == v) ++graph.components;
    graph.betti1 = graph.edges - graph.vertices + graph.components;
    graph.connected = graph.vertices > 0 && graph.components == 1;
    return graph;
}

SurfaceCensus central_surface(const Triangulation& tri,
                              const FaceClasses& vertex_classes,
                              const Colouring& colouring) {
    require_trisection_input(tri, vertex_classes, colouring);

    const std::int64_t n = tri.size();
    SurfaceCensus census;
    census.squares = n;
    census.edges = 2 * n;

    std::vector<Square> squares;
    squares.reserve(static_cast<std::size_t>(n));
    for (PentId p = 0; p < n; ++p)
        squares.push_back(square_of(vertex_classes, colouring, p));

    // vertices: trichromatic triangle classes
    const FaceClasses tri_classes = FaceClasses::compute(tri, 2);
    const FaceTable& triangles = face_table(2);
    std::vector<char> trichromatic(tri_classes.count(), 0);
    for (std::int32_t cls = 0; cls < tri_classes.count(); ++cls) {
        const Corner rep = tri_classes.representative(cls);
        bool seen[3] = {false, false, false};
        for (int j = 0; j < 3; ++j)
            seen[colouring.by_class[vertex_classes.class_of(
                rep.pent, triangles.slots[rep.face][j])]] = true;
        if (seen[0] && seen[1] && seen[2]) {
            trichromatic[cls] = 1;
            ++census.vertices;
            census.vertex_degrees.push_back(tri_classes.size_of(cls));
        }
    }
    census.chi = census.vertices - census.edges + census.squares;

    // connectivity and orientability: propagate a sign per square across
    // the trichromatic facet gluings
    std::vector<std::int8_t> sign(static_cast<std::size_t>(n), 0);
    bool orientable = true;
    census.components = 0;
    for (PentId seed = 0; seed < n; ++seed) {
        if (sign[seed] != 0) continue;
        ++census.components;
        sign[seed] = 1;
        std::deque<PentId> queue{seed};
        while (!queue.empty()) {
            const PentId p = queue.front();
            queue.pop_front();
            for (const Square::Edge& edge : squares[p].edges) {
                const Gluing& gl = tri.gluing(p, edge.facet);
                const Square& other = squares[gl.pent];
                if (other.pure_facet == gl.facet)
                    throw InternalError("central_surface: trichromatic facet "
                                        "glued to a pure facet");
                const std::uint32_t s_img = apply_mask(gl.perm, edge.start);
                const std::uint32_t e_img = apply_mask(gl.perm, edge.end);
                const Square::Edge* partner = nullptr;
                for (const Square::Edge& cand : other.edges)
                    if (cand.facet == gl.facet) partner = &cand;
                if (partner == nullptr)
                    throw InternalError("central_surface: no square edge on the "
                                        "partner facet");
                int rel;
                if (s_img == partner->start && e_img == partner->end)
                    rel = -1; // same direction: neighbouring squares must oppose
                else if (s_img == partner->end && e_img == partner->start)
                    rel = +1;
                else
                    throw InternalError("central_surface: square corners do not "
                                        "match across a gluing");
                const std::int8_t expected = static_cast<std::int8_t>(rel * sign[p]);
                if (sign[gl.pent] == 0) {
                    sign[gl.pent] = expected;
                    queue.push_back(gl.pent);
                } else if (sign[gl.pent] != expected) {
                    orientable = false;
                }
            }
        }
    }
    census.connected = n > 0 && census.components == 1;
    census.orientable = orientable && n > 0;

    if (!census.connected)
        census.diagnostic = "surface disconnected (" +
                            std::to_string(census.components) + " components)";
    else if (!census.orientable)
        census.diagnostic = "surface non-orientable";
    else if ((2 - census.chi) % 2 != 0)
        census.diagnostic = "surface chi is odd";
    else
        census.genus = (2 - census.chi) / 2;
    return census;
}

TrisectionReport trisection_report(const Triangulation& tri,
                                   const FaceClasses& vertex_classes,
                                   const Colouring& colouring) {
    require_trisection_input(tri, vertex_classes, colouring);

    TrisectionReport report;
    for (int k = 0; k < 3; ++k) {
        report.spines[k] = spine_graph(tri, vertex_classes, colouring, k);
        if (!report.spines[k].connected)
            throw UserError("trisection_report: spine graph for colour " +
                            std::to_string(k) + " is disconnected (" +
                            std::to_string(report.spines[k].components) +
                            " components); the pieces are not handlebodies of "
                            "the reported genus");
        report.handle_genus[k] = report.spines[k].betti1;
    }
    report.surface = central_surface(tri, vertex_classes, colouring);
    if (!report.surface.genus.has_value())
        throw UserError("trisection_report: " + report.surface.diagnostic);
    report.genus = *report.surface.genus;
    report.chi = f_vector(tri).chi;
    const std::int64_t lhs = 2 + report.genus - report.handle_genus[0] -
                             report.handle_genus[1] - report.handle_genus[2];
    report.chi_check = (lhs == report.chi);
    if (!report.chi_check)
        throw InternalError("trisection identity failed: 2 + g - g0 - g1 - g2 = " +
                            std::to_string(lhs) + " but chi = " +
                            std::to_string(report.chi));
    return report;
}

std::string report_to_json(const TrisectionReport& report) {
    nlohmann::json spines = nlohmann::json::array();
    for (const SpineGraph& s : report.spines) {
        spines.push_back({{"colour", s.colour},
                          {"vertices", s.vertices},
                          {"edges", s.edges},
                          {"components", s.components},
                          {"betti1", s.betti1},
                          {"connected", s.connected}});
    }
    nlohmann::json j = {
        {"genus", report.genus},
        {"handle_genus", report.handle_genus},
        {"chi", report.chi},
        {"chi_check", report.chi_check},
        {"surface",
         {{"squares", report.surface.squares},
          {"edges", report.surface.edges},
          {"vertices", report.surface.vertices},
          {"chi", report.surface.chi},
          {"components", report.surface.components},
          {"connected", report.surface.connected},
          {"orientable", report.surface.orientable}}},
        {"spines", spines},
    };
    return j.dump(2);
}

} // namespace tri4
