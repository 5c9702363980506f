#include "tri4/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "tri4/errors.hpp"
#include "tri4/face_classes.hpp"

namespace tri4 {

namespace {

struct DualEdgeIndex {
    // generator id per half gluing (p*5+f), -1 for tree edges
    std::vector<std::int64_t> gen;
    // +1 when (p,f) is the canonical smaller half, -1 otherwise
    std::vector<std::int8_t> sign;
    std::int64_t generators = 0;
    std::vector<std::pair<PentId, int>> canonical_halves;
};

DualEdgeIndex index_dual_edges(const Triangulation& tri, const DualGraph& dg) {
    DualEdgeIndex idx;
    const std::size_t half_count = static_cast<std::size_t>(tri.size()) * 5;
    idx.gen.assign(half_count, -1);
    idx.sign.assign(half_count, 0);

    // tree halves, from both sides
    std::vector<char> in_tree(half_count, 0);
    for (PentId p = 0; p < tri.size(); ++p) {
        if (dg.tree_facet[p] < 0) continue;
        const int f = dg.tree_facet[p];
        const Gluing& gl = tri.gluing(p, f);
        in_tree[p * 5 + f] = 1;
        in_tree[gl.pent * 5 + gl.facet] = 1;
    }
    for (PentId p = 0; p < tri.size(); ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            if (!gl.glued() || in_tree[p * 5 + f]) continue;
            if (std::pair<PentId, int>(p, f) >
                std::pair<PentId, int>(gl.pent, gl.facet))
                continue;
            const std::int64_t id = idx.generators++;
            idx.gen[p * 5 + f] = id;
            idx.sign[p * 5 + f] = 1;
            idx.gen[gl.pent * 5 + gl.facet] = id;
            idx.sign[gl.pent * 5 + gl.facet] = -1;
            idx.canonical_halves.push_back({p, f});
        }
    }
    return idx;
}

} // namespace

GroupPresentation pi1_presentation(const Triangulation& tri) {
    require_closed(tri, "pi1_presentation");
    const DualGraph dg = dual_graph(tri);
    if (!dg.connected)
        throw UserError("pi1_presentation: dual graph disconnected (" +
                        std::to_string(dg.components) + " components)");

    const DualEdgeIndex idx = index_dual_edges(tri, dg);
    GroupPresentation pres;
    pres.generators = idx.generators;
    pres.generator_edges = idx.canonical_halves;

    const FaceClasses tri_classes = FaceClasses::compute(tri, 2);
    const FaceTable& triangles = face_table(2);
    std::vector<std::int32_t> stamp(static_cast<std::size_t>(tri.size()) * 10, -1);

    for (std::int32_t cls = 0; cls < tri_classes.count(); ++cls) {
        const Corner start = tri_classes.representative(cls);
        std::uint32_t start_mask = 0;
        for (int j = 0; j < 3; ++j)
            start_mask |= 1u << triangles.slots[start.face][j];
        int start_exit = -1;
        for (int s = 0; s < 5; ++s)
            if (!(start_mask & (1u << s))) {
                start_exit = s; // smaller complement slot
                break;
            }

        std::vector<std::int64_t> word;
        PentId p = start.pent;
        std::uint32_t mask = start_mask;
        int exit = start_exit;
        std::int64_t steps = 0;
        while (true) {
            const int face = face_table(2).index_of(mask);
            if (stamp[p * 10 + face] == cls)
                throw UserError("pi1_presentation: non-manifold triangle class " +
                                std::to_string(cls) +
                                " (corner revisited before the walk closed)");
            stamp[p * 10 + face] = cls;
            ++steps;

            const Gluing& gl = tri.gluing(p, exit);
            if (idx.gen[p * 5 + exit] >= 0)
                word.push_back(idx.sign[p * 5 + exit] *
                               (idx.gen[p * 5 + exit] + 1));
            // cross to the partner corner
            std::uint32_t next_mask = 0;
            for (int s = 0; s < 5; ++s)
                if (mask & (1u << s)) next_mask |= 1u << gl.perm[s];
            const PentId next_p = gl.pent;
            const int entered = gl.facet;
            int next_exit = -1;
            for (int s = 0; s < 5; ++s)
                if (s != entered && !(next_mask & (1u << s))) next_exit = s;
            p = next_p;
            mask = next_mask;
            exit = next_exit;
            if (p == start.pent && mask == start_mask && exit == start_exit)
                break;
        }
        if (steps != tri_classes.size_of(cls))
            throw UserError("pi1_presentation: non-manifold triangle class " +
                            std::to_string(cls) + " (walk closed after " +
                            std::to_string(steps) + " of " +
                            std::to_string(tri_classes.size_of(cls)) +
                            " corners)");
        pres.relators.push_back(std::move(word));
    }
    return pres;
}

std::string write_presentation(const GroupPresentation& pres) {
    std::vector<std::string> lines;
    for (const auto& rel : pres.relators) {
        std::ostringstream line;
        line << "rel";
        for (std::int64_t letter : rel) line << ' ' << letter;
        lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    out << "pres v1\ngens " << pres.generators << "\n";
    for (const std::string& line : lines) out << line << "\n";
    return out.str();
}

} // namespace tri4
