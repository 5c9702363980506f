#include "tri4/colouring.hpp"

#include <algorithm>

#include "tri4/errors.hpp"

namespace tri4 {

namespace {

// 2-2-1 feasibility of a partially coloured pentachoron: no colour on three
// slots, and at most two colours on two.
bool counts_feasible(const int counts[3]) {
    int twos = 0;
    for (int c = 0; c < 3; ++c) {
        if (counts[c] > 2) return false;
        if (counts[c] == 2) ++twos;
    }
    return twos <= 2;
}

} // namespace

ColouringCheck verify_colouring(const Triangulation& tri,
                                const FaceClasses& vertex_classes,
                                const Colouring& colouring) {
    if (static_cast<std::int64_t>(colouring.by_class.size()) != vertex_classes.count())
        throw UserError("verify_colouring: colouring domain does not match the "
                        "triangulation's vertex classes");
    for (std::uint8_t c : colouring.by_class)
        if (c > 2)
            throw UserError("verify_colouring: colour out of range");

    ColouringCheck check;
    const std::int64_t n = tri.size();
    for (PentId p = 0; p < n; ++p) {
        int counts[3] = {0, 0, 0};
        for (int s = 0; s < 5; ++s)
            ++counts[colouring.by_class[vertex_classes.class_of(p, s)]];
        const bool ok = (counts[0] == 2 || counts[1] == 2 || counts[2] == 2) &&
                        counts[0] <= 2 && counts[1] <= 2 && counts[2] <= 2;
        if (!ok) {
            check.ok = false;
            check.violating.push_back(p);
        }
    }
    return check;
}

std::optional<Colouring> find_colouring(const Triangulation& tri,
                                        std::int64_t node_budget) {
    require_closed(tri, "find_colouring");
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const std::int64_t n = tri.size();
    const std::int64_t num_classes = classes.count();
    if (num_classes == 0) return Colouring{};

    // slot occurrences per class
    std::vector<std::vector<std::int32_t>> occurrences(num_classes); // p*5+s
    for (PentId p = 0; p < n; ++p)
        for (int s = 0; s < 5; ++s)
            occurrences[classes.class_of(p, s)].push_back(p * 5 + s);

    std::vector<std::array<int, 3>> counts(static_cast<std::size_t>(n), {0, 0, 0});
    std::vector<std::int8_t> assigned(num_classes, -1);
    std::int64_t nodes = 0;

    // Depth-first in class-id order with colours ascending: assignments are
    // visited in lexicographic order, so the first complete one is least.
    std::int64_t cls = 0;
    std::int8_t next_colour = 0;
    while (true) {
        if (cls == num_classes) {
            Colouring result;
            result.by_class.assign(assigned.begin(), assigned.end());
            return result;
        }
        bool advanced = false;
        for (std::int8_t col = next_colour; col < 3; ++col) {
            if (++nodes > node_budget)
                throw UserError("find_colouring: node budget exhausted (" +
                                std::to_string(node_budget) + " nodes)");
            bool feasible = true;
            for (std::int32_t occ : occurrences[cls]) {
                auto& c = counts[occ / 5];
                ++c[col];
                if (!counts_feasible(c.data())) feasible = false;
            }
            if (feasible) {
                assigned[cls] = col;
                ++cls;
                next_colour = 0;
                advanced = true;
                break;
            }
            for (std::int32_t occ : occurrences[cls])
                --counts[occ / 5][col];
        }
        if (advanced) continue;
        // backtrack
        while (true) {
            if (cls == 0) return std::nullopt;
            --cls;
            const std::int8_t col = assigned[cls];
            assigned[cls] = -1;
            for (std::int32_t occ : occurrences[cls])
                --counts[occ / 5][col];
            if (col < 2) {
                next_colour = static_cast<std::int8_t>(col + 1);
                break;
            }
        }
    }
}

Colouring colouring_from_types(const Triangulation& tri,
                               const FaceClasses& vertex_classes) {
    if (!tri.has_types())
        throw UserError("colouring_from_types: triangulation carries no vertex types");
    static constexpr std::int8_t colour_of_type[5] = {0, 0, 1, 2, 2};

    Colouring colouring;
    colouring.by_class.assign(vertex_classes.count(), 0);
    std::vector<std::int8_t> class_type(vertex_classes.count(), -1);
    const std::int64_t n = tri.size();
    for (PentId p = 0; p < n; ++p) {
        for (int s = 0; s < 5; ++s) {
            const int t = tri.type_of(p, s);
            if (t < 0 || t > 4)
                throw UserError("colouring_from_types: vertex type out of range 0..4");
            const std::int32_t cls = vertex_classes.class_of(p, s);
            if (class_type[cls] == -1)
                class_type[cls] = static_cast<std::int8_t>(t);
            else if (class_type[cls] != t)
                throw UserError("colouring_from_types: vertex class mixes types");
            colouring.by_class[cls] = static_cast<std::uint8_t>(colour_of_type[t]);
        }
    }
    const ColouringCheck check = verify_colouring(tri, vertex_classes, colouring);
    if (!check.ok)
        throw UserError("colouring_from_types: type-derived colouring violates the "
                        "2-2-1 pattern at pentachoron " +
                        std::to_string(check.violating.front()));
    return colouring;
}

} // namespace tri4
