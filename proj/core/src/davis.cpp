#include "tri4/davis.hpp"

#include <algorithm>

#include "tri4/errors.hpp"
#include "tri4/face_classes.hpp"

namespace tri4 {

namespace {

std::array<std::int64_t, 5> typed_vertex_class_counts(const Triangulation& tri) {
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    std::array<std::int64_t, 5> counts{};
    for (std::int32_t cls = 0; cls < classes.count(); ++cls) {
        const Corner rep = classes.representative(cls);
        ++counts[tri.type_of(rep.pent, rep.face)];
    }
    return counts;
}

} // namespace

CosetTable davis_coset_table(std::int64_t coset_budget) {
    return coset_enumerate(CoxeterMatrix::h4(), {}, coset_budget);
}

Triangulation build_120cell(const CosetTable& table) {
    if (table.rank() != 4)
        throw UserError("build_120cell: a rank-4 table is required");
    if (table.size() != 14'400)
        throw UserError("build_120cell: expected the order-14,400 table, got " +
                        std::to_string(table.size()) + " cosets");

    const std::int64_t n = table.size();
    Triangulation tri(n);
    {
        std::vector<std::int8_t> types(static_cast<std::size_t>(n) * 5);
        for (std::int64_t p = 0; p < n; ++p)
            for (int s = 0; s < 5; ++s)
                types[p * 5 + s] = static_cast<std::int8_t>(s);
        tri.set_types(std::move(types));
    }
    for (std::int32_t c = 0; c < n; ++c) {
        for (int i = 0; i < 4; ++i) {
            const std::int32_t d = table.act(c, i);
            if (c < d) tri.glue_pair(c, i, d, i, Perm5::identity());
        }
    }

    const ValidationReport report = validate(tri);
    if (!report.valid)
        throw InternalError("build_120cell: invalid complex (" +
                            report.violations.front().message + ")");
    if (report.unglued != n)
        throw InternalError("build_120cell: expected one boundary facet per "
                            "pentachoron");
    const std::array<std::int64_t, 5> counts = typed_vertex_class_counts(tri);
    const std::array<std::int64_t, 5> expected{600, 1200, 720, 120, 1};
    if (counts != expected)
        throw InternalError(
            "build_120cell: boundary census mismatch (vertices " +
            std::to_string(counts[0]) + ", edges " + std::to_string(counts[1]) +
            ", pentagons " + std::to_string(counts[2]) + ", dodecahedra " +
            std::to_string(counts[3]) + "); the coset table is corrupt");
    return tri;
}

DavisSearch davis_search(const CosetTable& table, const Triangulation& bounded) {
    const std::int64_t n = table.size();

    // z = (r0 r1 r2 r3)^15 must be a nontrivial central involution
    std::vector<int> z_word;
    for (int k = 0; k < 15; ++k)
        for (int g = 0; g < 4; ++g) z_word.push_back(g);
    const std::int32_t z = table.apply_word(0, z_word);
    if (z == 0)
        throw UserError("davis_search: (r0 r1 r2 r3)^15 is trivial");
    if (table.apply_word(z, z_word) != 0)
        throw UserError("davis_search: (r0 r1 r2 r3)^15 is not an involution");
    const std::vector<std::int32_t> left_z = table.left_multiplication(z);
    for (std::int32_t c = 0; c < n; ++c)
        if (left_z[c] != table.apply_word(c, z_word))
            throw UserError("davis_search: (r0 r1 r2 r3)^15 is not central");

    // involutions w of the dodecahedral stabiliser <r0, r1, r2>
    std::vector<std::int32_t> subgroup;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<std::int32_t> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::int32_t c = queue[head];
            for (int g = 0; g < 3; ++g) {
                const std::int32_t d = table.act(c, g);
                if (!seen[d]) {
                    seen[d] = 1;
                    queue.push_back(d);
                }
            }
        }
        subgroup = std::move(queue);
        std::sort(subgroup.begin(), subgroup.end());
    }

    DavisSearch search;
    for (const std::int32_t w : subgroup) {
        const std::vector<int> w_word = table.word_of(w);
        if (table.apply_word(w, w_word) != 0) continue; // not an involution
        DavisCandidate cand;
        cand.w_coset = w;
        cand.w_word = w_word;

        // pairing P(c) = z . g_c . w
        std::vector<std::int32_t> pairing(static_cast<std::size_t>(n));
        bool fpf = true;
        for (std::int32_t c = 0; c < n; ++c) {
            pairing[c] = table.apply_word(left_z[c], w_word);
            if (pairing[c] == c) fpf = false;
        }
        cand.fixed_point_free = fpf;
        if (!fpf) {
            cand.failure = "pairing has fixed facets";
            search.candidates.push_back(std::move(cand));
            continue;
        }
        for (std::int32_t c = 0; c < n; ++c)
            if (pairing[pairing[c]] != c)
                throw InternalError("davis_search: pairing is not an involution");

        Triangulation closed = bounded;
        for (std::int32_t c = 0; c < n; ++c)
            if (c < pairing[c])
                closed.glue_pair(c, 4, pairing[c], 4, Perm5::identity());

        const ValidationReport report = validate(closed);
        cand.valid = report.valid && report.closed;
        if (!cand.valid) {
            cand.failure = "closed complex invalid";
            search.candidates.push_back(std::move(cand));
            continue;
        }
        cand.orientable = orientability(closed).orientable;
        if (!cand.orientable) {
            cand.failure = "not orientable";
            search.candidates.push_back(std::move(cand));
            continue;
        }
        cand.type_counts = typed_vertex_class_counts(closed);
        const std::array<std::int64_t, 5> expected{1, 60, 144, 60, 1};
        if (cand.type_counts != expected) {
            cand.failure = "quotient census mismatch";
            search.candidates.push_back(std::move(cand));
            continue;
        }
        cand.chi = f_vector(closed).chi;
        if (cand.chi != 26) {
            cand.failure = "chi != 26";
            search.candidates.push_back(std::move(cand));
            continue;
        }
        cand.passes = true;
        search.passing.push_back(search.candidates.size());
        search.candidates.push_back(std::move(cand));
    }
    return search;
}

DavisManifold davis_identify(const CosetTable& table,
                             const Triangulation& bounded) {
    DavisManifold out;
    out.search = davis_search(table, bounded);
    if (out.search.passing.empty())
        throw UserError("davis_identify: no identification candidate passes the "
                        "census filter");
    const DavisCandidate& chosen =
        out.search.candidates[out.search.passing.front()];
    out.w_coset = chosen.w_coset;

    // rebuild the chosen closed complex
    const std::vector<std::int32_t> left_z = [&] {
        std::vector<int> z_word;
        for (int k = 0; k < 15; ++k)
            for (int g = 0; g < 4; ++g) z_word.push_back(g);
        return table.left_multiplication(table.apply_word(0, z_word));
    }();
    out.tri = bounded;
    for (std::int32_t c = 0; c < table.size(); ++c) {
        const std::int32_t target = table.apply_word(left_z[c], chosen.w_word);
        if (c < target) out.tri.glue_pair(c, 4, target, 4, Perm5::identity());
    }
    return out;
}

Colouring davis_colouring(const Triangulation& tri,
                          const FaceClasses& vertex_classes) {
    return colouring_from_types(tri, vertex_classes);
}

} // namespace tri4
