#include "tri4/triangulation.hpp"

#include <algorithm>
#include <deque>

#include "tri4/errors.hpp"
#include "tri4/face_classes.hpp"

namespace tri4 {

Triangulation::Triangulation(std::int64_t pentachora) {
    if (pentachora < 0)
        throw UserError("Triangulation: negative pentachoron count");
    gluings_.resize(static_cast<std::size_t>(pentachora) * 5);
}

PentId Triangulation::add_pentachoron() {
    const PentId id = static_cast<PentId>(size());
    gluings_.resize(gluings_.size() + 5);
    if (!types_.empty())
        types_.resize(types_.size() + 5, 0);
    return id;
}

void Triangulation::glue_pair(PentId p, int f, PentId q, int g, const Perm5& perm) {
    if (p == q && f == g)
        throw UserError("glue_pair: a facet cannot be glued to itself");
    if (perm[f] != g)
        throw UserError("glue_pair: permutation does not carry the omitted slot "
                        "to the omitted slot");
    if (is_glued(p, f) || is_glued(q, g))
        throw UserError("glue_pair: facet already glued");
    gluings_[idx(p, f)] = Gluing{q, static_cast<std::int8_t>(g), perm};
    gluings_[idx(q, g)] = Gluing{p, static_cast<std::int8_t>(f), perm.inverse()};
}

void Triangulation::unglue_pair(PentId p, int f) {
    const Gluing other = gluing(p, f);
    gluings_[idx(p, f)] = Gluing{};
    if (other.glued())
        gluings_[idx(other.pent, other.facet)] = Gluing{};
}

void Triangulation::set_half_gluing(PentId p, int f, const Gluing& target) {
    gluings_[idx(p, f)] = target;
}

void Triangulation::set_types(std::vector<std::int8_t> per_slot_types) {
    if (static_cast<std::int64_t>(per_slot_types.size()) != size() * 5)
        throw UserError("set_types: expected 5 labels per pentachoron");
    types_ = std::move(per_slot_types);
}

std::int64_t Triangulation::unglued_facet_count() const {
    std::int64_t n = 0;
    for (const Gluing& g : gluings_)
        if (!g.glued()) ++n;
    return n;
}

ValidationReport validate(const Triangulation& tri) {
    ValidationReport report;
    const std::int64_t n = tri.size();
    for (PentId p = 0; p < n; ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            if (!gl.glued()) {
                ++report.unglued;
                continue;
            }
            if (gl.pent >= n || gl.facet < 0 || gl.facet > 4) {
                report.violations.push_back({p, f, "gluing target out of range"});
                continue;
            }
            if (gl.pent == p && gl.facet == f) {
                report.violations.push_back({p, f, "facet glued to itself"});
                continue;
            }
            if (gl.perm[f] != gl.facet) {
                report.violations.push_back(
                    {p, f, "permutation does not map omitted slot " + std::to_string(f) +
                               " to omitted slot " + std::to_string(int(gl.facet))});
            }
            const Gluing& back = tri.gluing(gl.pent, gl.facet);
            if (!back.glued() || back.pent != p || back.facet != f ||
                !(gl.perm.then(back.perm).is_identity())) {
                report.violations.push_back(
                    {p, f, "involution broken at (" + std::to_string(p) + "," +
                               std::to_string(f) + ")"});
            }
            if (tri.has_types()) {
                for (int s = 0; s < 5; ++s) {
                    if (tri.type_of(p, s) != tri.type_of(gl.pent, gl.perm[s])) {
                        report.violations.push_back(
                            {p, f, "gluing does not preserve vertex types at slot " +
                                       std::to_string(s)});
                        break;
                    }
                }
            }
        }
    }
    report.valid = report.violations.empty();
    report.closed = report.valid && report.unglued == 0;
    return report;
}

void require_valid(const Triangulation& tri, const char* operation) {
    const ValidationReport r = validate(tri);
    if (!r.valid)
        throw UserError(std::string(operation) + ": invalid triangulation (" +
                        r.violations.front().message + ")");
}

void require_closed(const Triangulation& tri, const char* operation) {
    require_valid(tri, operation);
    if (!tri.closed())
        throw UserError(std::string(operation) + ": closed complex required (" +
                        std::to_string(tri.unglued_facet_count()) + " unglued facets)");
}

FVector f_vector(const Triangulation& tri) {
    require_closed(tri, "f_vector");
    FVector fv;
    for (int d = 0; d <= 3; ++d)
        fv.f[d] = FaceClasses::compute(tri, d).count();
    fv.f[4] = tri.size();
    fv.chi = fv.f[0] - fv.f[1] + fv.f[2] - fv.f[3] + fv.f[4];
    return fv;
}

DualGraph dual_graph(const Triangulation& tri) {
    require_valid(tri, "dual_graph");
    const std::int64_t n = tri.size();
    DualGraph dg;
    dg.nodes = n;
    dg.component.assign(static_cast<std::size_t>(n), -1);
    dg.tree_facet.assign(static_cast<std::size_t>(n), -1);
    dg.tree_parent.assign(static_cast<std::size_t>(n), -1);

    std::int64_t glued = 0;
    for (PentId p = 0; p < n; ++p)
        for (int f = 0; f < 5; ++f)
            if (tri.is_glued(p, f)) ++glued;
    dg.edges = glued / 2;

    std::int32_t comp = 0;
    for (PentId root = 0; root < n; ++root) {
        if (dg.component[root] != -1) continue;
        dg.component[root] = comp;
        std::deque<PentId> queue{root};
        while (!queue.empty()) {
            const PentId p = queue.front();
            queue.pop_front();
            for (int f = 0; f < 5; ++f) {
                const Gluing& gl = tri.gluing(p, f);
                if (!gl.glued() || dg.component[gl.pent] != -1) continue;
                dg.component[gl.pent] = comp;
                dg.tree_parent[gl.pent] = p;
                dg.tree_facet[gl.pent] = static_cast<std::int8_t>(f);
                queue.push_back(gl.pent);
            }
        }
        ++comp;
    }
    dg.components = comp;
    dg.connected = (n == 0) || comp == 1;
    return dg;
}

OrientationResult orientability(const Triangulation& tri) {
    require_closed(tri, "orientability");
    const DualGraph dg = dual_graph(tri);
    if (!dg.connected)
        throw UserError("orientability: dual graph disconnected (" +
                        std::to_string(dg.components) + " components)");

    const std::int64_t n = tri.size();
    OrientationResult result;
    result.sign.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        result.orientable = true;
        return result;
    }

    // Two pentachora glued by an odd permutation carry equal signs, by an
    // even permutation opposite signs (adjacent cells induce opposite
    // orientations on the shared facet).
    result.sign[0] = 1;
    std::deque<PentId> queue{0};
    while (!queue.empty()) {
        const PentId p = queue.front();
        queue.pop_front();
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            const std::int8_t expected =
                static_cast<std::int8_t>(-result.sign[p] * gl.perm.sign());
            if (result.sign[gl.pent] == 0) {
                result.sign[gl.pent] = expected;
                queue.push_back(gl.pent);
            } else if (result.sign[gl.pent] != expected) {
                // Reconstruct the odd cycle: path p -> root, then root -> target,
                // plus the violating edge. Paths via BFS tree parents.
                result.orientable = false;
                result.witness_cycle.clear();
                for (PentId a = p; dg.tree_parent[a] != -1; a = dg.tree_parent[a])
                    result.witness_cycle.push_back({a, dg.tree_facet[a]});
                result.witness_cycle.push_back({p, f});
                for (PentId b = gl.pent; dg.tree_parent[b] != -1; b = dg.tree_parent[b])
                    result.witness_cycle.push_back({b, dg.tree_facet[b]});
                result.sign.clear();
                return result;
            }
        }
    }
    result.orientable = true;
    return result;
}

} // namespace tri4
