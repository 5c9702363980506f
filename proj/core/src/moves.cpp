#include "tri4/moves.hpp"

#include <algorithm>
#include <array>

#include "tri4/errors.hpp"

namespace tri4 {

namespace {

// Slot of the singleton colour, or -1 if the pentachoron is not 2-2-1.
int apex_slot(const FaceClasses& classes, const Colouring& colouring, PentId p) {
    int counts[3] = {0, 0, 0};
    std::uint8_t slot_colour[5];
    for (int s = 0; s < 5; ++s) {
        slot_colour[s] = colouring.by_class[classes.class_of(p, s)];
        ++counts[slot_colour[s]];
    }
    int singleton = -1;
    for (int c = 0; c < 3; ++c) {
        if (counts[c] > 2) return -1;
        if (counts[c] == 1) {
            if (singleton != -1) return -1;
            singleton = c;
        }
    }
    if (singleton == -1) return -1;
    for (int s = 0; s < 5; ++s)
        if (slot_colour[s] == singleton) return s;
    return -1;
}

Perm5 perm_from(const std::array<std::uint8_t, 5>& images) {
    return Perm5::from_images(images);
}

// The in-surgery representation: pentachora are appended, never renumbered,
// and replaced ones are only marked dead. Every slot tracks the corner of
// the *input* triangulation it descends from, which is what lets the
// colouring be carried across an arbitrary number of moves.
struct Working {
    std::vector<Gluing> gluings; // 5 per pentachoron
    std::vector<char> alive;
    std::vector<std::array<std::int32_t, 5>> source; // input corner p*5+s

    explicit Working(const Triangulation& tri) {
        const std::int64_t n = tri.size();
        gluings.resize(static_cast<std::size_t>(n) * 5);
        alive.assign(static_cast<std::size_t>(n), 1);
        source.resize(static_cast<std::size_t>(n));
        for (PentId p = 0; p < n; ++p) {
            for (int f = 0; f < 5; ++f) gluings[p * 5 + f] = tri.gluing(p, f);
            for (int s = 0; s < 5; ++s) source[p][s] = p * 5 + s;
        }
    }

    PentId append() {
        gluings.resize(gluings.size() + 5);
        alive.push_back(1);
        source.emplace_back();
        return static_cast<PentId>(alive.size() - 1);
    }

    Gluing& at(PentId p, int f) { return gluings[static_cast<std::size_t>(p) * 5 + f]; }

    void set_pair(PentId p, int f, PentId q, int g, const Perm5& perm) {
        at(p, f) = Gluing{q, static_cast<std::int8_t>(g), perm};
        at(q, g) = Gluing{p, static_cast<std::int8_t>(f), perm.inverse()};
    }

    // Replaces the double (A,B) glued along the pure facet opposite the two
    // apexes with four pentachora spanned by the apexes and the triangles
    // of the shared facet. New pentachoron i has slots 0..2 = the shared
    // facet's vertices except its i-th (in A's slot order), slot 3 = A's
    // apex, slot 4 = B's apex.
    void apply_move(PentId A, int a_apex, PentId B, int b_apex) {
        const Gluing pure = at(A, a_apex);
        if (!pure.glued() || pure.pent != B || pure.facet != b_apex)
            throw UserError("move_2_4: stale pair (pure facets no longer match)");
        if (!alive[A] || !alive[B])
            throw UserError("move_2_4: stale pair (pentachoron already replaced)");
        const Perm5 pi = pure.perm;

        std::array<std::uint8_t, 4> tA{}, tB{};
        int k = 0;
        for (int s = 0; s < 5; ++s)
            if (s != a_apex) {
                tA[k] = static_cast<std::uint8_t>(s);
                tB[k] = pi[s];
                ++k;
            }

        // remaining tau indices and their positions, per dropped index i
        std::array<std::array<std::uint8_t, 3>, 4> rem{};
        std::array<std::array<std::int8_t, 4>, 4> pos{}; // pos[i][j]: slot of tau_j in P_i
        for (int i = 0; i < 4; ++i) {
            pos[i].fill(-1);
            int m = 0;
            for (int j = 0; j < 4; ++j)
                if (j != i) {
                    rem[i][m] = static_cast<std::uint8_t>(j);
                    pos[i][j] = static_cast<std::int8_t>(m);
                    ++m;
                }
        }

        // slot bijections P_i -> A and P_i -> B (full, omitted slot to
        // omitted slot)
        std::array<Perm5, 4> sigmaA, sigmaB;
        for (int i = 0; i < 4; ++i) {
            std::array<std::uint8_t, 5> a_img{}, b_img{};
            for (int m = 0; m < 3; ++m) {
                a_img[m] = tA[rem[i][m]];
                b_img[m] = tB[rem[i][m]];
            }
            a_img[3] = static_cast<std::uint8_t>(a_apex);
            a_img[4] = tA[i];
            b_img[3] = tB[i];
            b_img[4] = static_cast<std::uint8_t>(b_apex);
            sigmaA[i] = perm_from(a_img);
            sigmaB[i] = perm_from(b_img);
        }

        // snapshot the external gluings before touching anything
        std::array<Gluing, 4> extA{}, extB{};
        for (int i = 0; i < 4; ++i) {
            extA[i] = at(A, tA[i]);
            extB[i] = at(B, tB[i]);
            if (!extA[i].glued() || !extB[i].glued())
                throw UserError("move_2_4: closed complex required");
        }

        std::array<PentId, 4> P{};
        for (int i = 0; i < 4; ++i) {
            P[i] = append();
            for (int m = 0; m < 3; ++m)
                source[P[i]][m] = source[A][tA[rem[i][m]]];
            source[P[i]][3] = source[A][a_apex];
            source[P[i]][4] = source[B][b_apex];
        }
        alive[A] = alive[B] = 0;
        for (int f = 0; f < 5; ++f) {
            at(A, f) = Gluing{};
            at(B, f) = Gluing{};
        }

        // internal gluings: P_i and P_j share the facet omitting tau_j/tau_i
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                std::array<std::uint8_t, 5> img{};
                for (int m = 0; m < 3; ++m) {
                    const int tau = rem[i][m];
                    img[m] = static_cast<std::uint8_t>(tau == j ? pos[j][i]
                                                                : pos[j][tau]);
                }
                img[3] = 3;
                img[4] = 4;
                set_pair(P[i], pos[i][j], P[j], pos[j][i], perm_from(img));
            }
        }

        // external regluings; facet 4 of P_i replaces (A, tA[i]), facet 3
        // replaces (B, tB[i]); targets inside the double fold back onto the
        // new pentachora
        for (int i = 0; i < 4; ++i) {
            const Gluing& ext = extA[i];
            const Perm5 out = sigmaA[i].then(ext.perm);
            if (ext.pent == A) {
                const int j = tau_index(tA, ext.facet, "move_2_4: double glued to "
                                                       "its own pure facet");
                at(P[i], 4) = Gluing{P[j], 4, out.then(sigmaA[j].inverse())};
            } else if (ext.pent == B) {
                const int j = tau_index(tB, ext.facet, "move_2_4: double glued to "
                                                       "its own pure facet");
                at(P[i], 4) = Gluing{P[j], 3, out.then(sigmaB[j].inverse())};
            } else {
                at(P[i], 4) = Gluing{ext.pent, ext.facet, out};
                at(ext.pent, ext.facet) = Gluing{P[i], 4, out.inverse()};
            }
        }
        for (int i = 0; i < 4; ++i) {
            const Gluing& ext = extB[i];
            const Perm5 out = sigmaB[i].then(ext.perm);
            if (ext.pent == B) {
                const int j = tau_index(tB, ext.facet, "move_2_4: double glued to "
                                                       "its own pure facet");
                at(P[i], 3) = Gluing{P[j], 3, out.then(sigmaB[j].inverse())};
            } else if (ext.pent == A) {
                const int j = tau_index(tA, ext.facet, "move_2_4: double glued to "
                                                       "its own pure facet");
                at(P[i], 3) = Gluing{P[j], 4, out.then(sigmaA[j].inverse())};
            } else {
                at(P[i], 3) = Gluing{ext.pent, ext.facet, out};
                at(ext.pent, ext.facet) = Gluing{P[i], 3, out.inverse()};
            }
        }
    }

    static int tau_index(const std::array<std::uint8_t, 4>& tau, int facet,
                         const char* error) {
        for (int j = 0; j < 4; ++j)
            if (tau[j] == facet) return j;
        throw InternalError(error);
    }

    // Survivors first in id order, then the appended pentachora in creation
    // order; returns the compacted triangulation plus the colouring carried
    // over through the source-corner tracking.
    MoveResult compact(const FaceClasses& input_classes,
                       const Colouring& input_colouring) const {
        std::vector<PentId> new_id(alive.size(), -1);
        std::int64_t count = 0;
        for (std::size_t p = 0; p < alive.size(); ++p)
            if (alive[p]) new_id[p] = static_cast<PentId>(count++);

        MoveResult result{Triangulation(count), Colouring{}};
        for (std::size_t p = 0; p < alive.size(); ++p) {
            if (!alive[p]) continue;
            for (int f = 0; f < 5; ++f) {
                const Gluing& gl = gluings[p * 5 + f];
                if (!gl.glued()) {
                    result.tri.set_half_gluing(new_id[p], f, Gluing{});
                    continue;
                }
                result.tri.set_half_gluing(
                    new_id[p], f, Gluing{new_id[gl.pent], gl.facet, gl.perm});
            }
        }

        const FaceClasses new_classes = FaceClasses::compute(result.tri, 0);
        result.colouring.by_class.assign(new_classes.count(), 3);
        for (std::size_t p = 0; p < alive.size(); ++p) {
            if (!alive[p]) continue;
            for (int s = 0; s < 5; ++s) {
                const std::int32_t src = source[p][s];
                const std::uint8_t colour = input_colouring.by_class[
                    input_classes.class_of(src / 5, src % 5)];
                const std::int32_t cls = new_classes.class_of(new_id[p], s);
                if (result.colouring.by_class[cls] == 3)
                    result.colouring.by_class[cls] = colour;
                else if (result.colouring.by_class[cls] != colour)
                    throw InternalError("move_2_4: vertex classes merged across "
                                        "different colours");
            }
        }
        for (std::uint8_t c : result.colouring.by_class)
            if (c == 3)
                throw InternalError("move_2_4: uncoloured vertex class after move");
        return result;
    }
};

} // namespace

DoublePairing pair_doubles(const Triangulation& tri,
                           const FaceClasses& vertex_classes,
                           const Colouring& colouring) {
    require_closed(tri, "pair_doubles");
    {
        const ColouringCheck check = verify_colouring(tri, vertex_classes, colouring);
        if (!check.ok)
            throw UserError("pair_doubles: colouring violates the 2-2-1 pattern at "
                            "pentachoron " + std::to_string(check.violating.front()));
    }

    const std::int64_t n = tri.size();
    if (n % 2 != 0)
        throw UserError("pair_doubles: odd pentachoron count cannot be perfectly "
                        "matched");

    DoublePairing pairing;
    std::vector<PentId> partner(static_cast<std::size_t>(n), -1);
    for (PentId p = 0; p < n; ++p) {
        const int apex = apex_slot(vertex_classes, colouring, p);
        if (apex < 0)
            throw InternalError("pair_doubles: verified pentachoron lost 2-2-1");
        const Gluing& gl = tri.gluing(p, apex);
        const PentId q = gl.pent;
        if (q == p)
            throw UserError("pair_doubles: pure facet glued within one pentachoron");
        const int q_apex = apex_slot(vertex_classes, colouring, q);
        if (gl.facet != q_apex)
            throw UserError("pair_doubles: pure facets do not form a perfect "
                            "matching at (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
        const std::uint8_t pc =
            colouring.by_class[vertex_classes.class_of(p, apex)];
        const std::uint8_t qc =
            colouring.by_class[vertex_classes.class_of(q, q_apex)];
        if (pc != qc)
            throw UserError("pair_doubles: apex colour mismatch at (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
        partner[p] = q;
        if (p < q)
            pairing.pairs.push_back(PentPair{p, q, static_cast<std::int8_t>(apex),
                                             static_cast<std::int8_t>(q_apex), pc});
    }
    for (PentId p = 0; p < n; ++p)
        if (partner[partner[p]] != p)
            throw InternalError("pair_doubles: matching not involutive");
    return pairing;
}

MoveResult move_2_4(const Triangulation& tri, const FaceClasses& vertex_classes,
                    const Colouring& colouring, const DoublePairing& pairing,
                    std::size_t pair_index) {
    require_closed(tri, "move_2_4");
    if (pair_index >= pairing.pairs.size())
        throw UserError("move_2_4: pair index out of range");
    const PentPair& pair = pairing.pairs[pair_index];
    if (pair.first < 0 || pair.second >= tri.size() ||
        apex_slot(vertex_classes, colouring, pair.first) != pair.first_apex ||
        apex_slot(vertex_classes, colouring, pair.second) != pair.second_apex)
        throw UserError("move_2_4: stale pair (triangulation changed)");

    Working w(tri);
    w.apply_move(pair.first, pair.first_apex, pair.second, pair.second_apex);
    MoveResult result = w.compact(vertex_classes, colouring);
    require_valid(result.tri, "move_2_4 (postcondition)");
    return result;
}

PipelineResult run_pipeline(const Triangulation& tri,
                            const FaceClasses& vertex_classes,
                            const Colouring& colouring) {
    const DoublePairing pairing = pair_doubles(tri, vertex_classes, colouring);

    PipelineResult out{Triangulation(0), Colouring{}, 0, FVector{}, FVector{}, false, false};
    out.f_before = f_vector(tri);
    const bool connected = dual_graph(tri).connected;
    if (connected)
        out.orientable_before = orientability(tri).orientable;

    Working w(tri);
    for (const PentPair& pair : pairing.pairs)
        w.apply_move(pair.first, pair.first_apex, pair.second, pair.second_apex);
    MoveResult compacted = w.compact(vertex_classes, colouring);
    out.tri = std::move(compacted.tri);
    out.colouring = std::move(compacted.colouring);
    out.pairs_processed = static_cast<std::int64_t>(pairing.pairs.size());

    const ValidationReport post = validate(out.tri);
    if (!post.valid || !post.closed)
        throw InternalError("run_pipeline: output complex invalid or not closed");
    if (out.tri.size() != 2 * tri.size())
        throw InternalError("run_pipeline: pentachoron count did not double");
    out.f_after = f_vector(out.tri);
    if (out.f_after.chi != out.f_before.chi)
        throw InternalError("run_pipeline: Euler characteristic changed (" +
                            std::to_string(out.f_before.chi) + " -> " +
                            std::to_string(out.f_after.chi) + ")");
    if (connected) {
        out.orientable_after = orientability(out.tri).orientable;
        if (out.orientable_after != out.orientable_before)
            throw InternalError("run_pipeline: orientability changed");
    }
    {
        const FaceClasses post_classes = FaceClasses::compute(out.tri, 0);
        const ColouringCheck check =
            verify_colouring(out.tri, post_classes, out.colouring);
        if (!check.ok)
            throw InternalError("run_pipeline: output colouring violates 2-2-1");
    }
    return out;
}

} // namespace tri4
