#include "tri4/face_classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tri4/errors.hpp"

namespace tri4 {

namespace {

std::vector<FaceTable> build_tables() {
    std::vector<FaceTable> tables(4);
    for (int d = 0; d < 4; ++d) {
        tables[d].dim = d;
        // enumerate (d+1)-subsets of {0..4} in lexicographic order
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            if (std::popcount(mask) != d + 1) continue;
            std::array<std::uint8_t, 5> slots{};
            int k = 0;
            for (int s = 0; s < 5; ++s)
                if (mask & (1u << s)) slots[k++] = static_cast<std::uint8_t>(s);
            tables[d].slots.push_back(slots);
        }
        std::sort(tables[d].slots.begin(), tables[d].slots.end());
    }
    return tables;
}

const std::vector<FaceTable>& tables() {
    static const std::vector<FaceTable> t = build_tables();
    return t;
}

// bitmask -> face index, per dimension
const std::array<std::array<std::int8_t, 32>, 4>& mask_index() {
    static const auto t = [] {
        std::array<std::array<std::int8_t, 32>, 4> m{};
        for (auto& row : m) row.fill(-1);
        for (int d = 0; d < 4; ++d) {
            const FaceTable& ft = tables()[d];
            for (std::size_t i = 0; i < ft.slots.size(); ++i) {
                std::uint32_t mask = 0;
                for (int j = 0; j <= d; ++j) mask |= 1u << ft.slots[i][j];
                m[d][mask] = static_cast<std::int8_t>(i);
            }
        }
        return m;
    }();
    return t;
}

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

int FaceTable::index_of(std::uint32_t slot_bitmask) const {
    return mask_index()[dim][slot_bitmask];
}

const FaceTable& face_table(int dim) { return tables()[dim]; }

int faces_per_pentachoron(int dim) {
    return static_cast<int>(tables()[dim].slots.size());
}

FaceClasses FaceClasses::compute(const Triangulation& tri, int dim) {
    if (dim < 0 || dim > 3)
        throw UserError("FaceClasses: dimension must be in 0..3");
    require_valid(tri, "face_classes");

    FaceClasses fc;
    fc.dim_ = dim;
    fc.k_ = faces_per_pentachoron(dim);
    const std::int64_t n = tri.size();
    const std::size_t corners = static_cast<std::size_t>(n) * fc.k_;
    const FaceTable& ft = face_table(dim);

    UnionFind uf(corners);
    for (PentId p = 0; p < n; ++p) {
        for (int f = 0; f < 5; ++f) {
            const Gluing& gl = tri.gluing(p, f);
            if (!gl.glued()) continue;
            // every d-face inside facet f is identified with its image
            for (int i = 0; i < fc.k_; ++i) {
                const auto& slots = ft.slots[i];
                std::uint32_t image_mask = 0;
                bool in_facet = true;
                for (int j = 0; j <= dim; ++j) {
                    if (slots[j] == f) {
                        in_facet = false;
                        break;
                    }
                    image_mask |= 1u << gl.perm[slots[j]];
                }
                if (!in_facet) continue;
                const int image_face = ft.index_of(image_mask);
                uf.unite(static_cast<std::int32_t>(p * fc.k_ + i),
                         static_cast<std::int32_t>(gl.pent * fc.k_ + image_face));
            }
        }
    }

    // canonical class ids: ordered by least corner
    std::vector<std::int32_t> root_to_class(corners, -1);
    fc.class_of_.assign(corners, -1);
    for (std::size_t c = 0; c < corners; ++c) {
        const std::int32_t root = uf.find(static_cast<std::int32_t>(c));
        if (root_to_class[root] == -1) {
            root_to_class[root] = static_cast<std::int32_t>(fc.reps_.size());
            fc.reps_.push_back(Corner{static_cast<PentId>(c / fc.k_),
                                      static_cast<std::int32_t>(c % fc.k_)});
            fc.sizes_.push_back(0);
        }
        fc.class_of_[c] = root_to_class[root];
        ++fc.sizes_[root_to_class[root]];
    }
    return fc;
}

std::vector<Corner> FaceClasses::corners_of(std::int32_t cls) const {
    std::vector<Corner> out;
    for (std::size_t c = 0; c < class_of_.size(); ++c)
        if (class_of_[c] == cls)
            out.push_back(Corner{static_cast<PentId>(c / k_),
                                 static_cast<std::int32_t>(c % k_)});
    return out;
}

} // namespace tri4
