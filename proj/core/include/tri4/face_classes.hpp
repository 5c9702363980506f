#ifndef TRI4_FACE_CLASSES_HPP
#define TRI4_FACE_CLASSES_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tri4/triangulation.hpp"

namespace tri4 {

// A d-face inside a pentachoron, named by its (d+1) vertex slots in
// increasing order. Faces of each dimension are indexed 0..count-1 in
// lexicographic slot order; see face_table().
struct FaceTable {
    int dim;
    std::vector<std::array<std::uint8_t, 5>> slots; // only first dim+1 entries used
    int index_of(std::uint32_t slot_bitmask) const; // bitmask over slots 0..4
};

const FaceTable& face_table(int dim);
int faces_per_pentachoron(int dim); // C(5, dim+1)

struct Corner {
    PentId pent;
    std::int32_t face; // index into face_table(dim)
    friend bool operator==(const Corner&, const Corner&) = default;
    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/**
 * The identification classes of all d-faces of a triangulation: the
 * partition of (pentachoron, d-face) corners into the equivalence generated
 * by the facet gluings. Class ids are dense and ordered by each class's
 * lexicographically least corner, so they are stable under recomputation
 * and independent of union order.
 */
class FaceClasses {
public:
    static FaceClasses compute(const Triangulation& tri, int dim);

    int dim() const { return dim_; }
    std::int64_t count() const { return static_cast<std::int64_t>(reps_.size()); }
    std::int64_t corner_count() const { return static_cast<std::int64_t>(class_of_.size()); }

    std::int32_t class_of(PentId p, std::int32_t face) const {
        return class_of_[static_cast<std::size_t>(p) * k_ + face];
    }
    Corner representative(std::int32_t cls) const { return reps_[cls]; }
    std::int64_t size_of(std::int32_t cls) const { return sizes_[cls]; }

    // corners of a class, sorted
    std::vector<Corner> corners_of(std::int32_t cls) const;

private:
    int dim_ = 0;
    int k_ = 0; // faces per pentachoron
    std::vector<std::int32_t> class_of_;
    std::vector<Corner> reps_;
    std::vector<std::int64_t> sizes_;
};

} // namespace tri4

#endif
