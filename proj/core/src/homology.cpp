#include "tri4/homology.hpp"

#include "tri4/errors.hpp"

namespace tri4 {

Homology1 homology_of_presentation(const GroupPresentation& pres) {
    std::int64_t nonempty = 0;
    for (const auto& rel : pres.relators)
        if (!rel.empty()) ++nonempty;

    SparseIntMatrix matrix(nonempty, pres.generators);
    std::int64_t row = 0;
    for (const auto& rel : pres.relators) {
        if (rel.empty()) continue;
        for (std::int64_t letter : rel)
            matrix.add(row, std::abs(letter) - 1, letter > 0 ? 1 : -1);
        ++row;
    }
    const SmithForm smith = smith_normal_form(matrix);

    Homology1 h;
    h.generators = pres.generators;
    h.relators = static_cast<std::int64_t>(pres.relators.size());
    h.rank = smith.rank;
    h.beta1 = pres.generators - smith.rank;
    h.torsion = smith.torsion();
    return h;
}

Homology1 homology_h1(const Triangulation& tri) {
    return homology_of_presentation(pi1_presentation(tri));
}

std::int64_t betti2_from_duality(std::int64_t chi, std::int64_t beta1) {
    if (beta1 < 0) throw UserError("betti2_from_duality: beta1 must be >= 0");
    const std::int64_t beta2 = chi - 2 + 2 * beta1;
    if (beta2 < 0)
        throw UserError("betti2_from_duality: inconsistent invariants (chi = " +
                        std::to_string(chi) + ", beta1 = " + std::to_string(beta1) +
                        " give beta2 = " + std::to_string(beta2) + ")");
    return beta2;
}

} // namespace tri4
