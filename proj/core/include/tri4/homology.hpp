#ifndef TRI4_HOMOLOGY_HPP
#define TRI4_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "tri4/presentation.hpp"
#include "tri4/smith.hpp"
#include "tri4/triangulation.hpp"

namespace tri4 {

struct Homology1 {
    std::int64_t beta1 = 0;
    std::vector<BigInt> torsion; // invariant factors > 1
    std::int64_t generators = 0; // of the underlying presentation
    std::int64_t relators = 0;
    std::int64_t rank = 0;       // of the abelianised relator matrix
};

// Abelianisation of the relator matrix of pi1_presentation, reduced by
// Smith normal form.
Homology1 homology_h1(const Triangulation& tri);
Homology1 homology_of_presentation(const GroupPresentation& pres);

// beta2 = chi - 2 + 2*beta1 for a closed orientable connected 4-manifold.
// Throws UserError on a negative result ("inconsistent invariants").
std::int64_t betti2_from_duality(std::int64_t chi, std::int64_t beta1);

} // namespace tri4

#endif
