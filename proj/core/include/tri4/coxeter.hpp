#ifndef TRI4_COXETER_HPP
#define TRI4_COXETER_HPP

#include <cstdint>
#include <vector>

namespace tri4 {

// A Coxeter presentation: involutive generators r_i with relators
// (r_i r_j)^{m_ij}. The matrix is symmetric with 1 on the diagonal.
struct CoxeterMatrix {
    int rank = 0;
    std::vector<std::vector<int>> m;

    static CoxeterMatrix from_orders(int rank,
                                     const std::vector<std::vector<int>>& m);

    // The [5,3,3] simplex group: m01 = 5, m12 = 3, m23 = 3, the rest 2.
    // Order 14,400; the symmetry group of the 120-cell.
    static CoxeterMatrix h4();
};

/**
 * A completed coset table: the right action of each generator on the coset
 * space, in the canonical breadth-first numbering (coset 0 is the subgroup,
 * images explored generator by generator). For the trivial subgroup the
 * cosets are the group elements and the table is the regular action.
 */
class CosetTable {
public:
    std::int64_t size() const { return count_; }
    int rank() const { return static_cast<int>(action_.size()); }

    std::int32_t act(std::int32_t coset, int gen) const {
        return action_[gen][coset];
    }
    std::int32_t apply_word(std::int32_t coset, const std::vector<int>& word) const {
        for (int g : word) coset = act(coset, g);
        return coset;
    }

    // breadth-first definition path from coset 0
    std::vector<int> word_of(std::int32_t coset) const;

    // the permutation c -> w . g_c for w given by its coset (left
    // multiplication, computable because cosets are group elements;
    // only meaningful for the trivial-subgroup table)
    std::vector<std::int32_t> left_multiplication(std::int32_t w_coset) const;

    friend CosetTable coset_enumerate(const CoxeterMatrix&, const std::vector<int>&,
                                      std::int64_t);

private:
    std::int64_t count_ = 0;
    std::vector<std::vector<std::int32_t>> action_; // [gen][coset]
    std::vector<std::int32_t> parent_;              // BFS tree
    std::vector<std::int8_t> parent_gen_;
};

// Systematic coset enumeration (scan-and-fill with coincidence merging,
// repeated to a fixpoint, then breadth-first standardisation). Deterministic.
// subgroup_gens lists generator indices generating the subgroup. Throws
// UserError when more than coset_budget cosets would be allocated.
CosetTable coset_enumerate(const CoxeterMatrix& cox,
                           const std::vector<int>& subgroup_gens,
                           std::int64_t coset_budget = 1'000'000);

} // namespace tri4

#endif
