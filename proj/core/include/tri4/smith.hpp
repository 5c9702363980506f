#ifndef TRI4_SMITH_HPP
#define TRI4_SMITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace tri4 {

using BigInt = boost::multiprecision::cpp_int;

// Integer matrix assembled from (row, col, value) contributions; duplicate
// coordinates accumulate.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols) {}

    void add(std::int64_t row, std::int64_t col, std::int64_t value);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>&
    triplets() const {
        return triplets_;
    }

private:
    std::int64_t rows_, cols_;
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> triplets_;
};

struct SmithForm {
    std::int64_t rows = 0, cols = 0;
    std::int64_t rank = 0;             // number of nonzero invariant factors
    std::vector<BigInt> factors;       // d1 | d2 | ... | d_rank, all positive

    // cokernel of the row-space inclusion: Z^cols / rows
    std::int64_t cokernel_free_rank() const { return cols - rank; }
    std::vector<BigInt> torsion() const {
        std::vector<BigInt> t;
        for (const BigInt& d : factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/**
 * Smith normal form over the integers.
 *
 * Elimination runs in two phases. While a unit entry exists the matrix stays
 * sparse: the pivot is the +-1 entry in a shortest row with the fewest
 * occupied columns (ties by row then column index), its column is cleared by
 * row operations, and the pivot row is retired — the implicit column
 * operations that clear the rest of the row touch nothing else precisely
 * because the column was cleared first. When no unit entry remains (or an
 * entry would overflow 64 bits) the surviving submatrix moves to a dense
 * big-integer endgame with magnitude-minimising pivots and the usual
 * divisibility fix-up. Bitwise deterministic throughout.
 */
SmithForm smith_normal_form(const SparseIntMatrix& matrix);

} // namespace tri4

#endif
