#include "tri4/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tri4/errors.hpp"

namespace tri4 {

void SparseIntMatrix::add(std::int64_t row, std::int64_t col, std::int64_t value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw UserError("SparseIntMatrix::add: index out of range");
    if (value != 0) triplets_.push_back({row, col, value});
}

namespace {

constexpr std::int64_t kOverflowGuard = std::int64_t(1) << 59;

struct Entry {
    std::int32_t col;
    std::int64_t val;
};

struct SparseEliminator {
    std::vector<std::vector<Entry>> rows;      // sorted by col, nonzero vals
    std::vector<char> alive;
    std::vector<std::set<std::int32_t>> col_rows; // alive rows touching a column
    std::set<std::pair<std::int32_t, std::int32_t>> by_size; // (nnz, row)
    std::int64_t unit_factors = 0;
    bool overflow = false;

    explicit SparseEliminator(const SparseIntMatrix& m)
        : col_rows(static_cast<std::size_t>(m.cols())) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> acc;
        for (const auto& [r, c, v] : m.triplets()) acc[{r, c}] += v;
        std::map<std::int64_t, std::vector<Entry>> per_row;
        for (const auto& [rc, v] : acc)
            if (v != 0)
                per_row[rc.first].push_back(
                    Entry{static_cast<std::int32_t>(rc.second), v});
        for (auto& [r, entries] : per_row) {
            const std::int32_t id = static_cast<std::int32_t>(rows.size());
            rows.push_back(std::move(entries));
            (void)r;
            alive.push_back(1);
            for (const Entry& e : rows.back()) col_rows[e.col].insert(id);
            by_size.insert({static_cast<std::int32_t>(rows.back().size()), id});
        }
    }

    // First alive unit entry in (row size, row id, col id) priority,
    // preferring the column shared with the fewest rows.
    bool find_unit_pivot(std::int32_t& pr, std::int32_t& pc) {
        for (const auto& [size, r] : by_size) {
            std::int64_t best_count = -1;
            std::int32_t best_col = -1;
            for (const Entry& e : rows[r]) {
                if (e.val != 1 && e.val != -1) continue;
                const std::int64_t count =
                    static_cast<std::int64_t>(col_rows[e.col].size());
                if (best_count == -1 || count < best_count) {
                    best_count = count;
                    best_col = e.col;
                }
            }
            if (best_col >= 0) {
                pr = r;
                pc = best_col;
                return true;
            }
        }
        return false;
    }

    std::int64_t value_at(std::int32_t r, std::int32_t c) const {
        for (const Entry& e : rows[r])
            if (e.col == c) return e.val;
        return 0;
    }

    void retire_row(std::int32_t r) {
        by_size.erase({static_cast<std::int32_t>(rows[r].size()), r});
        for (const Entry& e : rows[r]) col_rows[e.col].erase(r);
        rows[r].clear();
        alive[r] = 0;
    }

    // row_j -= m * row_p, keeping the index structures current. Refuses
    // (returning false, touching nothing) if any result would leave the
    // 64-bit comfort zone; the caller then abandons sparse elimination.
    bool row_axpy(std::int32_t j, std::int64_t m, std::int32_t p) {
        for (const Entry& e : rows[p]) {
            const __int128 prod = static_cast<__int128>(m) * e.val;
            const __int128 v = static_cast<__int128>(value_at(j, e.col)) - prod;
            if (v > kOverflowGuard || v < -kOverflowGuard) {
                overflow = true;
                return false;
            }
        }
        by_size.erase({static_cast<std::int32_t>(rows[j].size()), j});
        std::vector<Entry> merged;
        merged.reserve(rows[j].size() + rows[p].size());
        auto a = rows[j].begin();
        auto b = rows[p].begin();
        while (a != rows[j].end() || b != rows[p].end()) {
            if (b == rows[p].end() || (a != rows[j].end() && a->col < b->col)) {
                merged.push_back(*a++);
            } else if (a == rows[j].end() || b->col < a->col) {
                merged.push_back(Entry{b->col, -m * b->val});
                col_rows[b->col].insert(j);
                ++b;
            } else {
                const std::int64_t v = a->val - m * b->val;
                if (v == 0)
                    col_rows[a->col].erase(j);
                else
                    merged.push_back(Entry{a->col, v});
                ++a;
                ++b;
            }
        }
        rows[j] = std::move(merged);
        by_size.insert({static_cast<std::int32_t>(rows[j].size()), j});
        return true;
    }

    void run() {
        std::int32_t pr, pc;
        while (!overflow && find_unit_pivot(pr, pc)) {
            const std::int64_t pivot = value_at(pr, pc);
            // clear the pivot column in every other row
            const std::vector<std::int32_t> touched(col_rows[pc].begin(),
                                                    col_rows[pc].end());
            for (const std::int32_t j : touched) {
                if (j == pr) continue;
                const std::int64_t v = value_at(j, pc);
                if (!row_axpy(j, v * pivot, pr)) // pivot +-1: multiplier v/pivot
                    return;
            }
            retire_row(pr);
            ++unit_factors;
        }
    }
};

// Classic dense SNF with gcd pivoting; values are exact big integers.
std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> factors;
    const std::size_t m = a.size();
    if (m == 0) return factors;
    const std::size_t n = a[0].size();

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // smallest nonzero magnitude in the trailing submatrix,
            // ties by (row, col)
            std::size_t pr = 0, pc = 0;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    const BigInt mag = abs(a[i][j]);
                    if (best == 0 || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                    }
                }
            if (best == 0) return factors; // trailing submatrix vanished
            std::swap(a[t], a[pr]);
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pc]);

            bool again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t]; // truncated division
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) again = true; // remainder left, re-pivot
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) again = true;
            }
            if (again) continue;

            // pivot must divide the rest of the submatrix
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                        fixed = false;
                    }
            if (fixed) break;
        }
        factors.push_back(abs(a[t][t]));
    }
    return factors;
}

} // namespace

SmithForm smith_normal_form(const SparseIntMatrix& matrix) {
    SmithForm result;
    result.rows = matrix.rows();
    result.cols = matrix.cols();

    SparseEliminator elim(matrix);
    elim.run();

    // whatever survives (no unit entries, or the overflow escape hatch)
    // goes to the dense endgame
    std::vector<std::int32_t> live_rows;
    std::set<std::int32_t> live_col_set;
    for (std::size_t r = 0; r < elim.rows.size(); ++r) {
        if (!elim.alive[r] || elim.rows[r].empty()) continue;
        live_rows.push_back(static_cast<std::int32_t>(r));
        for (const Entry& e : elim.rows[r]) live_col_set.insert(e.col);
    }
    std::vector<BigInt> tail;
    if (!live_rows.empty()) {
        std::vector<std::int32_t> live_cols(live_col_set.begin(),
                                            live_col_set.end());
        std::vector<std::vector<BigInt>> dense(
            live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const Entry& e : elim.rows[live_rows[i]]) {
                const auto it = std::lower_bound(live_cols.begin(), live_cols.end(),
                                                 e.col);
                dense[i][static_cast<std::size_t>(it - live_cols.begin())] = e.val;
            }
        tail = dense_smith(std::move(dense));
    }

    result.factors.assign(static_cast<std::size_t>(elim.unit_factors), BigInt(1));
    result.factors.insert(result.factors.end(), tail.begin(), tail.end());
    result.rank = static_cast<std::int64_t>(result.factors.size());
    return result;
}

} // namespace tri4
