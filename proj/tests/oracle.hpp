#ifndef TRI4_TESTS_ORACLE_HPP
#define TRI4_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tri4/smith.hpp"
#include "tri4/triangulation.hpp"

namespace tri4::tests {

// Brute-force face classification, kept deliberately independent of the
// library's union-find: faces are relabelled by repeated sweeps until no
// label changes. Quadratic and slow; for oracle use on small complexes.
//
// A d-face corner is (pentachoron, sorted slot set). Returns the number of
// classes and the label of each corner keyed by (p, slots).
struct BruteFaceClasses {
    std::map<std::pair<PentId, std::vector<int>>, int> label;
    int count = 0;
};

inline BruteFaceClasses brute_face_classes(const Triangulation& tri, int dim) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> slots;
        for (int s = 0; s < 5; ++s)
            if (mask & (1 << s)) slots.push_back(s);
        if (static_cast<int>(slots.size()) == dim + 1) subsets.push_back(slots);
    }
    std::sort(subsets.begin(), subsets.end());

    std::map<std::pair<PentId, std::vector<int>>, int> label;
    int next = 0;
    for (PentId p = 0; p < tri.size(); ++p)
        for (const auto& s : subsets) label[{p, s}] = next++;

    bool changed = true;
    while (changed) {
        changed = false;
        for (PentId p = 0; p < tri.size(); ++p) {
            for (int f = 0; f < 5; ++f) {
                const Gluing& gl = tri.gluing(p, f);
                if (!gl.glued()) continue;
                for (const auto& s : subsets) {
                    if (std::find(s.begin(), s.end(), f) != s.end()) continue;
                    std::vector<int> image;
                    for (int v : s) image.push_back(gl.perm[v]);
                    std::sort(image.begin(), image.end());
                    int& a = label[{p, s}];
                    int& b = label[{gl.pent, image}];
                    if (a != b) {
                        a = b = std::min(a, b);
                        changed = true;
                    }
                }
            }
        }
    }
    std::set<int> labels;
    for (const auto& [corner, l] : label) labels.insert(l);
    BruteFaceClasses out;
    out.label = label;
    out.count = static_cast<int>(labels.size());
    return out;
}

// Independent Smith-form oracle: the k-th determinantal divisor d_k is the
// gcd of all k x k minors; invariant factors are d_k / d_{k-1}. Exponential;
// for matrices up to ~8 x 8.
struct MinorOracle {
    std::vector<std::vector<BigInt>> a;

    BigInt det(const std::vector<int>& rows, const std::vector<int>& cols) const {
        const std::size_t k = rows.size();
        if (k == 1) return a[rows[0]][cols[0]];
        BigInt sum = 0;
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> sub_rows;
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) sub_rows.push_back(rows[j]);
            const BigInt term = a[rows[i]][cols[0]] * det(sub_rows, sub_cols);
            sum += (i % 2 == 0) ? term : -term;
        }
        return sum;
    }

    std::vector<BigInt> invariant_factors() const {
        const int m = static_cast<int>(a.size());
        const int n = static_cast<int>(a[0].size());
        std::vector<BigInt> divisors{1}; // d_0
        for (int k = 1; k <= std::min(m, n); ++k) {
            BigInt g = 0;
            std::vector<int> rows(k), cols(k);
            std::iota(rows.begin(), rows.end(), 0);
            const auto next_subset = [](std::vector<int>& s, int limit) {
                int i = static_cast<int>(s.size()) - 1;
                while (i >= 0 && s[i] == limit - static_cast<int>(s.size()) + i)
                    --i;
                if (i < 0) return false;
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
                return true;
            };
            do {
                std::iota(cols.begin(), cols.end(), 0);
                do {
                    g = gcd(g, det(rows, cols));
                } while (next_subset(cols, n));
            } while (next_subset(rows, m));
            if (g == 0) break;
            divisors.push_back(g);
        }
        std::vector<BigInt> factors;
        for (std::size_t k = 1; k < divisors.size(); ++k)
            factors.push_back(divisors[k] / divisors[k - 1]);
        return factors;
    }
};

} // namespace tri4::tests

#endif
