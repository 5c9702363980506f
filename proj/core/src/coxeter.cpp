#include "tri4/coxeter.hpp"

#include <algorithm>
#include <deque>

#include "tri4/errors.hpp"

namespace tri4 {

CoxeterMatrix CoxeterMatrix::from_orders(int rank,
                                         const std::vector<std::vector<int>>& m) {
    if (static_cast<int>(m.size()) != rank)
        throw UserError("CoxeterMatrix: matrix size does not match rank");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(m[i].size()) != rank)
            throw UserError("CoxeterMatrix: matrix is not square");
        if (m[i][i] != 1) throw UserError("CoxeterMatrix: diagonal must be 1");
        for (int j = 0; j < rank; ++j) {
            if (i != j && m[i][j] < 2)
                throw UserError("CoxeterMatrix: off-diagonal orders must be >= 2");
            if (m[i][j] != m[j][i])
                throw UserError("CoxeterMatrix: matrix must be symmetric");
        }
    }
    CoxeterMatrix cox;
    cox.rank = rank;
    cox.m = m;
    return cox;
}

CoxeterMatrix CoxeterMatrix::h4() {
    return from_orders(4, {{1, 5, 2, 2}, //
                           {5, 1, 3, 2}, //
                           {2, 3, 1, 3}, //
                           {2, 2, 3, 1}});
}

namespace {

// Scan-and-fill coset enumeration over an involutive alphabet. Generators
// are their own inverses, so the table needs no separate inverse columns
// and every definition is written symmetrically.
struct Enumerator {
    int rank;
    std::int64_t budget;
    std::vector<std::vector<std::int32_t>> table; // [coset][gen], -1 undefined
    std::vector<std::int32_t> p;                  // coincidence union-find
    std::vector<std::int32_t> merge_queue;
    std::int64_t live = 0;
    bool changed = false;

    Enumerator(int rank_, std::int64_t budget_) : rank(rank_), budget(budget_) {
        new_coset();
    }

    std::int32_t new_coset() {
        if (static_cast<std::int64_t>(table.size()) >=
            std::max<std::int64_t>(budget, 1))
            throw UserError("coset_enumerate: coset budget exhausted (" +
                            std::to_string(budget) + " cosets)");
        table.emplace_back(rank, -1);
        p.push_back(static_cast<std::int32_t>(table.size()) - 1);
        ++live;
        changed = true;
        return p.back();
    }

    std::int32_t rep(std::int32_t k) {
        std::int32_t r = k;
        while (p[r] != r) r = p[r];
        while (p[k] != r) {
            const std::int32_t next = p[k];
            p[k] = r;
            k = next;
        }
        return r;
    }

    bool dead(std::int32_t k) { return rep(k) != k; }

    void merge(std::int32_t a, std::int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p[b] = a;
        merge_queue.push_back(b);
        --live;
        changed = true;
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        merge(a, b);
        for (std::size_t qi = 0; qi < merge_queue.size(); ++qi) {
            const std::int32_t gamma = merge_queue[qi];
            for (int x = 0; x < rank; ++x) {
                const std::int32_t delta = table[gamma][x];
                if (delta == -1) continue;
                table[gamma][x] = -1;
                if (table[delta][x] == gamma) table[delta][x] = -1;
                const std::int32_t mu = rep(gamma);
                const std::int32_t nu = rep(delta);
                if (table[mu][x] != -1)
                    merge(nu, table[mu][x]);
                else if (table[nu][x] != -1)
                    merge(mu, table[nu][x]);
                else {
                    table[mu][x] = nu;
                    table[nu][x] = mu;
                }
            }
        }
        merge_queue.clear();
    }

    void deduce(std::int32_t a, int g, std::int32_t b) {
        // a . g = b, symmetric since g is an involution
        if (table[a][g] == -1 && table[b][g] == -1) {
            table[a][g] = b;
            table[b][g] = a;
            changed = true;
            return;
        }
        if (table[a][g] != -1 && table[a][g] != b) {
            coincidence(table[a][g], b);
            return;
        }
        if (table[b][g] != -1 && table[b][g] != a) {
            coincidence(table[b][g], a);
            return;
        }
        if (table[a][g] == -1 || table[b][g] == -1) {
            table[a][g] = b;
            table[b][g] = a;
            changed = true;
        }
    }

    void scan_and_fill(std::int32_t start, const std::vector<int>& word) {
        std::int32_t f = start;
        std::size_t i = 0;
        std::int32_t b = start;
        std::size_t j = word.size(); // letters [i, j) remain
        while (true) {
            while (i < j && table[f][word[i]] != -1) f = table[f][word[i++]];
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i + 1 && table[b][word[j - 1]] != -1)
                b = table[b][word[--j]];
            if (j == i + 1) {
                deduce(f, word[i], b);
                return;
            }
            // fill the first gap and keep scanning forward
            const std::int32_t fresh = new_coset();
            deduce(f, word[i], fresh);
            f = rep(f);
            b = rep(b);
            if (dead(start)) return;
        }
    }
};

} // namespace

CosetTable coset_enumerate(const CoxeterMatrix& cox,
                           const std::vector<int>& subgroup_gens,
                           std::int64_t coset_budget) {
    for (int g : subgroup_gens)
        if (g < 0 || g >= cox.rank)
            throw UserError("coset_enumerate: subgroup generator out of range");

    std::vector<std::vector<int>> relators;
    for (int i = 0; i < cox.rank; ++i) relators.push_back({i, i});
    for (int i = 0; i < cox.rank; ++i)
        for (int j = i + 1; j < cox.rank; ++j) {
            std::vector<int> braid;
            for (int k = 0; k < cox.m[i][j]; ++k) {
                braid.push_back(i);
                braid.push_back(j);
            }
            relators.push_back(std::move(braid));
        }

    Enumerator en(cox.rank, coset_budget);
    for (int g : subgroup_gens) en.deduce(0, g, 0);

    // scan every live coset against every relator; repeat to a fixpoint so
    // rows that gained entries through coincidences are rescanned
    do {
        en.changed = false;
        for (std::int32_t c = 0; c < static_cast<std::int32_t>(en.table.size());
             ++c) {
            if (en.dead(c)) continue;
            for (const auto& relator : relators) {
                en.scan_and_fill(c, relator);
                if (en.dead(c)) break;
            }
        }
    } while (en.changed);

    // compress live cosets, then standardise to the breadth-first numbering
    std::vector<std::int32_t> compress(en.table.size(), -1);
    std::int32_t live_count = 0;
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(en.table.size()); ++c)
        if (!en.dead(c)) compress[c] = live_count++;

    std::vector<std::vector<std::int32_t>> compact(
        static_cast<std::size_t>(live_count),
        std::vector<std::int32_t>(cox.rank, -1));
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(en.table.size()); ++c) {
        if (compress[c] == -1) continue;
        for (int g = 0; g < cox.rank; ++g) {
            const std::int32_t t = en.table[c][g];
            if (t == -1)
                throw InternalError("coset_enumerate: incomplete table after "
                                    "fixpoint");
            compact[compress[c]][g] = compress[en.rep(t)];
        }
    }

    // breadth-first renumbering from coset 0
    std::vector<std::int32_t> order(static_cast<std::size_t>(live_count), -1);
    CosetTable out;
    out.count_ = live_count;
    out.action_.assign(cox.rank,
                       std::vector<std::int32_t>(static_cast<std::size_t>(live_count),
                                                 -1));
    out.parent_.assign(static_cast<std::size_t>(live_count), -1);
    out.parent_gen_.assign(static_cast<std::size_t>(live_count), -1);
    std::deque<std::int32_t> queue{0};
    order[0] = 0;
    std::int32_t next = 1;
    while (!queue.empty()) {
        const std::int32_t c = queue.front();
        queue.pop_front();
        for (int g = 0; g < cox.rank; ++g) {
            const std::int32_t t = compact[c][g];
            if (order[t] == -1) {
                order[t] = next++;
                out.parent_[order[t]] = order[c];
                out.parent_gen_[order[t]] = static_cast<std::int8_t>(g);
                queue.push_back(t);
            }
        }
    }
    if (next != live_count)
        throw InternalError("coset_enumerate: coset graph disconnected");
    for (std::int32_t c = 0; c < live_count; ++c)
        for (int g = 0; g < cox.rank; ++g)
            out.action_[g][order[c]] = order[compact[c][g]];

    // closure verification: every relator fixes every coset, the subgroup
    // generators fix coset 0, and every generator acts as a permutation
    for (const auto& relator : relators)
        for (std::int32_t c = 0; c < live_count; ++c)
            if (out.apply_word(c, relator) != c)
                throw InternalError("coset_enumerate: relator fails to close");
    for (int g : subgroup_gens)
        if (out.act(0, g) != 0)
            throw InternalError("coset_enumerate: subgroup generator moves the "
                                "base coset");
    for (int g = 0; g < cox.rank; ++g) {
        std::vector<char> seen(static_cast<std::size_t>(live_count), 0);
        for (std::int32_t c = 0; c < live_count; ++c) {
            const std::int32_t t = out.act(c, g);
            if (t < 0 || t >= live_count || seen[t])
                throw InternalError("coset_enumerate: generator action is not a "
                                    "permutation");
            seen[t] = 1;
        }
    }
    return out;
}

std::vector<int> CosetTable::word_of(std::int32_t coset) const {
    std::vector<int> word;
    while (parent_[coset] != -1) {
        word.push_back(parent_gen_[coset]);
        coset = parent_[coset];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::int32_t> CosetTable::left_multiplication(
    std::int32_t w_coset) const {
    // g_c is the breadth-first word of c, so w . g_c is w's coset pushed
    // through that word; computed along the tree in one sweep
    std::vector<std::int32_t> left(static_cast<std::size_t>(count_), -1);
    left[0] = w_coset;
    for (std::int32_t c = 1; c < count_; ++c)
        left[c] = act(left[parent_[c]], parent_gen_[c]);
    return left;
}

} // namespace tri4
