#ifndef TRI4_BOUNDS_HPP
#define TRI4_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tri4 {

// Invariants of a closed orientable smooth 4-manifold, as far as they are
// known. Flags are assertions supplied by the caller; the tool never tries
// to recognise a manifold itself.
struct InvariantSet {
    std::int64_t chi = 0;
    std::optional<std::int64_t> beta1;
    std::optional<std::int64_t> beta2;
    std::optional<std::int64_t> rank_lb;   // lower bound on rank pi_1; defaults to beta1
    std::optional<std::int64_t> sigma;     // pentachoron count of a known triangulation
    std::optional<double> volume;          // hyperbolic volume
    std::optional<std::int64_t> signature;
    std::optional<double> gromov_norm;
    bool known_s4 = false;   // known to be S^4
    bool known_cp2 = false;  // known to be CP^2 (either orientation)
    bool not_s4 = false;     // asserted not diffeomorphic to S^4
    bool not_cp2 = false;    // asserted not CP^2 (either orientation)

    // enforces chi = 2 - 2 beta1 + beta2 when both Betti numbers are given,
    // plus basic sanity of every field; throws UserError
    void check() const;
};

enum class BoundKind { Lower, Upper, Info };

struct BoundLine {
    std::string name;
    BoundKind kind = BoundKind::Lower;
    bool applicable = false;
    bool is_integer = true;
    std::int64_t value = 0;      // when is_integer
    double real_value = 0.0;     // otherwise
    std::string citation;        // the inequality it instantiates
    std::string note;            // why inapplicable / extra context
};

struct BoundReport {
    std::vector<BoundLine> lines;
    std::optional<std::int64_t> aggregate_lower; // max of applicable lower bounds
    std::optional<std::int64_t> aggregate_upper; // min of applicable upper bounds
    bool consistent = true; // lower <= upper when both exist

    void finalize(); // computes aggregates and the consistency flag
};

// Every lower bound on trisection genus derivable from the invariant set:
// the Betti sum, the Euler defect, the rank bound, and the |chi|/3 family
// with its refinements (applied only where the underlying case analysis
// holds). Requires chi (always set) and runs inv.check().
BoundReport lower_bounds(const InvariantSet& inv);

// 60 * sigma; sigma >= 1 required.
std::int64_t upper_bound_sigma(std::int64_t sigma);

// Bounds for a degree-d cover: lower ceil(|chi| d / 3) (needs not_s4),
// upper 60 sigma d, with a Theta(d) note when chi != 0.
BoundReport cover_bounds(const InvariantSet& inv, std::int64_t degree);

// Hyperbolic bounds through Vol = (4/3) pi^2 chi: derives the missing one
// of chi/volume (consistency enforced to 1e-6 relative when both are
// given), lower bound ceil(chi/2), upper 60 sigma with C = 60 sigma / Vol.
// chi must be positive and even; throws UserError otherwise.
BoundReport hyperbolic_bounds(const InvariantSet& inv);

// g >= |signature|/2 + ||M|| / (7776 pi^2) for Einstein manifolds.
double einstein_bound(std::int64_t signature, double gromov_norm);

// Exact rational minimum of value/degree over the supplied records: an
// upper bound on the stable genus. Paired with the stable lower bound
// ceil(|chi|/3) when chi and the S^4 exclusion are available.
struct StableRecord {
    std::int64_t degree;
    std::int64_t value;
};
struct StableResult {
    std::int64_t min_num = 0, min_den = 1; // reduced fraction
    double min_real = 0.0;
    std::optional<std::int64_t> stable_lower;
};
StableResult stable_records(const std::vector<StableRecord>& records,
                            const std::optional<InvariantSet>& context);

} // namespace tri4

#endif
