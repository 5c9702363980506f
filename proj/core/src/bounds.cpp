#include "tri4/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tri4/errors.hpp"

namespace tri4 {

namespace {

constexpr double kPiSquared = 9.869604401089358;

// ceil(a/b) for b > 0
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

BoundLine lower(const std::string& name, const std::string& citation) {
    BoundLine line;
    line.name = name;
    line.kind = BoundKind::Lower;
    line.citation = citation;
    return line;
}

} // namespace

void InvariantSet::check() const {
    if (beta1 && *beta1 < 0) throw UserError("invariants: beta1 must be >= 0");
    if (beta2 && *beta2 < 0) throw UserError("invariants: beta2 must be >= 0");
    if (rank_lb && *rank_lb < 0) throw UserError("invariants: rank must be >= 0");
    if (sigma && *sigma <= 0) throw UserError("invariants: sigma must be >= 1");
    if (volume && *volume <= 0) throw UserError("invariants: volume must be > 0");
    if (gromov_norm && *gromov_norm < 0)
        throw UserError("invariants: Gromov norm must be >= 0");
    if (known_s4 && not_s4)
        throw UserError("invariants: is-S4 and not-S4 both asserted");
    if (known_cp2 && not_cp2)
        throw UserError("invariants: is-CP2 and not-CP2 both asserted");
    if (beta1 && beta2 && chi != 2 - 2 * *beta1 + *beta2)
        throw UserError("invariants: duality identity violated (chi = " +
                        std::to_string(chi) + " but 2 - 2 beta1 + beta2 = " +
                        std::to_string(2 - 2 * *beta1 + *beta2) + ")");
    if (rank_lb && beta1 && *rank_lb < *beta1)
        throw UserError("invariants: rank lower bound below beta1 is redundant "
                        "(rank pi_1 >= beta1 always)");
}

void BoundReport::finalize() {
    aggregate_lower.reset();
    aggregate_upper.reset();
    for (const BoundLine& line : lines) {
        if (!line.applicable || !line.is_integer) continue;
        if (line.kind == BoundKind::Lower)
            aggregate_lower = std::max(aggregate_lower.value_or(line.value),
                                       line.value);
        else if (line.kind == BoundKind::Upper)
            aggregate_upper = std::min(aggregate_upper.value_or(line.value),
                                       line.value);
    }
    consistent = !(aggregate_lower && aggregate_upper &&
                   *aggregate_lower > *aggregate_upper);
}

BoundReport lower_bounds(const InvariantSet& inv) {
    inv.check();
    const std::int64_t chi = inv.chi;
    const std::optional<std::int64_t> rank =
        inv.rank_lb ? inv.rank_lb : inv.beta1;
    BoundReport report;

    {
        BoundLine line = lower("non-negative", "g >= 0");
        line.applicable = true;
        line.value = 0;
        report.lines.push_back(line);
    }
    {
        BoundLine line = lower("betti-sum", "g >= beta1 + beta2");
        if (inv.beta1 && inv.beta2) {
            line.applicable = true;
            line.value = *inv.beta1 + *inv.beta2;
        } else {
            line.note = "needs beta1 and beta2";
        }
        report.lines.push_back(line);
    }
    {
        BoundLine line = lower("euler-defect", "g >= chi - 2");
        line.applicable = true;
        line.value = chi - 2;
        report.lines.push_back(line);
    }
    {
        // from g >= beta1 and chi = 2 - 2 beta1 + beta2 with beta2 >= 0
        BoundLine line = lower("half-euler-complement", "g >= 1 - chi/2");
        line.applicable = true;
        line.value = ceil_div(2 - chi, 2);
        report.lines.push_back(line);
    }
    {
        BoundLine line = lower("rank", "g >= chi - 2 + 3 rank(pi_1)");
        if (rank) {
            line.applicable = true;
            line.value = chi - 2 + 3 * *rank;
            line.note = inv.rank_lb ? "rank supplied" : "rank defaulted to beta1";
        } else {
            line.note = "needs rank or beta1";
        }
        report.lines.push_back(line);
    }
    {
        BoundLine line = lower("third-euler", "g >= |chi|/3 (M not S^4)");
        if (inv.not_s4) {
            line.applicable = true;
            line.value = ceil_div(std::abs(chi), 3);
        } else {
            line.note = "needs the S^4 exclusion";
        }
        report.lines.push_back(line);
    }
    {
        // The 1/2 refinement, on the branches where the case analysis
        // delivers it: chi >= 4 via g >= chi - 2; positive chi with
        // beta1 > 0 via g >= chi; 1 <= chi <= 2 with beta1 = 0 via the
        // genus-2 classification; chi <= 0 via g >= 1 - chi/2.
        BoundLine line = lower("half-euler", "g >= |chi|/2 (M not S^4, not CP^2)");
        if (inv.not_s4 && inv.not_cp2) {
            bool covered = false;
            if (chi <= 0 || chi >= 4)
                covered = true;
            else if (inv.beta1 && (*inv.beta1 > 0 || chi <= 2))
                covered = true;
            if (covered) {
                line.applicable = true;
                // chi <= 0 sharpens to |chi|/2 + 1
                line.value = chi <= 0 ? ceil_div(std::abs(chi) + 2, 2)
                                      : ceil_div(chi, 2);
            } else {
                line.note = "case analysis does not cover 1 <= chi <= 3 "
                            "without Betti data";
            }
        } else {
            line.note = "needs the S^4 and CP^2 exclusions";
        }
        report.lines.push_back(line);
    }
    {
        BoundLine line =
            lower("genus-two-classification", "g >= 3 (1 <= chi <= 2, beta1 = 0, "
                                              "M not S^4)");
        if (inv.not_s4 && inv.beta1 && *inv.beta1 == 0 && chi >= 1 && chi <= 2) {
            line.applicable = true;
            line.value = 3;
        } else {
            line.note = "needs 1 <= chi <= 2, beta1 = 0 and the S^4 exclusion";
        }
        report.lines.push_back(line);
    }
    report.finalize();
    return report;
}

std::int64_t upper_bound_sigma(std::int64_t sigma) {
    if (sigma <= 0)
        throw UserError("upper_bound_sigma: sigma must be >= 1");
    return 60 * sigma;
}

BoundReport cover_bounds(const InvariantSet& inv, std::int64_t degree) {
    inv.check();
    if (degree < 1) throw UserError("cover_bounds: degree must be >= 1");
    BoundReport report;
    {
        BoundLine line = lower("cover-third-euler",
                               "g(N) >= |chi(M)| d / 3 (M not S^4)");
        if (inv.not_s4) {
            line.applicable = true;
            line.value = ceil_div(std::abs(inv.chi) * degree, 3);
        } else {
            line.note = "needs the S^4 exclusion";
        }
        report.lines.push_back(line);
    }
    {
        BoundLine line;
        line.name = "cover-sixty-sigma";
        line.kind = BoundKind::Upper;
        line.citation = "60 sigma(M) d >= g(N)";
        if (inv.sigma) {
            line.applicable = true;
            line.value = 60 * *inv.sigma * degree;
        } else {
            line.note = "needs sigma";
        }
        report.lines.push_back(line);
    }
    {
        BoundLine line;
        line.name = "growth";
        line.kind = BoundKind::Info;
        line.citation = "g(N) is Theta(d) when chi(M) != 0";
        line.applicable = inv.chi != 0;
        line.is_integer = true;
        line.value = degree;
        if (inv.chi == 0) line.note = "chi = 0: only O(d) holds";
        report.lines.push_back(line);
    }
    report.finalize();
    return report;
}

BoundReport hyperbolic_bounds(const InvariantSet& inv) {
    if (!inv.volume && inv.chi == 0)
        throw UserError("hyperbolic_bounds: need chi or volume");

    std::int64_t chi = inv.chi;
    double volume = inv.volume.value_or(0.0);
    if (inv.volume && inv.chi != 0) {
        const double expected = (4.0 / 3.0) * kPiSquared * double(chi);
        if (std::abs(volume - expected) > 1e-6 * volume)
            throw UserError("hyperbolic_bounds: volume and chi violate "
                            "Vol = (4/3) pi^2 chi");
    } else if (inv.volume) {
        const double raw = 3.0 * volume / (4.0 * kPiSquared);
        chi = std::llround(raw);
        if (std::abs(raw - double(chi)) > 1e-6 * std::max(1.0, raw))
            throw UserError("hyperbolic_bounds: volume is not (4/3) pi^2 times "
                            "an integer");
    } else {
        volume = (4.0 / 3.0) * kPiSquared * double(chi);
    }
    if (chi <= 0 || chi % 2 != 0)
        throw UserError("hyperbolic_bounds: a closed hyperbolic 4-manifold has "
                        "positive even chi (got " + std::to_string(chi) + ")");

    BoundReport report;
    {
        BoundLine line;
        line.name = "volume";
        line.kind = BoundKind::Info;
        line.applicable = true;
        line.is_integer = false;
        line.real_value = volume;
        line.citation = "Vol = (4/3) pi^2 chi";
        report.lines.push_back(line);
    }
    {
        BoundLine line = lower("volume-lower", "g >= (3/(8 pi^2)) Vol = chi/2");
        line.applicable = true;
        line.value = chi / 2;
        report.lines.push_back(line);
    }
    if (inv.sigma) {
        BoundLine line;
        line.name = "sixty-sigma";
        line.kind = BoundKind::Upper;
        line.citation = "60 sigma >= g";
        line.applicable = true;
        line.value = upper_bound_sigma(*inv.sigma);
        report.lines.push_back(line);

        BoundLine c;
        c.name = "volume-constant";
        c.kind = BoundKind::Info;
        c.applicable = true;
        c.is_integer = false;
        c.real_value = double(60 * *inv.sigma) / volume;
        c.citation = "C(M) = 60 sigma(M) / Vol(M)";
        report.lines.push_back(c);
    }
    report.finalize();
    return report;
}

double einstein_bound(std::int64_t signature, double gromov_norm) {
    if (gromov_norm < 0)
        throw UserError("einstein_bound: Gromov norm must be >= 0");
    return 0.5 * double(std::abs(signature)) +
           gromov_norm / (7776.0 * kPiSquared);
}

StableResult stable_records(const std::vector<StableRecord>& records,
                            const std::optional<InvariantSet>& context) {
    if (records.empty())
        throw UserError("stable_records: empty record list");
    StableResult result;
    bool first = true;
    for (const StableRecord& rec : records) {
        if (rec.degree < 1)
            throw UserError("stable_records: degree must be >= 1");
        if (rec.value < 0)
            throw UserError("stable_records: value must be >= 0");
        // compare rec.value/rec.degree < min via cross multiplication
        if (first || rec.value * result.min_den < result.min_num * rec.degree) {
            result.min_num = rec.value;
            result.min_den = rec.degree;
            first = false;
        }
    }
    const std::int64_t g = std::gcd(result.min_num, result.min_den);
    if (g > 0) {
        result.min_num /= g;
        result.min_den /= g;
    }
    result.min_real = double(result.min_num) / double(result.min_den);
    if (context && context->not_s4)
        result.stable_lower = ceil_div(std::abs(context->chi), 3);
    return result;
}

} // namespace tri4
