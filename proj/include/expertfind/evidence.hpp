#pragma once

#include <string>
#include <vector>

#include "expertfind/fusion.hpp"

namespace expertfind {

/// Basic belief assignment restricted to singleton candidate sets plus the
/// full frame. Masses are nonnegative and sum to 1; the empty set implicitly
/// carries none.
struct MassFunction {
    std::vector<std::string> frame;  // sorted candidate ids
    std::vector<double> singleton;   // aligned with frame
    double theta = 0.0;              // mass on the whole frame

    double singleton_sum() const;
    double mass_of(const std::string& author) const;
};

/// One sensor's contribution to the evidence combination.
struct SensorEvidence {
    RankedList fused;
    double entropy = 0.0;      // H(S)
    double max_entropy = 0.0;  // log2(candidates * events)
};

struct SensorReport {
    SensorKind sensor = SensorKind::text;
    RankedList fused;
    double entropy = 0.0;
    double max_entropy = 0.0;
    MassFunction mass;
};

/// Entropy of a sensor from its relevance pattern: a candidate with r raw
/// scores above zero contributes p*log2(p) with p = r/(candidates*events).
/// Returns (H, MaxH). Throws when candidates*events == 1.
std::pair<double, double> sensor_entropy(const EventScoreTable& table);

/// Per-sensor masses: theta takes the sensor's entropy ratio share across
/// sensors, singletons split the remainder proportionally to the fused
/// scores. A sensor with no fused score at all becomes vacuous (theta = 1).
/// Throws when every sensor carries neither scores nor entropy.
std::vector<MassFunction> build_mass_functions(const std::vector<SensorEvidence>& sensors,
                                               const std::vector<std::string>& frame);

/// Conflict K between two mass functions over the same frame.
double ds_conflict(const MassFunction& m1, const MassFunction& m2);

/// Dempster's combination rule in closed form for singleton+theta masses.
/// Throws on frame mismatch or total conflict (K ~ 1).
MassFunction ds_combine(const MassFunction& m1, const MassFunction& m2);

/// Combination via the explicit intersection tableau over all focal
/// elements. Test oracle; frames limited to 12 candidates. Agrees with
/// ds_combine exactly.
MassFunction ds_combine_tableau(const MassFunction& m1, const MassFunction& m2);

/// Total mass of subsets contained in `subset` (lower bound of support).
double belief(const MassFunction& m, const std::vector<std::string>& subset);

/// Total mass of subsets intersecting `subset` (upper bound of support).
double plausibility(const MassFunction& m, const std::vector<std::string>& subset);

struct FoldResult {
    MassFunction mass;
    std::vector<double> conflicts;  // K of each pairwise combination
};

/// Left-fold of ds_combine over the reports in sensor order
/// (text, profile, citation).
FoldResult fold_masses(const std::vector<SensorReport>& reports);

/// Final ranking: candidates ordered by combined singleton mass.
RankedList multisensor_rank(const std::vector<SensorReport>& reports);

}  // namespace expertfind
