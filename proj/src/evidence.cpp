#include "expertfind/evidence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace expertfind {

namespace {

constexpr double kConflictLimit = 1.0 - 1e-12;

[[noreturn]] void total_conflict(const MassFunction& m1, const MassFunction& m2, double k) {
    auto top = [](const MassFunction& m) -> std::string {
        if (m.singleton.empty()) {
            return "<empty>";
        }
        auto it = std::max_element(m.singleton.begin(), m.singleton.end());
        return m.frame[static_cast<std::size_t>(it - m.singleton.begin())];
    };
    throw std::runtime_error("total conflict (K=" + std::to_string(k) +
                             ") between mass functions peaking at '" + top(m1) + "' and '" +
                             top(m2) + "'");
}

}  // namespace

double MassFunction::singleton_sum() const {
    return std::accumulate(singleton.begin(), singleton.end(), 0.0);
}

double MassFunction::mass_of(const std::string& author) const {
    auto it = std::lower_bound(frame.begin(), frame.end(), author);
    if (it == frame.end() || *it != author) {
        throw std::invalid_argument("author not in frame: " + author);
    }
    return singleton[static_cast<std::size_t>(it - frame.begin())];
}

std::pair<double, double> sensor_entropy(const EventScoreTable& table) {
    std::size_t n = table.candidates.size();
    std::size_t t = table.events.size();
    if (n == 0 || t == 0) {
        throw std::invalid_argument("sensor_entropy: empty table");
    }
    if (n * t == 1) {
        throw std::invalid_argument("sensor_entropy: single-cell table has zero max entropy");
    }
    double cells = static_cast<double>(n * t);
    double h = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t relevant = 0;
        for (std::size_t e = 0; e < t; ++e) {
            if (table.raw[c][e] > 0.0) {
                ++relevant;
            }
        }
        if (relevant > 0) {
            double p = static_cast<double>(relevant) / cells;
            h -= p * std::log2(p);
        }
    }
    return {h, std::log2(cells)};
}

std::vector<MassFunction> build_mass_functions(const std::vector<SensorEvidence>& sensors,
                                               const std::vector<std::string>& frame) {
    if (sensors.empty()) {
        throw std::invalid_argument("build_mass_functions: no sensors");
    }
    std::vector<std::string> sorted_frame = frame;
    std::sort(sorted_frame.begin(), sorted_frame.end());
    sorted_frame.erase(std::unique(sorted_frame.begin(), sorted_frame.end()),
                       sorted_frame.end());

    std::vector<double> weights(sensors.size(), 0.0);
    std::vector<double> fused_sums(sensors.size(), 0.0);
    bool any_evidence = false;
    for (std::size_t s = 0; s < sensors.size(); ++s) {
        const auto& sensor = sensors[s];
        if (sensor.entropy < 0.0 || sensor.entropy > sensor.max_entropy + 1e-12) {
            throw std::invalid_argument("build_mass_functions: entropy outside [0, MaxH]");
        }
        if (sensor.max_entropy > 0.0) {
            weights[s] = sensor.entropy / sensor.max_entropy;
        }
        for (const auto& entry : sensor.fused.entries) {
            if (entry.score < 0.0) {
                throw std::invalid_argument("build_mass_functions: negative fused score");
            }
            fused_sums[s] += entry.score;
        }
        if (weights[s] > 0.0 || fused_sums[s] > 0.0) {
            any_evidence = true;
        }
    }
    if (!any_evidence) {
        throw std::runtime_error(
            "build_mass_functions: no evidence at all (zero scores and zero entropy in every "
            "sensor)");
    }

    double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<MassFunction> out;
    out.reserve(sensors.size());
    for (std::size_t s = 0; s < sensors.size(); ++s) {
        MassFunction m;
        m.frame = sorted_frame;
        m.singleton.assign(sorted_frame.size(), 0.0);
        if (fused_sums[s] == 0.0) {
            m.theta = 1.0;  // sensor saw nothing: fully uncertain
        } else {
            // One sensor keeps its raw entropy ratio; with several, each
            // takes its share of the combined uncertainty.
            if (sensors.size() == 1) {
                m.theta = weights[s];
            } else {
                m.theta = weight_sum > 0.0 ? weights[s] / weight_sum : 0.0;
            }
            double scale = (1.0 - m.theta) / fused_sums[s];
            for (const auto& entry : sensors[s].fused.entries) {
                auto it = std::lower_bound(sorted_frame.begin(), sorted_frame.end(), entry.author);
                if (it == sorted_frame.end() || *it != entry.author) {
                    throw std::invalid_argument("build_mass_functions: fused author '" +
                                                entry.author + "' not in frame");
                }
                m.singleton[static_cast<std::size_t>(it - sorted_frame.begin())] =
                    entry.score * scale;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

double ds_conflict(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame != m2.frame) {
        throw std::invalid_argument("ds_conflict: mass functions over different frames");
    }
    double s1 = m1.singleton_sum();
    double s2 = m2.singleton_sum();
    double dot = 0.0;
    for (std::size_t i = 0; i < m1.singleton.size(); ++i) {
        dot += m1.singleton[i] * m2.singleton[i];
    }
    return s1 * s2 - dot;
}

MassFunction ds_combine(const MassFunction& m1, const MassFunction& m2) {
    double k = ds_conflict(m1, m2);  // checks the frames
    if (k >= kConflictLimit) {
        total_conflict(m1, m2, k);
    }
    double denom = 1.0 - k;
    MassFunction out;
    out.frame = m1.frame;
    out.singleton.resize(m1.singleton.size());
    for (std::size_t i = 0; i < out.singleton.size(); ++i) {
        out.singleton[i] = (m1.singleton[i] * m2.singleton[i] + m1.singleton[i] * m2.theta +
                            m1.theta * m2.singleton[i]) /
                           denom;
    }
    out.theta = m1.theta * m2.theta / denom;
    return out;
}

MassFunction ds_combine_tableau(const MassFunction& m1, const MassFunction& m2) {
    if (m1.frame != m2.frame) {
        throw std::invalid_argument("ds_combine_tableau: mass functions over different frames");
    }
    std::size_t n = m1.frame.size();
    if (n > 12) {
        throw std::invalid_argument("ds_combine_tableau: frame too large for the tableau oracle");
    }
    using Mask = std::uint32_t;
    Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;

    auto focal_elements = [&](const MassFunction& m) {
        std::vector<std::pair<Mask, double>> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.emplace_back(Mask{1} << i, m.singleton[i]);
        }
        out.emplace_back(full, m.theta);
        return out;
    };

    std::map<Mask, double> combined;
    double conflict = 0.0;
    for (const auto& [mask1, mass1] : focal_elements(m1)) {
        for (const auto& [mask2, mass2] : focal_elements(m2)) {
            Mask inter = mask1 & mask2;
            double product = mass1 * mass2;
            if (inter == 0) {
                conflict += product;
            } else {
                combined[inter] += product;
            }
        }
    }
    if (conflict >= kConflictLimit) {
        total_conflict(m1, m2, conflict);
    }
    MassFunction out;
    out.frame = m1.frame;
    out.singleton.assign(n, 0.0);
    for (const auto& [mask, mass] : combined) {
        if (mask == full) {
            out.theta = mass / (1.0 - conflict);
        } else {
            // singleton+theta inputs only ever intersect to singletons or theta
            std::size_t bit = static_cast<std::size_t>(std::countr_zero(mask));
            out.singleton[bit] += mass / (1.0 - conflict);
        }
    }
    return out;
}

namespace {

// subset as a sorted, deduplicated id list checked against the frame
std::vector<std::string> canonical_subset(const MassFunction& m,
                                          const std::vector<std::string>& subset) {
    std::vector<std::string> out = subset;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& id : out) {
        if (!std::binary_search(m.frame.begin(), m.frame.end(), id)) {
            throw std::invalid_argument("subset member not in frame: " + id);
        }
    }
    return out;
}

}  // namespace

double belief(const MassFunction& m, const std::vector<std::string>& subset) {
    auto ids = canonical_subset(m, subset);
    double total = 0.0;
    for (const auto& id : ids) {
        total += m.mass_of(id);
    }
    if (ids == m.frame) {
        total += m.theta;
    }
    return total;
}

double plausibility(const MassFunction& m, const std::vector<std::string>& subset) {
    auto ids = canonical_subset(m, subset);
    if (ids.empty()) {
        return 0.0;
    }
    double total = m.theta;
    for (const auto& id : ids) {
        total += m.mass_of(id);
    }
    return total;
}

FoldResult fold_masses(const std::vector<SensorReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("fold_masses: no sensor reports");
    }
    std::vector<const SensorReport*> ordered;
    ordered.reserve(reports.size());
    for (const auto& r : reports) {
        ordered.push_back(&r);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const SensorReport* a,
                                                        const SensorReport* b) {
        return static_cast<int>(a->sensor) < static_cast<int>(b->sensor);
    });
    FoldResult result;
    result.mass = ordered.front()->mass;
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        result.conflicts.push_back(ds_conflict(result.mass, ordered[i]->mass));
        result.mass = ds_combine(result.mass, ordered[i]->mass);
    }
    return result;
}

RankedList multisensor_rank(const std::vector<SensorReport>& reports) {
    auto fold = fold_masses(reports);
    RankedList out;
    out.method = reports.front().fused.method;
    out.entries.reserve(fold.mass.frame.size());
    for (std::size_t i = 0; i < fold.mass.frame.size(); ++i) {
        out.entries.push_back({fold.mass.frame[i], fold.mass.singleton[i]});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.author < b.author;
              });
    return out;
}

}  // namespace expertfind
