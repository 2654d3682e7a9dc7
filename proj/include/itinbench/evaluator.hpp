#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "itinbench/rational.hpp"
#include "itinbench/simulator.hpp"
#include "itinbench/task.hpp"

namespace itinbench {

/// Three-level gated score. Level weights are 60/20/20; a level scores zero
/// unless every item of the levels below it passed.
struct Score {
    Rational s1;
    Rational s2;
    Rational s3;
    Rational total;
    bool binary = false;  // full Level-1 score, the binary success criterion
    // raw counters, for reports
    int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    double objective_value = 0.0;
};

/// Efficiency band [a, b] = mu +- sigma over valid-itinerary objective values.
/// sigma is the population standard deviation, so a and b are stored as
/// doubles; the evaluator treats them as exact rationals when interpolating.
struct Calibration {
    double a = 0.0;
    double b = 0.0;
    Objective objective = Objective::cost_cents;
    int sample_size = 0;
    std::vector<int64_t> sample_values;  // kept so scores reproduce without re-sampling

    /// Degenerate band: s3 is 0 for any positive objective value.
    static Calibration none(Objective o) { return Calibration{0.0, 0.0, o, 0, {}}; }
};

/// Score a trace. Preconditions: calib.objective == task.objective.
/// Degenerate denominators: B1 = 0 scores s1 = 0; B2 = 0 scores the full 20
/// once Level 1 is complete.
Score evaluate(const Trace& trace, const Task& task, const Calibration& calib);

/// Full score in Level 1 as the success criterion.
bool binary_score(const Score& s);

/// A sampler yields candidate itineraries; index runs 0, 1, 2, ... so
/// deterministic samplers can derive per-candidate seeds.
using ItinerarySampler = std::function<std::optional<Itinerary>(int index)>;

/// Draw n itineraries that fully pass Level 1 and Level 2 (each candidate is
/// re-verified in the simulator; invalid ones are rejected and resampled),
/// then set a = mu - sigma, b = mu + sigma over their objective values.
/// Throws ValidationError when the sampler cannot produce n valid itineraries
/// within max_attempts.
Calibration calibrate(const World& world, const Task& task, const ItinerarySampler& sampler,
                      int n = 50, int max_attempts = 0);

Calibration calibration_from_json_text(const std::string& text);
Calibration load_calibration(const std::string& path);
std::string calibration_to_json_text(const Calibration& c);
void save_calibration(const Calibration& c, const std::string& path);

std::string score_to_json_text(const Score& s);

}  // namespace itinbench
