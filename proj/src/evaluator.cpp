#include "itinbench/evaluator.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "itinbench/json_io.hpp"

namespace itinbench {

namespace {

// s3 per the piecewise efficiency formula, exact on rationals.
Rational level3(const Rational& s, const Rational& a, const Rational& b, const Rational& w3) {
    if (a == b) return s <= a ? w3 : Rational(0);  // degenerate band
    if (s <= a) return w3;
    if (s >= b) return Rational(0);
    return w3 * (Rational(1) - (s - a) / (b - a));
}

}  // namespace

Score evaluate(const Trace& trace, const Task& task, const Calibration& calib) {
    if (calib.objective != task.objective)
        throw ValidationError({"calibration objective " + to_string(calib.objective) +
                               " does not match task objective " + to_string(task.objective)});
    Score score;
    score.a1 = trace.passed(ItemLevel::L1);
    score.b1 = trace.total(ItemLevel::L1);
    score.a2 = trace.passed(ItemLevel::L2);
    score.b2 = trace.total(ItemLevel::L2);

    const Rational w1(60), w2(20), w3(20);
    // an empty plan completes nothing: B1 = 0 scores zero
    score.s1 = score.b1 == 0 ? Rational(0) : w1 * Rational(score.a1, score.b1);
    bool l1_full = score.s1 == w1;
    // vacuously satisfied constraints: B2 = 0 scores the full weight once gated in
    score.s2 = !l1_full ? Rational(0)
               : score.b2 == 0 ? w2
                               : w2 * Rational(score.a2, score.b2);
    bool l2_full = l1_full && score.s2 == w2;

    int64_t objective = trace.objective_value(task.objective);
    score.objective_value = static_cast<double>(objective);
    score.s3 = l2_full ? level3(Rational(objective), Rational::from_double(calib.a),
                                Rational::from_double(calib.b), w3)
                       : Rational(0);
    score.total = score.s1 + score.s2 + score.s3;
    score.binary = l1_full;
    return score;
}

bool binary_score(const Score& s) { return s.s1 == Rational(60); }

Calibration calibrate(const World& world, const Task& task, const ItinerarySampler& sampler,
                      int n, int max_attempts) {
    if (max_attempts <= 0) max_attempts = n * 80 + 100;
    Calibration calib;
    calib.objective = task.objective;
    int attempts = 0;
    while (static_cast<int>(calib.sample_values.size()) < n && attempts < max_attempts) {
        auto candidate = sampler(attempts++);
        if (!candidate) continue;
        Trace trace = simulate(world, task, *candidate);
        if (!trace_fully_valid(trace)) continue;  // only valid itineraries count
        calib.sample_values.push_back(trace.objective_value(task.objective));
    }
    if (static_cast<int>(calib.sample_values.size()) < n)
        throw ValidationError({"calibration infeasible: got " +
                               std::to_string(calib.sample_values.size()) + " of " +
                               std::to_string(n) + " valid itineraries in " +
                               std::to_string(attempts) + " attempts"});
    calib.sample_size = n;
    double mu = 0.0;
    for (int64_t v : calib.sample_values) mu += static_cast<double>(v);
    mu /= static_cast<double>(n);
    double var = 0.0;
    for (int64_t v : calib.sample_values) {
        double d = static_cast<double>(v) - mu;
        var += d * d;
    }
    var /= static_cast<double>(n);  // population standard deviation
    double sigma = std::sqrt(var);
    calib.a = mu - sigma;
    calib.b = mu + sigma;
    return calib;
}

Calibration calibration_from_json_text(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError({std::string("JSON parse error: ") + e.what()});
    }
    std::vector<std::string> defects;
    reject_unknown_fields(j, {"a", "b", "objective", "sample_size", "sample_values"},
                          "calibration", defects);
    Calibration c;
    auto obj = objective_from_string(j.value("objective", ""));
    if (!obj)
        defects.push_back("calibration: objective must be cost_cents or total_minutes");
    else
        c.objective = *obj;
    c.a = j.value("a", 0.0);
    c.b = j.value("b", 0.0);
    c.sample_size = j.value("sample_size", 0);
    for (const auto& v : j.value("sample_values", nlohmann::ordered_json::array()))
        c.sample_values.push_back(v.get<int64_t>());
    if (c.a > c.b) defects.push_back("calibration: a must not exceed b");
    if (!defects.empty()) throw ValidationError(defects);
    return c;
}

Calibration load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open calibration file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return calibration_from_json_text(ss.str());
}

std::string calibration_to_json_text(const Calibration& c) {
    nlohmann::ordered_json j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["objective"] = to_string(c.objective);
    j["sample_size"] = c.sample_size;
    j["sample_values"] = c.sample_values;
    return j.dump(2) + "\n";
}

void save_calibration(const Calibration& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError({"cannot write calibration file: " + path});
    out << calibration_to_json_text(c);
}

std::string score_to_json_text(const Score& s) {
    nlohmann::ordered_json j;
    j["s1"] = s.s1.round2();
    j["s2"] = s.s2.round2();
    j["s3"] = s.s3.round2();
    j["total"] = s.total.round2();
    j["binary"] = s.binary;
    j["a1"] = s.a1;
    j["b1"] = s.b1;
    j["a2"] = s.a2;
    j["b2"] = s.b2;
    j["objective_value"] = s.objective_value;
    return j.dump(2) + "\n";
}

}  // namespace itinbench
