#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itinbench/itinerary.hpp"
#include "itinbench/world.hpp"

namespace itinbench {

enum class Objective { cost_cents, total_minutes };

std::string to_string(Objective o);
std::optional<Objective> objective_from_string(std::string_view s);

enum class ConstraintKind {
    time_limit,
    budget,
    transportation,
    city_duration,
    spot_duration,
    specific_hotel,
    activity_time,
    spot_opening_hours,
    rest_time,
};

std::string to_string(ConstraintKind k);
std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s);

/// One constraint instance; which parameters apply depends on kind.
struct ConstraintInstance {
    ConstraintKind kind = ConstraintKind::budget;
    Money limit_cents = 0;                   // budget
    int limit_minutes = 0;                   // time_limit (from task start)
    std::string city;                        // city_duration / spot_* / specific_hotel
    std::string place;                       // spot_duration / spot_opening_hours / specific_hotel
    int min_minutes = 0;                     // city_duration / spot_duration
    std::vector<DailyWindow> windows;        // activity_time / rest_time
    std::vector<std::string> allowed_ticket_prefixes;  // transportation

    std::string describe() const;
};

struct CityTarget {
    std::string city;
    int stay_minutes = 0;
};

struct SpotTarget {
    std::string city;
    std::string place;
    int visit_minutes = 0;
};

struct TaskStart {
    std::string city;
    std::string place;
    int minutes = 0;  // since world anchor
};

struct Task {
    int task_type = 1;  // 1 inter-city, 2 intra-city, 3 combined
    TaskStart start;
    int horizon_minutes = 0;
    Objective objective = Objective::cost_cents;
    std::vector<CityTarget> city_targets;
    std::vector<SpotTarget> spot_targets;
    std::vector<ConstraintInstance> constraints;
    std::string prose;
    Itinerary witness;  // generator proof of feasibility; hidden from agents
    uint64_t seed = 0;

    int horizon_end() const { return start.minutes + horizon_minutes; }
    const ConstraintInstance* first_of(ConstraintKind kind) const;
    std::optional<Money> budget_limit() const;
};

std::vector<std::string> validate_task(const Task& t, const World& w);

Task task_from_json_text(const std::string& text, const World& w);
Task load_task(const std::string& path, const World& w);
std::string task_to_json_text(const Task& t, const World& w);
void save_task(const Task& t, const World& w, const std::string& path);

/// Task JSON with the witness removed, as shown to agents.
std::string task_public_json(const Task& t, const World& w);

}  // namespace itinbench
