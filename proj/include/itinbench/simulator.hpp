#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "itinbench/itinerary.hpp"
#include "itinbench/task.hpp"
#include "itinbench/world.hpp"

namespace itinbench {

enum class ItemLevel { L1, L2 };

// Four Level-1 items per action, in this order.
enum class ItemCode {
    entity_exists,
    schedule_match,
    spatial_continuity,
    chronological_order,
    constraint,  // Level-2 items; the constraint kind is carried alongside
};

std::string to_string(ItemCode c);

enum class Taxonomy { CKE, EIM, CNC };

std::string to_string(Taxonomy t);

struct ScoringItem {
    ItemLevel level = ItemLevel::L1;
    int index = 0;  // action index for L1, constraint index for L2
    ItemCode code = ItemCode::entity_exists;
    ConstraintKind constraint_kind = ConstraintKind::budget;  // L2 only
    bool passed = false;
};

struct ErrorEvent {
    ItemLevel level = ItemLevel::L1;
    int index = 0;
    Taxonomy taxonomy = Taxonomy::CKE;
    std::string message;
};

struct SimState {
    std::string city;
    std::string place;
    int clock = 0;  // non-decreasing: running max of action ends
    Money spent = 0;
    std::set<std::pair<std::string, std::string>> visited;  // (city, place)
};

struct Trace {
    std::vector<ScoringItem> items;
    std::vector<ErrorEvent> events;
    SimState final_state;
    Money total_cost = 0;
    int total_minutes = 0;

    int passed(ItemLevel level) const;
    int total(ItemLevel level) const;
    Money objective_value(Objective o) const {
        return o == Objective::cost_cents ? total_cost : total_minutes;
    }
};

/// Walk the itinerary against world and task. Never aborts early: every
/// misstep becomes a failed item plus a taxonomy-tagged event, and the state
/// snaps to the action's declared end so later actions are judged against
/// the intended trajectory.
Trace simulate(const World& world, const Task& task, const Itinerary& it);

/// Full marks on every Level-1 and Level-2 item.
bool trace_fully_valid(const Trace& t);

std::string trace_to_json_text(const Trace& t, const World& w);

}  // namespace itinbench
