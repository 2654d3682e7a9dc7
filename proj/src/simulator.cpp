#include "itinbench/simulator.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace itinbench {

std::string to_string(ItemCode c) {
    switch (c) {
        case ItemCode::entity_exists: return "entity_exists";
        case ItemCode::schedule_match: return "schedule_match";
        case ItemCode::spatial_continuity: return "spatial_continuity";
        case ItemCode::chronological_order: return "chronological_order";
        case ItemCode::constraint: return "constraint";
    }
    return "?";
}

std::string to_string(Taxonomy t) {
    switch (t) {
        case Taxonomy::CKE: return "CKE";
        case Taxonomy::EIM: return "EIM";
        case Taxonomy::CNC: return "CNC";
    }
    return "?";
}

int Trace::passed(ItemLevel level) const {
    int n = 0;
    for (const auto& i : items)
        if (i.level == level && i.passed) ++n;
    return n;
}

int Trace::total(ItemLevel level) const {
    int n = 0;
    for (const auto& i : items)
        if (i.level == level) ++n;
    return n;
}

bool trace_fully_valid(const Trace& t) {
    return std::all_of(t.items.begin(), t.items.end(),
                       [](const ScoringItem& i) { return i.passed; });
}

namespace {

struct PositionSegment {
    int begin = 0;
    int end = 0;
    std::string city;  // empty while in transit between cities
    std::string place;
};

struct VisitRecord {
    std::string city;
    std::string place;
    int begin = 0;
    int end = 0;
    const Place* record = nullptr;
};

struct Walk {
    const World& world;
    const Task& task;
    SimState state;
    std::vector<PositionSegment> segments;
    int seg_start = 0;
    std::vector<VisitRecord> visits;
    std::vector<Interval> activity_intervals;  // all non-stay actions

    explicit Walk(const World& w, const Task& t) : world(w), task(t) {
        state.city = t.start.city;
        state.place = t.start.place;
        state.clock = t.start.minutes;
        seg_start = t.start.minutes;
    }

    // close the current position segment at `at` and start a new one
    void move_position(int at, const std::string& city, const std::string& place,
                       int resume_at = -1) {
        at = std::max(at, seg_start);
        if (at > seg_start) segments.push_back({seg_start, at, state.city, state.place});
        if (resume_at >= 0 && resume_at > at) {
            segments.push_back({at, resume_at, "", ""});  // in transit
            at = resume_at;
        }
        seg_start = at;
        state.city = city;
        state.place = place;
    }

    void finish(int horizon_end) {
        int end = std::max({seg_start, state.clock, horizon_end});
        segments.push_back({seg_start, end, state.city, state.place});
    }
};

struct L1Checks {
    bool entity = true;
    bool schedule = true;
    bool spatial = true;
    bool chrono = true;
    std::string entity_msg, schedule_msg, spatial_msg, chrono_msg;
};

void emit_l1(Trace& trace, int action_index, const L1Checks& c) {
    struct Row {
        ItemCode code;
        bool passed;
        const std::string& msg;
        Taxonomy tax;
    };
    const Row rows[] = {
        {ItemCode::entity_exists, c.entity, c.entity_msg, Taxonomy::EIM},
        {ItemCode::schedule_match, c.schedule, c.schedule_msg, Taxonomy::EIM},
        {ItemCode::spatial_continuity, c.spatial, c.spatial_msg, Taxonomy::CKE},
        {ItemCode::chronological_order, c.chrono, c.chrono_msg, Taxonomy::CKE},
    };
    for (const auto& r : rows) {
        trace.items.push_back({ItemLevel::L1, action_index, r.code, ConstraintKind::budget,
                               r.passed});
        if (!r.passed) trace.events.push_back({ItemLevel::L1, action_index, r.tax, r.msg});
    }
}

int sum_presence(const std::vector<PositionSegment>& segments, const std::string& city) {
    int total = 0;
    for (const auto& s : segments)
        if (s.city == city) total += s.end - s.begin;
    return total;
}

bool inside_some(const Interval& iv, const std::vector<Interval>& allowed) {
    return std::any_of(allowed.begin(), allowed.end(),
                       [&](const Interval& a) { return interval_contains(a, iv); });
}

bool overlaps_some(const Interval& iv, const std::vector<Interval>& blocked) {
    return std::any_of(blocked.begin(), blocked.end(),
                       [&](const Interval& b) { return intervals_overlap(b, iv); });
}

std::vector<Interval> expand_all(const std::vector<DailyWindow>& windows, int horizon_end) {
    std::vector<Interval> out;
    for (const auto& w : windows) {
        auto ivs = expand_daily(w, horizon_end);
        out.insert(out.end(), ivs.begin(), ivs.end());
    }
    return out;
}

const PositionSegment* position_at(const std::vector<PositionSegment>& segments, int t) {
    for (const auto& s : segments)
        if (s.begin <= t && t < s.end) return &s;
    if (!segments.empty() && t >= segments.back().end) return &segments.back();
    return nullptr;
}

bool check_constraint(const ConstraintInstance& c, const Task& task, const Itinerary& it,
                      const Walk& walk, const Trace& trace, std::string& msg) {
    const int horizon_end = task.horizon_end();
    switch (c.kind) {
        case ConstraintKind::budget:
            if (trace.total_cost <= c.limit_cents) return true;
            msg = "spent " + std::to_string(trace.total_cost) + " cents against a budget of " +
                  std::to_string(c.limit_cents);
            return false;
        case ConstraintKind::time_limit:
            if (trace.total_minutes <= c.limit_minutes) return true;
            msg = "finished after " + std::to_string(trace.total_minutes) +
                  " minutes, limit was " + std::to_string(c.limit_minutes);
            return false;
        case ConstraintKind::transportation: {
            // check the ticket string itself; whether it exists is Level 1's job
            for (const auto& action : it.actions) {
                const auto* go = std::get_if<GoToCity>(&action);
                if (!go) continue;
                bool ok = std::any_of(
                    c.allowed_ticket_prefixes.begin(), c.allowed_ticket_prefixes.end(),
                    [&](const std::string& pre) { return go->ticket.rfind(pre, 0) == 0; });
                if (!ok) {
                    msg = "ticket " + go->ticket + " is not an allowed transportation class";
                    return false;
                }
            }
            return true;
        }
        case ConstraintKind::city_duration: {
            int presence = sum_presence(walk.segments, c.city);
            if (presence >= c.min_minutes) return true;
            msg = "spent " + std::to_string(presence) + " of the required " +
                  std::to_string(c.min_minutes) + " minutes in " + c.city;
            return false;
        }
        case ConstraintKind::spot_duration: {
            int total = 0;
            for (const auto& v : walk.visits) {
                if (v.city != c.city || v.place != c.place) continue;
                total += v.end - v.begin;
                if (v.record && v.end - v.begin < v.record->min_visit_minutes) {
                    msg = "a visit to " + c.place + " was shorter than its minimum of " +
                          std::to_string(v.record->min_visit_minutes) + " minutes";
                    return false;
                }
            }
            if (total >= c.min_minutes) return true;
            msg = "visited " + c.place + " for " + std::to_string(total) + " of the required " +
                  std::to_string(c.min_minutes) + " minutes";
            return false;
        }
        case ConstraintKind::spot_opening_hours: {
            for (const auto& v : walk.visits) {
                if (v.city != c.city || v.place != c.place || !v.record) continue;
                auto open = expand_all(v.record->opening_windows, horizon_end);
                if (!inside_some({v.begin, v.end}, open)) {
                    msg = "a visit to " + c.place + " falls outside its opening hours";
                    return false;
                }
            }
            return true;
        }
        case ConstraintKind::activity_time: {
            auto allowed = expand_all(c.windows, horizon_end);
            for (const auto& iv : walk.activity_intervals) {
                if (!inside_some(iv, allowed)) {
                    msg = "an action falls outside the allowed activity hours";
                    return false;
                }
            }
            return true;
        }
        case ConstraintKind::rest_time: {
            auto blocked = expand_all(c.windows, horizon_end);
            for (const auto& iv : walk.activity_intervals) {
                if (overlaps_some(iv, blocked)) {
                    msg = "an action overlaps a mandatory rest window";
                    return false;
                }
            }
            return true;
        }
        case ConstraintKind::specific_hotel: {
            // nightly check at the first rest window's start (23:00 if none)
            int check_minute = 23 * 60;
            if (const auto* rest = task.first_of(ConstraintKind::rest_time);
                rest && !rest->windows.empty())
                check_minute = rest->windows.front().start;
            int nights = 0;
            for (int day = task.start.minutes / kMinutesPerDay;
                 day <= horizon_end / kMinutesPerDay; ++day) {
                int t = day * kMinutesPerDay + check_minute;
                if (t < task.start.minutes || t > horizon_end) continue;
                const auto* seg = position_at(walk.segments, t);
                if (!seg || seg->city != c.city) continue;
                ++nights;
                if (seg->place != c.place) {
                    msg = "night in " + c.city + " not spent at " + c.place;
                    return false;
                }
            }
            if (nights == 0) {
                msg = "never stayed overnight in " + c.city;
                return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

Trace simulate(const World& world, const Task& task, const Itinerary& it) {
    Trace trace;
    Walk walk(world, task);
    SimState& st = walk.state;

    for (size_t ai = 0; ai < it.actions.size(); ++ai) {
        const Action& action = it.actions[ai];
        L1Checks c;
        c.chrono = action_start(action) >= st.clock;
        if (!c.chrono)
            c.chrono_msg = std::string(action_name(action)) + " starts before the previous action ends";

        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, GoToCity>) {
                    const auto* origin = world.find_city(a.origin);
                    const auto* dest = world.find_city(a.destination);
                    const auto* trip = world.find_trip(a.ticket);
                    if (!origin)
                        c.entity = false, c.entity_msg = "unknown city: " + a.origin;
                    else if (!dest)
                        c.entity = false, c.entity_msg = "unknown city: " + a.destination;
                    else if (!trip)
                        c.entity = false, c.entity_msg = "unknown ticket: " + a.ticket;
                    else if (!trip->available)
                        c.entity = false, c.entity_msg = "ticket " + a.ticket + " is sold out";
                    if (!trip) {
                        c.schedule = false;
                        c.schedule_msg = "no ticket record to match for " + a.ticket;
                    } else if (trip->origin_city != a.origin || trip->dest_city != a.destination ||
                               trip->depart != a.depart || trip->arrive != a.arrive) {
                        c.schedule = false;
                        c.schedule_msg = "ticket " + a.ticket +
                                         " does not match the action's endpoints and times";
                    }
                    c.spatial = a.origin == st.city;
                    if (!c.spatial)
                        c.spatial_msg = "go_to_city departs from " + a.origin +
                                        " but the traveler is in " + st.city;
                    if (trip && trip->available) st.spent += trip->price;
                    std::string arrive_place;
                    if (dest)
                        if (const auto* sp = dest->start_place()) arrive_place = sp->name;
                    walk.move_position(a.depart, a.destination, arrive_place, a.arrive);
                    walk.activity_intervals.push_back({a.depart, a.arrive});
                } else if constexpr (std::is_same_v<T, GoToPlace>) {
                    const auto* city = world.find_city(st.city);
                    const Place* origin = city ? city->find_place(a.origin) : nullptr;
                    const Place* dest = city ? city->find_place(a.destination) : nullptr;
                    const IntraRoute* route =
                        city ? city->find_route(a.origin, a.destination) : nullptr;
                    if (!city)
                        c.entity = false, c.entity_msg = "traveler is in no known city";
                    else if (!origin)
                        c.entity = false,
                        c.entity_msg = "no place " + a.origin + " in " + st.city;
                    else if (!dest)
                        c.entity = false,
                        c.entity_msg = "no place " + a.destination + " in " + st.city;
                    else if (!route)
                        c.entity = false, c.entity_msg = "no route " + a.origin + " -> " +
                                                         a.destination + " in " + st.city;
                    const IntraRoute* timed =
                        city ? city->find_route(a.origin, a.destination, a.arrive - a.depart)
                             : nullptr;
                    if (!timed) {
                        c.schedule = false;
                        c.schedule_msg = "no route " + a.origin + " -> " + a.destination +
                                         " takes " + std::to_string(a.arrive - a.depart) +
                                         " minutes";
                    }
                    c.spatial = a.origin == st.place;
                    if (!c.spatial)
                        c.spatial_msg = "go_to_place departs from " + a.origin +
                                        " but the traveler is at " + st.place;
                    if (const IntraRoute* taken = timed ? timed : route) st.spent += taken->price;
                    walk.move_position(a.depart, st.city, a.destination, a.arrive);
                    walk.activity_intervals.push_back({a.depart, a.arrive});
                } else if constexpr (std::is_same_v<T, Visit>) {
                    const auto* city = world.find_city(st.city);
                    const Place* p = city ? city->find_place(a.place) : nullptr;
                    if (!city)
                        c.entity = false, c.entity_msg = "traveler is in no known city";
                    else if (!p)
                        c.entity = false, c.entity_msg = "no place " + a.place + " in " + st.city;
                    else if (p->kind != PlaceKind::attraction) {
                        c.entity = false;
                        c.entity_msg = a.place + " is not an attraction";
                        p = nullptr;
                    }
                    c.spatial = a.place == st.place;
                    if (!c.spatial)
                        c.spatial_msg = "visiting " + a.place + " but the traveler is at " +
                                        st.place;
                    if (p) {
                        st.spent += p->visit_price;
                        st.visited.insert({st.city, a.place});
                    }
                    walk.visits.push_back({st.city, a.place, a.begin, a.end, p});
                    if (a.place != st.place) walk.move_position(a.begin, st.city, a.place);
                    walk.activity_intervals.push_back({a.begin, a.end});
                } else {  // StayIn
                    const auto* city = world.find_city(a.city);
                    if (!city) c.entity = false, c.entity_msg = "unknown city: " + a.city;
                    c.spatial = a.city == st.city;
                    if (!c.spatial)
                        c.spatial_msg = "stay_in " + a.city + " but the traveler is in " + st.city;
                    if (a.city != st.city) {
                        std::string place;
                        if (city)
                            if (const auto* sp = city->start_place()) place = sp->name;
                        walk.move_position(a.begin, a.city, place);
                    }
                    // staying is not an activity; the traveler keeps their place
                }
            },
            action);

        st.clock = std::max(st.clock, action_end(action));
        emit_l1(trace, static_cast<int>(ai), c);
    }

    walk.finish(task.horizon_end());
    trace.total_cost = st.spent;
    trace.total_minutes = st.clock - task.start.minutes;

    for (size_t ci = 0; ci < task.constraints.size(); ++ci) {
        const auto& cons = task.constraints[ci];
        std::string msg;
        bool passed = check_constraint(cons, task, it, walk, trace, msg);
        trace.items.push_back(
            {ItemLevel::L2, static_cast<int>(ci), ItemCode::constraint, cons.kind, passed});
        if (!passed)
            trace.events.push_back({ItemLevel::L2, static_cast<int>(ci), Taxonomy::CNC,
                                    to_string(cons.kind) + ": " + msg});
    }

    trace.final_state = st;
    return trace;
}

std::string trace_to_json_text(const Trace& t, const World& w) {
    nlohmann::ordered_json j;
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& i : t.items) {
        nlohmann::ordered_json ji;
        ji["level"] = i.level == ItemLevel::L1 ? "L1" : "L2";
        ji["index"] = i.index;
        ji["code"] = i.level == ItemLevel::L1 ? to_string(i.code) : to_string(i.constraint_kind);
        ji["passed"] = i.passed;
        j["items"].push_back(std::move(ji));
    }
    j["events"] = nlohmann::ordered_json::array();
    for (const auto& e : t.events)
        j["events"].push_back({{"level", e.level == ItemLevel::L1 ? "L1" : "L2"},
                               {"index", e.index},
                               {"taxonomy", to_string(e.taxonomy)},
                               {"message", e.message}});
    j["final_state"] = {{"city", t.final_state.city},
                        {"place", t.final_state.place},
                        {"clock", render_abs_minutes(t.final_state.clock, w.start_date)},
                        {"spent", t.final_state.spent}};
    nlohmann::ordered_json visited = nlohmann::ordered_json::array();
    for (const auto& [city, place] : t.final_state.visited)
        visited.push_back({city, place});
    j["final_state"]["visited"] = std::move(visited);
    j["total_cost"] = t.total_cost;
    j["total_minutes"] = t.total_minutes;
    return j.dump(2) + "\n";
}

}  // namespace itinbench
