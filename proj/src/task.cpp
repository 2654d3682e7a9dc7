#include "itinbench/task.hpp"

#include <fstream>
#include <sstream>

#include "itinbench/json_io.hpp"

namespace itinbench {

namespace {
using ordered_json = nlohmann::ordered_json;

std::string money_str(Money cents) {
    std::string sign = cents < 0 ? "-" : "";
    Money v = cents < 0 ? -cents : cents;
    std::string frac = std::to_string(v % 100);
    if (frac.size() < 2) frac = "0" + frac;
    return sign + std::to_string(v / 100) + "." + frac;
}
}  // namespace

std::string to_string(Objective o) {
    return o == Objective::cost_cents ? "cost_cents" : "total_minutes";
}

std::optional<Objective> objective_from_string(std::string_view s) {
    if (s == "cost_cents") return Objective::cost_cents;
    if (s == "total_minutes") return Objective::total_minutes;
    return std::nullopt;
}

std::string to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::time_limit: return "time_limit";
        case ConstraintKind::budget: return "budget";
        case ConstraintKind::transportation: return "transportation";
        case ConstraintKind::city_duration: return "city_duration";
        case ConstraintKind::spot_duration: return "spot_duration";
        case ConstraintKind::specific_hotel: return "specific_hotel";
        case ConstraintKind::activity_time: return "activity_time";
        case ConstraintKind::spot_opening_hours: return "spot_opening_hours";
        case ConstraintKind::rest_time: return "rest_time";
    }
    return "?";
}

std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s) {
    for (int k = 0; k <= static_cast<int>(ConstraintKind::rest_time); ++k) {
        auto kind = static_cast<ConstraintKind>(k);
        if (to_string(kind) == s) return kind;
    }
    return std::nullopt;
}

std::string ConstraintInstance::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ConstraintKind::time_limit:
            os << "finish everything within " << limit_minutes << " minutes of departure";
            break;
        case ConstraintKind::budget:
            os << "total spending must not exceed " << money_str(limit_cents);
            break;
        case ConstraintKind::transportation: {
            os << "inter-city tickets must be of class ";
            for (size_t i = 0; i < allowed_ticket_prefixes.size(); ++i)
                os << (i ? " or " : "") << allowed_ticket_prefixes[i];
            break;
        }
        case ConstraintKind::city_duration:
            os << "spend at least " << min_minutes << " minutes in " << city;
            break;
        case ConstraintKind::spot_duration:
            os << "spend at least " << min_minutes << " minutes visiting " << place;
            break;
        case ConstraintKind::specific_hotel:
            os << "spend the nights in " << city << " at " << place;
            break;
        case ConstraintKind::activity_time: {
            os << "activities only between";
            for (const auto& w : windows)
                os << " " << render_day_minutes(w.start) << "-" << render_day_minutes(w.end);
            break;
        }
        case ConstraintKind::spot_opening_hours:
            os << "visit " << place << " only during its opening hours";
            break;
        case ConstraintKind::rest_time: {
            os << "rest (no activities) between";
            for (const auto& w : windows)
                os << " " << render_day_minutes(w.start) << "-" << render_day_minutes(w.end);
            break;
        }
    }
    return os.str();
}

const ConstraintInstance* Task::first_of(ConstraintKind kind) const {
    for (const auto& c : constraints)
        if (c.kind == kind) return &c;
    return nullptr;
}

std::optional<Money> Task::budget_limit() const {
    const auto* c = first_of(ConstraintKind::budget);
    if (!c) return std::nullopt;
    return c->limit_cents;
}

std::vector<std::string> validate_task(const Task& t, const World& w) {
    std::vector<std::string> defects;
    if (t.task_type < 1 || t.task_type > 3)
        defects.push_back("task_type must be 1, 2 or 3");
    const City* sc = w.find_city(t.start.city);
    if (!sc)
        defects.push_back("start city unknown: " + t.start.city);
    else if (!sc->find_place(t.start.place))
        defects.push_back("start place unknown in " + t.start.city + ": " + t.start.place);
    if (t.start.minutes < 0) defects.push_back("start time before the world anchor");
    if (t.horizon_minutes <= 0) defects.push_back("horizon_minutes must be positive");
    if (t.task_type == 1 && !t.spot_targets.empty())
        defects.push_back("type 1 tasks target cities only");
    if (t.task_type == 2) {
        if (!t.city_targets.empty()) defects.push_back("type 2 tasks target attractions only");
        for (const auto& s : t.spot_targets)
            if (s.city != t.start.city)
                defects.push_back("type 2 target outside the start city: " + s.place);
    }
    if (t.task_type == 3 && (t.city_targets.empty() || t.spot_targets.empty()))
        defects.push_back("type 3 tasks need both city and attraction targets");
    for (const auto& ct : t.city_targets) {
        if (!w.find_city(ct.city)) defects.push_back("target city unknown: " + ct.city);
        if (ct.stay_minutes < 0) defects.push_back("negative stay for " + ct.city);
    }
    for (const auto& st : t.spot_targets) {
        const City* c = w.find_city(st.city);
        if (!c) {
            defects.push_back("target city unknown: " + st.city);
            continue;
        }
        const Place* p = c->find_place(st.place);
        if (!p)
            defects.push_back("target place unknown in " + st.city + ": " + st.place);
        else if (p->kind != PlaceKind::attraction)
            defects.push_back("target is not an attraction: " + st.place);
    }
    for (const auto& c : t.constraints) {
        switch (c.kind) {
            case ConstraintKind::budget:
                if (c.limit_cents <= 0) defects.push_back("budget must be positive");
                break;
            case ConstraintKind::time_limit:
                if (c.limit_minutes <= 0 || c.limit_minutes > t.horizon_minutes)
                    defects.push_back("time_limit must be within (0, horizon]");
                break;
            case ConstraintKind::transportation:
                if (c.allowed_ticket_prefixes.empty())
                    defects.push_back("transportation constraint needs allowed prefixes");
                break;
            case ConstraintKind::city_duration:
                if (!w.find_city(c.city))
                    defects.push_back("city_duration on unknown city: " + c.city);
                if (c.min_minutes <= 0) defects.push_back("city_duration needs positive minutes");
                break;
            case ConstraintKind::spot_duration:
            case ConstraintKind::spot_opening_hours:
            case ConstraintKind::specific_hotel: {
                const City* cc = w.find_city(c.city);
                if (!cc)
                    defects.push_back(to_string(c.kind) + " on unknown city: " + c.city);
                else if (!cc->find_place(c.place))
                    defects.push_back(to_string(c.kind) + " on unknown place: " + c.place);
                break;
            }
            case ConstraintKind::activity_time:
            case ConstraintKind::rest_time:
                if (c.windows.empty())
                    defects.push_back(to_string(c.kind) + " needs at least one window");
                break;
        }
    }
    return defects;
}

namespace {

std::vector<DailyWindow> windows_from_json(const ordered_json& j,
                                           std::vector<std::string>& defects,
                                           const std::string& ctx) {
    std::vector<DailyWindow> out;
    for (const auto& jw : j) {
        reject_unknown_fields(jw, {"start", "end"}, ctx, defects);
        auto s = parse_day_minutes(jw.value("start", ""));
        auto e = parse_day_minutes(jw.value("end", ""));
        if (!s || !e) {
            defects.push_back(ctx + ": malformed window time");
            continue;
        }
        out.push_back({*s, *e});
    }
    return out;
}

ordered_json windows_to_json(const std::vector<DailyWindow>& windows) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : windows)
        arr.push_back(
            {{"start", render_day_minutes(w.start)}, {"end", render_day_minutes(w.end)}});
    return arr;
}

ordered_json task_to_json(const Task& t, const World& w, bool include_witness) {
    ordered_json j;
    j["type"] = t.task_type;
    j["start"] = {{"city", t.start.city},
                  {"place", t.start.place},
                  {"datetime", render_abs_minutes(t.start.minutes, w.start_date)}};
    j["horizon_minutes"] = t.horizon_minutes;
    j["objective"] = to_string(t.objective);
    ordered_json targets;
    targets["cities"] = ordered_json::array();
    for (const auto& ct : t.city_targets)
        targets["cities"].push_back({{"city", ct.city}, {"stay_minutes", ct.stay_minutes}});
    targets["attractions"] = ordered_json::array();
    for (const auto& st : t.spot_targets)
        targets["attractions"].push_back(
            {{"city", st.city}, {"place", st.place}, {"visit_minutes", st.visit_minutes}});
    j["targets"] = std::move(targets);
    j["constraints"] = ordered_json::array();
    for (const auto& c : t.constraints) {
        ordered_json jc;
        jc["kind"] = to_string(c.kind);
        switch (c.kind) {
            case ConstraintKind::budget: jc["limit"] = c.limit_cents; break;
            case ConstraintKind::time_limit: jc["limit_minutes"] = c.limit_minutes; break;
            case ConstraintKind::transportation:
                jc["allowed_prefixes"] = c.allowed_ticket_prefixes;
                break;
            case ConstraintKind::city_duration:
                jc["city"] = c.city;
                jc["min_minutes"] = c.min_minutes;
                break;
            case ConstraintKind::spot_duration:
                jc["city"] = c.city;
                jc["place"] = c.place;
                jc["min_minutes"] = c.min_minutes;
                break;
            case ConstraintKind::spot_opening_hours:
                jc["city"] = c.city;
                jc["place"] = c.place;
                break;
            case ConstraintKind::specific_hotel:
                jc["city"] = c.city;
                jc["place"] = c.place;
                break;
            case ConstraintKind::activity_time:
            case ConstraintKind::rest_time: jc["windows"] = windows_to_json(c.windows); break;
        }
        j["constraints"].push_back(std::move(jc));
    }
    j["prose"] = t.prose;
    if (include_witness) {
        j["witness"] = ordered_json::array();
        for (const auto& a : t.witness.actions)
            j["witness"].push_back(render_action(a, w.start_date));
    }
    j["seed"] = t.seed;
    return j;
}

}  // namespace

Task task_from_json_text(const std::string& text, const World& w) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError({std::string("JSON parse error: ") + e.what()});
    }
    std::vector<std::string> defects;
    Task t;
    reject_unknown_fields(
        j, {"type", "start", "horizon_minutes", "objective", "targets", "constraints", "prose",
            "witness", "seed"},
        "task", defects);
    t.task_type = j.value("type", 0);
    if (j.contains("start")) {
        const auto& js = j["start"];
        reject_unknown_fields(js, {"city", "place", "datetime"}, "task.start", defects);
        t.start.city = js.value("city", "");
        t.start.place = js.value("place", "");
        auto m = parse_abs_minutes(js.value("datetime", ""), w.start_date);
        if (!m)
            defects.push_back("task.start: malformed datetime");
        else
            t.start.minutes = *m;
    } else {
        defects.push_back("task: missing start");
    }
    t.horizon_minutes = j.value("horizon_minutes", 0);
    auto obj = objective_from_string(j.value("objective", ""));
    if (!obj)
        defects.push_back("task: objective must be cost_cents or total_minutes");
    else
        t.objective = *obj;
    if (j.contains("targets")) {
        const auto& jt = j["targets"];
        reject_unknown_fields(jt, {"cities", "attractions"}, "task.targets", defects);
        for (const auto& jc : jt.value("cities", ordered_json::array())) {
            reject_unknown_fields(jc, {"city", "stay_minutes"}, "city target", defects);
            t.city_targets.push_back({jc.value("city", ""), jc.value("stay_minutes", 0)});
        }
        for (const auto& js : jt.value("attractions", ordered_json::array())) {
            reject_unknown_fields(js, {"city", "place", "visit_minutes"}, "attraction target",
                                  defects);
            t.spot_targets.push_back(
                {js.value("city", ""), js.value("place", ""), js.value("visit_minutes", 0)});
        }
    }
    for (const auto& jc : j.value("constraints", ordered_json::array())) {
        ConstraintInstance c;
        reject_unknown_fields(jc,
                              {"kind", "limit", "limit_minutes", "city", "place", "min_minutes",
                               "windows", "allowed_prefixes"},
                              "constraint", defects);
        auto kind = constraint_kind_from_string(jc.value("kind", ""));
        if (!kind) {
            defects.push_back("unknown constraint kind: " + jc.value("kind", ""));
            continue;
        }
        c.kind = *kind;
        c.limit_cents = jc.value("limit", 0ll);
        c.limit_minutes = jc.value("limit_minutes", 0);
        c.city = jc.value("city", "");
        c.place = jc.value("place", "");
        c.min_minutes = jc.value("min_minutes", 0);
        if (jc.contains("windows"))
            c.windows = windows_from_json(jc["windows"], defects, "constraint windows");
        if (jc.contains("allowed_prefixes"))
            for (const auto& p : jc["allowed_prefixes"])
                c.allowed_ticket_prefixes.push_back(p.get<std::string>());
        t.constraints.push_back(std::move(c));
    }
    t.prose = j.value("prose", "");
    if (j.contains("witness")) {
        std::ostringstream lines;
        for (const auto& line : j["witness"]) lines << line.get<std::string>() << "\n";
        auto parsed = parse_itinerary(lines.str(), w.start_date);
        for (const auto& d : parsed.diagnostics)
            defects.push_back("witness line " + std::to_string(d.line) + ": " + d.message);
        t.witness = std::move(parsed.itinerary);
    }
    t.seed = j.value("seed", 0ull);
    auto more = validate_task(t, w);
    defects.insert(defects.end(), more.begin(), more.end());
    if (!defects.empty()) throw ValidationError(defects);
    return t;
}

Task load_task(const std::string& path, const World& w) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open task file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return task_from_json_text(ss.str(), w);
}

std::string task_to_json_text(const Task& t, const World& w) {
    return task_to_json(t, w, true).dump(2) + "\n";
}

std::string task_public_json(const Task& t, const World& w) {
    return task_to_json(t, w, false).dump(2) + "\n";
}

void save_task(const Task& t, const World& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError({"cannot write task file: " + path});
    out << task_to_json_text(t, w);
}

}  // namespace itinbench
