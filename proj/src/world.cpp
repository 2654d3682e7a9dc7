#include "itinbench/world.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "itinbench/json_io.hpp"

namespace itinbench {

std::string to_string(PlaceKind k) {
    switch (k) {
        case PlaceKind::attraction: return "attraction";
        case PlaceKind::station: return "station";
        case PlaceKind::hotel: return "hotel";
        case PlaceKind::generic: return "generic";
    }
    return "generic";
}

std::optional<PlaceKind> place_kind_from_string(std::string_view s) {
    if (s == "attraction") return PlaceKind::attraction;
    if (s == "station") return PlaceKind::station;
    if (s == "hotel") return PlaceKind::hotel;
    if (s == "generic") return PlaceKind::generic;
    return std::nullopt;
}

const Place* City::find_place(std::string_view name) const {
    for (const auto& p : places)
        if (p.name == name) return &p;
    return nullptr;
}

const Place* City::start_place() const {
    for (const auto& p : places)
        if (p.is_start) return &p;
    return nullptr;
}

const IntraRoute* City::find_route(std::string_view origin, std::string_view destination,
                                   int duration_minutes) const {
    for (const auto& r : intra_routes) {
        if (r.origin == origin && r.destination == destination &&
            (duration_minutes < 0 || r.duration_minutes == duration_minutes))
            return &r;
    }
    return nullptr;
}

const City* World::find_city(std::string_view name) const {
    for (const auto& c : cities)
        if (c.name == name) return &c;
    return nullptr;
}

const InterCityTrip* World::find_trip(std::string_view ticket_id) const {
    for (const auto& t : inter_trips)
        if (t.ticket_id == ticket_id) return &t;
    return nullptr;
}

ValidationError::ValidationError(std::vector<std::string> defects)
    : std::runtime_error([&defects] {
          std::ostringstream os;
          os << defects.size() << " defect(s):";
          for (const auto& d : defects) os << "\n  - " << d;
          return os.str();
      }()),
      defects_(std::move(defects)) {}

std::vector<std::string> validate_world(const World& w) {
    std::vector<std::string> defects;
    std::set<std::string> city_names;
    for (const auto& c : w.cities) {
        if (!city_names.insert(c.name).second)
            defects.push_back("duplicate city name: " + c.name);
        std::set<std::string> place_names;
        int starts = 0;
        for (const auto& p : c.places) {
            if (!place_names.insert(p.name).second)
                defects.push_back("duplicate place name in " + c.name + ": " + p.name);
            if (p.is_start) ++starts;
            if (p.kind == PlaceKind::attraction) {
                if (p.min_visit_minutes <= 0)
                    defects.push_back("attraction " + p.name + " has min_visit_minutes <= 0");
                int prev_end = -1;
                for (const auto& win : p.opening_windows) {
                    if (win.wraps()) {
                        defects.push_back("attraction " + p.name + " has a wrapping opening window");
                        continue;
                    }
                    if (win.start >= win.end)
                        defects.push_back("attraction " + p.name + " has an empty opening window");
                    if (win.start < prev_end)
                        defects.push_back("attraction " + p.name +
                                          " opening windows overlap or are unsorted");
                    prev_end = win.end;
                }
            }
            if (p.min_visit_minutes < 0)
                defects.push_back("place " + p.name + " has negative min_visit_minutes");
            if (p.visit_price < 0) defects.push_back("place " + p.name + " has negative price");
        }
        if (starts != 1)
            defects.push_back("city " + c.name + " must flag exactly one start place, has " +
                              std::to_string(starts));
        for (const auto& r : c.intra_routes) {
            if (r.origin == r.destination)
                defects.push_back("route in " + c.name + " loops at " + r.origin);
            if (!c.find_place(r.origin))
                defects.push_back("route origin not in " + c.name + ": " + r.origin);
            if (!c.find_place(r.destination))
                defects.push_back("route destination not in " + c.name + ": " + r.destination);
            if (r.duration_minutes < 1)
                defects.push_back("route " + r.origin + "->" + r.destination + " in " + c.name +
                                  " has duration < 1");
            if (r.price < 0)
                defects.push_back("route " + r.origin + "->" + r.destination + " in " + c.name +
                                  " has negative price");
        }
    }
    std::set<std::string> tickets;
    for (const auto& t : w.inter_trips) {
        if (!tickets.insert(t.ticket_id).second)
            defects.push_back("duplicate ticket_id: " + t.ticket_id);
        if (t.depart >= t.arrive)
            defects.push_back("trip " + t.ticket_id + " departs at or after arrival");
        if (t.origin_city == t.dest_city)
            defects.push_back("trip " + t.ticket_id + " loops at " + t.origin_city);
        if (!w.find_city(t.origin_city))
            defects.push_back("trip " + t.ticket_id + " references unknown city " + t.origin_city);
        if (!w.find_city(t.dest_city))
            defects.push_back("trip " + t.ticket_id + " references unknown city " + t.dest_city);
        if (t.price < 0) defects.push_back("trip " + t.ticket_id + " has negative price");
        if (t.depart < 0) defects.push_back("trip " + t.ticket_id + " departs before the anchor");
    }
    return defects;
}

namespace {

using ordered_json = nlohmann::ordered_json;

DailyWindow window_from_json(const ordered_json& j, std::vector<std::string>& defects,
                             const std::string& ctx) {
    DailyWindow w;
    reject_unknown_fields(j, {"open", "close"}, ctx, defects);
    auto open = parse_day_minutes(j.value("open", ""));
    auto close = parse_day_minutes(j.value("close", ""));
    if (!open || !close) {
        defects.push_back(ctx + ": malformed open/close time");
        return w;
    }
    w.start = *open;
    w.end = *close;
    return w;
}

}  // namespace

World world_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError({std::string("JSON parse error: ") + e.what()});
    }
    std::vector<std::string> defects;
    World w;
    reject_unknown_fields(j, {"start_date", "cities", "inter_trips", "seed"}, "world", defects);
    auto anchor = parse_anchor(j.value("start_date", ""));
    if (!anchor) {
        defects.push_back("world: missing or malformed start_date (want \"MM-DD\")");
        throw ValidationError(defects);
    }
    w.start_date = *anchor;
    w.seed = j.value("seed", 0ull);
    for (const auto& jc : j.value("cities", ordered_json::array())) {
        City c;
        reject_unknown_fields(jc, {"name", "places", "intra_routes"}, "city", defects);
        c.name = jc.value("name", "");
        if (c.name.empty()) defects.push_back("city with empty name");
        for (const auto& jp : jc.value("places", ordered_json::array())) {
            Place p;
            reject_unknown_fields(jp,
                                  {"name", "kind", "opening_windows", "min_visit_minutes",
                                   "visit_price", "is_start"},
                                  "place", defects);
            p.name = jp.value("name", "");
            auto kind = place_kind_from_string(jp.value("kind", "generic"));
            if (!kind)
                defects.push_back("place " + p.name + ": unknown kind " + jp.value("kind", ""));
            else
                p.kind = *kind;
            p.min_visit_minutes = jp.value("min_visit_minutes", 0);
            p.visit_price = jp.value("visit_price", 0ll);
            p.is_start = jp.value("is_start", false);
            for (const auto& jw : jp.value("opening_windows", ordered_json::array()))
                p.opening_windows.push_back(window_from_json(jw, defects, "place " + p.name));
            c.places.push_back(std::move(p));
        }
        for (const auto& jr : jc.value("intra_routes", ordered_json::array())) {
            IntraRoute r;
            reject_unknown_fields(jr, {"origin", "destination", "duration_minutes", "price"},
                                  "intra_route", defects);
            r.origin = jr.value("origin", "");
            r.destination = jr.value("destination", "");
            r.duration_minutes = jr.value("duration_minutes", 0);
            r.price = jr.value("price", 0ll);
            c.intra_routes.push_back(std::move(r));
        }
        w.cities.push_back(std::move(c));
    }
    for (const auto& jt : j.value("inter_trips", ordered_json::array())) {
        InterCityTrip t;
        reject_unknown_fields(
            jt, {"ticket_id", "origin_city", "dest_city", "depart", "arrive", "price", "available"},
            "inter_trip", defects);
        t.ticket_id = jt.value("ticket_id", "");
        t.origin_city = jt.value("origin_city", "");
        t.dest_city = jt.value("dest_city", "");
        auto dep = parse_abs_minutes(jt.value("depart", ""), w.start_date);
        auto arr = parse_abs_minutes(jt.value("arrive", ""), w.start_date);
        if (!dep || !arr) {
            defects.push_back("trip " + t.ticket_id + ": malformed depart/arrive time");
        } else {
            t.depart = *dep;
            t.arrive = *arr;
        }
        t.price = jt.value("price", 0ll);
        t.available = jt.value("available", true);
        w.inter_trips.push_back(std::move(t));
    }
    auto more = validate_world(w);
    defects.insert(defects.end(), more.begin(), more.end());
    if (!defects.empty()) throw ValidationError(defects);
    return w;
}

World load_world(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open world file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return world_from_json_text(ss.str());
}

std::string world_to_json_text(const World& w) {
    ordered_json j;
    j["start_date"] = render_anchor(w.start_date);
    j["cities"] = ordered_json::array();
    for (const auto& c : w.cities) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["places"] = ordered_json::array();
        for (const auto& p : c.places) {
            ordered_json jp;
            jp["name"] = p.name;
            jp["kind"] = to_string(p.kind);
            if (!p.opening_windows.empty()) {
                jp["opening_windows"] = ordered_json::array();
                for (const auto& win : p.opening_windows)
                    jp["opening_windows"].push_back({{"open", render_day_minutes(win.start)},
                                                     {"close", render_day_minutes(win.end)}});
            }
            if (p.min_visit_minutes > 0) jp["min_visit_minutes"] = p.min_visit_minutes;
            if (p.visit_price > 0) jp["visit_price"] = p.visit_price;
            if (p.is_start) jp["is_start"] = true;
            jc["places"].push_back(std::move(jp));
        }
        jc["intra_routes"] = ordered_json::array();
        for (const auto& r : c.intra_routes)
            jc["intra_routes"].push_back({{"origin", r.origin},
                                          {"destination", r.destination},
                                          {"duration_minutes", r.duration_minutes},
                                          {"price", r.price}});
        j["cities"].push_back(std::move(jc));
    }
    j["inter_trips"] = ordered_json::array();
    for (const auto& t : w.inter_trips) {
        ordered_json jt;
        jt["ticket_id"] = t.ticket_id;
        jt["origin_city"] = t.origin_city;
        jt["dest_city"] = t.dest_city;
        jt["depart"] = render_abs_minutes(t.depart, w.start_date);
        jt["arrive"] = render_abs_minutes(t.arrive, w.start_date);
        jt["price"] = t.price;
        if (!t.available) jt["available"] = false;
        j["inter_trips"].push_back(std::move(jt));
    }
    j["seed"] = w.seed;
    return j.dump(2) + "\n";
}

void save_world(const World& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError({"cannot write world file: " + path});
    out << world_to_json_text(w);
}

std::vector<InterCityTrip> query_trips(const World& w, const std::string& origin_city,
                                       const std::string& dest_city, int window_begin,
                                       int window_end) {
    if (!w.find_city(origin_city)) throw ValidationError({"unknown city: " + origin_city});
    if (!w.find_city(dest_city)) throw ValidationError({"unknown city: " + dest_city});
    std::vector<InterCityTrip> out;
    for (const auto& t : w.inter_trips) {
        if (t.origin_city == origin_city && t.dest_city == dest_city && t.depart >= window_begin &&
            t.depart <= window_end)
            out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const InterCityTrip& a, const InterCityTrip& b) {
        return a.depart != b.depart ? a.depart < b.depart : a.ticket_id < b.ticket_id;
    });
    return out;
}

Place query_attraction(const World& w, const std::string& city, const std::string& place) {
    const City* c = w.find_city(city);
    if (!c) throw ValidationError({"unknown city: " + city});
    const Place* p = c->find_place(place);
    if (!p) throw ValidationError({"unknown place in " + city + ": " + place});
    if (p->kind != PlaceKind::attraction)
        throw ValidationError({place + " is not an attraction (kind " + to_string(p->kind) + ")"});
    return *p;
}

}  // namespace itinbench
