#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itinbench/timeutil.hpp"

namespace itinbench {

using Money = int64_t;  // integer cents, always

enum class PlaceKind { attraction, station, hotel, generic };

std::string to_string(PlaceKind k);
std::optional<PlaceKind> place_kind_from_string(std::string_view s);

struct Place {
    std::string name;
    PlaceKind kind = PlaceKind::generic;
    std::vector<DailyWindow> opening_windows;  // attractions only, sorted, disjoint
    int min_visit_minutes = 0;
    Money visit_price = 0;
    bool is_start = false;
};

struct IntraRoute {
    std::string origin;
    std::string destination;
    int duration_minutes = 0;
    Money price = 0;
};

struct City {
    std::string name;
    std::vector<Place> places;
    std::vector<IntraRoute> intra_routes;

    const Place* find_place(std::string_view name) const;
    const Place* start_place() const;
    /// First route origin->destination with the given duration; any duration if < 0.
    const IntraRoute* find_route(std::string_view origin, std::string_view destination,
                                 int duration_minutes = -1) const;
};

struct InterCityTrip {
    std::string ticket_id;
    std::string origin_city;
    std::string dest_city;
    int depart = 0;  // minutes since world anchor
    int arrive = 0;
    Money price = 0;
    bool available = true;  // sold-out tickets still appear in queries
};

struct World {
    DateAnchor start_date;
    std::vector<City> cities;
    std::vector<InterCityTrip> inter_trips;
    uint64_t seed = 0;  // 0 for hand-authored worlds

    const City* find_city(std::string_view name) const;
    const InterCityTrip* find_trip(std::string_view ticket_id) const;
};

/// Thrown on malformed world/task files: carries one message per defect.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> defects);
    const std::vector<std::string>& defects() const { return defects_; }

private:
    std::vector<std::string> defects_;
};

/// Returns every invariant violation in the world (empty when valid).
std::vector<std::string> validate_world(const World& w);

World load_world(const std::string& path);
World world_from_json_text(const std::string& text);
std::string world_to_json_text(const World& w);
void save_world(const World& w, const std::string& path);

/// Trips origin->dest departing within [window_begin, window_end], inclusive,
/// sorted by (depart, ticket_id). Throws ValidationError on unknown cities.
std::vector<InterCityTrip> query_trips(const World& w, const std::string& origin_city,
                                       const std::string& dest_city, int window_begin,
                                       int window_end);

/// Attraction lookup; throws ValidationError on unknown names or kind mismatch.
/// Matching is exact and case-sensitive.
Place query_attraction(const World& w, const std::string& city, const std::string& place);

}  // namespace itinbench
