#pragma once

#include <string>
#include <variant>
#include <vector>

#include "itinbench/timeutil.hpp"

namespace itinbench {

// The four itinerary actions. Times are minutes since the world anchor.
// start < end is enforced at parse time; everything else is the simulator's
// business.

struct GoToPlace {
    std::string origin;
    std::string destination;
    int depart = 0;
    int arrive = 0;
};

struct Visit {
    std::string place;
    int begin = 0;
    int end = 0;
};

struct GoToCity {
    std::string origin;
    std::string destination;
    int depart = 0;
    int arrive = 0;
    std::string ticket;
};

struct StayIn {
    std::string city;
    int begin = 0;
    int end = 0;
};

using Action = std::variant<GoToPlace, Visit, GoToCity, StayIn>;

int action_start(const Action& a);
int action_end(const Action& a);
const char* action_name(const Action& a);

struct Itinerary {
    std::vector<Action> actions;

    bool operator==(const Itinerary&) const = default;
};

struct ParseDiagnostic {
    int line = 0;  // 1-based; 0 for document-level problems
    std::string message;
};

struct ParseResult {
    Itinerary itinerary;
    std::vector<ParseDiagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

/// One action per non-blank line, call syntax `name(arg, arg, ...)`.
/// Never throws: all problems come back as diagnostics. Arguments may not
/// contain commas or parentheses; names are letters, digits, spaces,
/// underscores, hyphens.
ParseResult parse_itinerary(const std::string& text, const DateAnchor& anchor);

/// Canonical text form; parse(render(it)) == it.
std::string render_itinerary(const Itinerary& it, const DateAnchor& anchor);
std::string render_action(const Action& a, const DateAnchor& anchor);

/// JSON array-of-objects form for machine callers:
///   [{"action": "go_to_city", "args": {"origin": ..., ...}}, ...]
ParseResult itinerary_from_json(const std::string& json_text, const DateAnchor& anchor);
std::string itinerary_to_json(const Itinerary& it, const DateAnchor& anchor);

}  // namespace itinbench
