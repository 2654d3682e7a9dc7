#include "itinbench/itinerary.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace itinbench {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == ' ' || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

struct LineParser {
    const DateAnchor& anchor;
    int line;
    std::vector<ParseDiagnostic>& diags;
    bool failed = false;

    void error(const std::string& msg) {
        diags.push_back({line, msg});
        failed = true;
    }

    std::string name_arg(const std::string& raw, const char* what) {
        if (!valid_name(raw)) error(std::string(what) + " is not a valid name: \"" + raw + "\"");
        return raw;
    }

    int time_arg(const std::string& raw, const char* what) {
        auto t = parse_abs_minutes(raw, anchor);
        if (!t) {
            error(std::string(what) + " is not a valid \"MM-DD HH:MM\" time: \"" + raw + "\"");
            return 0;
        }
        return *t;
    }
};

}  // namespace

int action_start(const Action& a) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GoToPlace> || std::is_same_v<T, GoToCity>)
                return v.depart;
            else
                return v.begin;
        },
        a);
}

int action_end(const Action& a) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GoToPlace> || std::is_same_v<T, GoToCity>)
                return v.arrive;
            else
                return v.end;
        },
        a);
}

const char* action_name(const Action& a) {
    switch (a.index()) {
        case 0: return "go_to_place";
        case 1: return "visit";
        case 2: return "go_to_city";
        case 3: return "stay_in";
    }
    return "?";
}

ParseResult parse_itinerary(const std::string& text, const DateAnchor& anchor) {
    ParseResult result;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string lineText = trim(raw);
        if (lineText.empty()) continue;
        LineParser p{anchor, line_no, result.diagnostics};

        size_t open = lineText.find('(');
        if (open == std::string::npos || lineText.back() != ')') {
            p.error("expected `name(arg, ...)`");
            continue;
        }
        std::string name = trim(lineText.substr(0, open));
        std::string body = lineText.substr(open + 1, lineText.size() - open - 2);
        std::vector<std::string> args;
        if (!trim(body).empty()) {
            size_t pos = 0;
            while (true) {
                size_t comma = body.find(',', pos);
                if (comma == std::string::npos) {
                    args.push_back(trim(body.substr(pos)));
                    break;
                }
                args.push_back(trim(body.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
        if (body.find('(') != std::string::npos) {
            p.error("arguments may not contain parentheses");
            continue;
        }

        auto arity = [&](size_t want) {
            if (args.size() != want) {
                p.error(name + " takes " + std::to_string(want) + " arguments, got " +
                        std::to_string(args.size()));
                return false;
            }
            return true;
        };

        Action action;
        if (name == "go_to_place") {
            if (!arity(4)) continue;
            GoToPlace a;
            a.origin = p.name_arg(args[0], "origin");
            a.destination = p.name_arg(args[1], "destination");
            a.depart = p.time_arg(args[2], "depart_time");
            a.arrive = p.time_arg(args[3], "arrive_time");
            action = a;
        } else if (name == "visit") {
            if (!arity(3)) continue;
            Visit a;
            a.place = p.name_arg(args[0], "place");
            a.begin = p.time_arg(args[1], "begin_time");
            a.end = p.time_arg(args[2], "end_time");
            action = a;
        } else if (name == "go_to_city") {
            if (!arity(5)) continue;
            GoToCity a;
            a.origin = p.name_arg(args[0], "origin");
            a.destination = p.name_arg(args[1], "destination");
            a.depart = p.time_arg(args[2], "depart_time");
            a.arrive = p.time_arg(args[3], "arrive_time");
            a.ticket = p.name_arg(args[4], "ticket");
            action = a;
        } else if (name == "stay_in") {
            if (!arity(3)) continue;
            StayIn a;
            a.city = p.name_arg(args[0], "city");
            a.begin = p.time_arg(args[1], "begin_time");
            a.end = p.time_arg(args[2], "end_time");
            action = a;
        } else {
            p.error("unknown action: " + name);
            continue;
        }
        if (p.failed) continue;
        if (action_start(action) >= action_end(action)) {
            p.error(std::string(action_name(action)) + " start time must precede end time");
            continue;
        }
        result.itinerary.actions.push_back(std::move(action));
    }
    return result;
}

std::string render_action(const Action& a, const DateAnchor& anchor) {
    auto t = [&](int m) { return render_abs_minutes(m, anchor); };
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GoToPlace>) {
                os << "go_to_place(" << v.origin << ", " << v.destination << ", " << t(v.depart)
                   << ", " << t(v.arrive) << ")";
            } else if constexpr (std::is_same_v<T, Visit>) {
                os << "visit(" << v.place << ", " << t(v.begin) << ", " << t(v.end) << ")";
            } else if constexpr (std::is_same_v<T, GoToCity>) {
                os << "go_to_city(" << v.origin << ", " << v.destination << ", " << t(v.depart)
                   << ", " << t(v.arrive) << ", " << v.ticket << ")";
            } else {
                os << "stay_in(" << v.city << ", " << t(v.begin) << ", " << t(v.end) << ")";
            }
        },
        a);
    return os.str();
}

std::string render_itinerary(const Itinerary& it, const DateAnchor& anchor) {
    std::ostringstream os;
    for (const auto& a : it.actions) os << render_action(a, anchor) << "\n";
    return os.str();
}

ParseResult itinerary_from_json(const std::string& json_text, const DateAnchor& anchor) {
    ParseResult result;
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        result.diagnostics.push_back({0, std::string("JSON parse error: ") + e.what()});
        return result;
    }
    if (!j.is_array()) {
        result.diagnostics.push_back({0, "expected a JSON array of actions"});
        return result;
    }
    // Reuse the text grammar: rebuild each action as a call line. Entry i maps
    // to diagnostic line i+1.
    std::ostringstream text;
    int idx = 0;
    for (const auto& ja : j) {
        ++idx;
        if (!ja.is_object() || !ja.contains("action") || !ja.contains("args") ||
            !ja["args"].is_object()) {
            result.diagnostics.push_back(
                {idx, "expected {\"action\": name, \"args\": {...}} at entry " +
                          std::to_string(idx)});
            return result;
        }
        std::string name = ja["action"].get<std::string>();
        const auto& args = ja["args"];
        auto get = [&](const char* key) { return args.value(key, std::string()); };
        if (name == "go_to_place") {
            text << name << "(" << get("origin") << ", " << get("destination") << ", "
                 << get("depart") << ", " << get("arrive") << ")\n";
        } else if (name == "visit") {
            text << name << "(" << get("place") << ", " << get("begin") << ", " << get("end")
                 << ")\n";
        } else if (name == "go_to_city") {
            text << name << "(" << get("origin") << ", " << get("destination") << ", "
                 << get("depart") << ", " << get("arrive") << ", " << get("ticket") << ")\n";
        } else if (name == "stay_in") {
            text << name << "(" << get("city") << ", " << get("begin") << ", " << get("end")
                 << ")\n";
        } else {
            result.diagnostics.push_back({idx, "unknown action: " + name});
            return result;
        }
    }
    return parse_itinerary(text.str(), anchor);
}

std::string itinerary_to_json(const Itinerary& it, const DateAnchor& anchor) {
    ordered_json arr = ordered_json::array();
    auto t = [&](int m) { return render_abs_minutes(m, anchor); };
    for (const auto& a : it.actions) {
        ordered_json args;
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, GoToPlace>) {
                    args = {{"origin", v.origin},
                            {"destination", v.destination},
                            {"depart", t(v.depart)},
                            {"arrive", t(v.arrive)}};
                } else if constexpr (std::is_same_v<T, Visit>) {
                    args = {{"place", v.place}, {"begin", t(v.begin)}, {"end", t(v.end)}};
                } else if constexpr (std::is_same_v<T, GoToCity>) {
                    args = {{"origin", v.origin},
                            {"destination", v.destination},
                            {"depart", t(v.depart)},
                            {"arrive", t(v.arrive)},
                            {"ticket", v.ticket}};
                } else {
                    args = {{"city", v.city}, {"begin", t(v.begin)}, {"end", t(v.end)}};
                }
            },
            a);
        arr.push_back({{"action", action_name(a)}, {"args", args}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace itinbench
