#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itinbench {

constexpr int kMinutesPerDay = 1440;

/// Calendar date of minute 0. All absolute times are integer minutes since
/// this date at 00:00; "MM-DD HH:MM" strings are parsed against it.
/// Fixed 365-day calendar (no year, Feb = 28 days).
struct DateAnchor {
    int month = 7;
    int day = 1;
};

/// Parse "MM-DD" into an anchor. Empty optional on malformed input.
std::optional<DateAnchor> parse_anchor(std::string_view text);
std::string render_anchor(const DateAnchor& a);

/// Parse "MM-DD HH:MM" to minutes since anchor. Rejects malformed strings,
/// invalid dates, and dates before the anchor.
std::optional<int> parse_abs_minutes(std::string_view text, const DateAnchor& anchor);

/// Inverse of parse_abs_minutes; exact round-trip for valid inputs.
std::string render_abs_minutes(int minutes, const DateAnchor& anchor);

/// Parse "HH:MM" to minutes from midnight, [0, 1439].
std::optional<int> parse_day_minutes(std::string_view text);
std::string render_day_minutes(int minutes);

/// A daily window in minutes-from-midnight. start > end means the window
/// wraps past midnight (e.g. 23:00-07:00).
struct DailyWindow {
    int start = 0;
    int end = 0;
    bool wraps() const { return start > end; }
};

struct Interval {
    int begin = 0;
    int end = 0;
};

/// Expand a daily window into absolute intervals covering [0, horizon_end].
std::vector<Interval> expand_daily(const DailyWindow& w, int horizon_end);

inline bool intervals_overlap(const Interval& a, const Interval& b) {
    return a.begin < b.end && b.begin < a.end;
}

inline bool interval_contains(const Interval& outer, const Interval& inner) {
    return outer.begin <= inner.begin && inner.end <= outer.end;
}

}  // namespace itinbench
