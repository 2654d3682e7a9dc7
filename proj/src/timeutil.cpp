#include "itinbench/timeutil.hpp"

#include <array>
#include <charconv>

namespace itinbench {

namespace {

constexpr std::array<int, 12> kMonthDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// 1-based day of year, or -1 for invalid dates
int day_of_year(int month, int day) {
    if (month < 1 || month > 12) return -1;
    if (day < 1 || day > kMonthDays[static_cast<size_t>(month - 1)]) return -1;
    int doy = 0;
    for (int m = 1; m < month; ++m) doy += kMonthDays[static_cast<size_t>(m - 1)];
    return doy + day;
}

bool parse2(std::string_view s, size_t pos, int& out) {
    if (pos + 2 > s.size()) return false;
    char a = s[pos], b = s[pos + 1];
    if (a < '0' || a > '9' || b < '0' || b > '9') return false;
    out = (a - '0') * 10 + (b - '0');
    return true;
}

std::string two_digits(int v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

}  // namespace

std::optional<DateAnchor> parse_anchor(std::string_view text) {
    int month = 0, day = 0;
    if (text.size() != 5 || text[2] != '-') return std::nullopt;
    if (!parse2(text, 0, month) || !parse2(text, 3, day)) return std::nullopt;
    if (day_of_year(month, day) < 0) return std::nullopt;
    return DateAnchor{month, day};
}

std::string render_anchor(const DateAnchor& a) {
    return two_digits(a.month) + "-" + two_digits(a.day);
}

std::optional<int> parse_abs_minutes(std::string_view text, const DateAnchor& anchor) {
    // "MM-DD HH:MM"
    if (text.size() != 11 || text[2] != '-' || text[5] != ' ' || text[8] != ':')
        return std::nullopt;
    int month = 0, day = 0, hour = 0, minute = 0;
    if (!parse2(text, 0, month) || !parse2(text, 3, day) || !parse2(text, 6, hour) ||
        !parse2(text, 9, minute))
        return std::nullopt;
    int doy = day_of_year(month, day);
    int doy0 = day_of_year(anchor.month, anchor.day);
    if (doy < 0 || doy0 < 0 || hour > 23 || minute > 59) return std::nullopt;
    if (doy < doy0) return std::nullopt;  // before the anchor date
    return (doy - doy0) * kMinutesPerDay + hour * 60 + minute;
}

std::string render_abs_minutes(int minutes, const DateAnchor& anchor) {
    int days = minutes / kMinutesPerDay;
    int rem = minutes % kMinutesPerDay;
    if (minutes < 0) {
        days = 0;
        rem = 0;
    }
    int doy = day_of_year(anchor.month, anchor.day) + days;
    int month = 1;
    while (month <= 12 && doy > kMonthDays[static_cast<size_t>(month - 1)]) {
        doy -= kMonthDays[static_cast<size_t>(month - 1)];
        ++month;
    }
    return two_digits(month) + "-" + two_digits(doy) + " " + two_digits(rem / 60) + ":" +
           two_digits(rem % 60);
}

std::optional<int> parse_day_minutes(std::string_view text) {
    if (text.size() != 5 || text[2] != ':') return std::nullopt;
    int hour = 0, minute = 0;
    if (!parse2(text, 0, hour) || !parse2(text, 3, minute)) return std::nullopt;
    if (hour > 23 || minute > 59) return std::nullopt;
    return hour * 60 + minute;
}

std::string render_day_minutes(int minutes) {
    return two_digits(minutes / 60) + ":" + two_digits(minutes % 60);
}

std::vector<Interval> expand_daily(const DailyWindow& w, int horizon_end) {
    std::vector<Interval> out;
    int days = horizon_end / kMinutesPerDay + 2;
    for (int d = 0; d <= days; ++d) {
        int base = d * kMinutesPerDay;
        Interval iv;
        if (w.wraps()) {
            iv = {base + w.start, base + kMinutesPerDay + w.end};
        } else {
            iv = {base + w.start, base + w.end};
        }
        if (iv.begin >= horizon_end) break;
        out.push_back(iv);
    }
    return out;
}

}  // namespace itinbench
