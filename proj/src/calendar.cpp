#include "mrwlab/calendar.hpp"
#include "mrwlab/errors.hpp"

#include <array>
#include <cstdio>

namespace mrwlab {

namespace {

bool valid_date(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr std::array<int, 12> len = {31, 28, 31, 30, 31, 30,
                                                31, 31, 30, 31, 30, 31};
    int n = len[std::size_t(m - 1)];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) n = 29;
    return d <= n;
}

} // namespace

Date parse_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3 ||
        !valid_date(y, m, d))
        throw ValidationError("invalid date '" + s + "'");
    return Date{y, m, d};
}

int parse_time_of_day(const std::string& s) {
    int h = 0, m = 0, sec = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d:%d:%d%c", &h, &m, &sec, &tail) != 3 ||
        h < 0 || h > 23 || m < 0 || m > 59 || sec < 0 || sec > 59)
        throw ValidationError("invalid time of day '" + s + "'");
    return h * 3600 + m * 60 + sec;
}

DateTime parse_datetime(const std::string& s) {
    auto pos = s.find('T');
    if (pos == std::string::npos) pos = s.find(' ');
    if (pos == std::string::npos)
        throw ValidationError("invalid date-time '" + s + "'");
    DateTime dt;
    dt.date = parse_date(s.substr(0, pos));
    dt.tod_seconds = parse_time_of_day(s.substr(pos + 1));
    return dt;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string format_time_of_day(int seconds) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", seconds / 3600,
                  (seconds / 60) % 60, seconds % 60);
    return buf;
}

std::string format_datetime(const Date& d, int tod_seconds) {
    return format_date(d) + "T" + format_time_of_day(tod_seconds);
}

std::string month_abbrev(int month) {
    static constexpr std::array<const char*, 12> names = {
        "Jan", "Feb", "Mar", "Apr", "May", "Jun",
        "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    if (month < 1 || month > 12) throw ValidationError("month out of range");
    return names[std::size_t(month - 1)];
}

} // namespace mrwlab
