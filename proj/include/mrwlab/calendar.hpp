#ifndef MRWLAB_CALENDAR_HPP
#define MRWLAB_CALENDAR_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>

namespace mrwlab {

/// Calendar date (no time zone; exchange local time throughout).
struct Date {
    int year = 0;
    int month = 0; // 1..12
    int day = 0;   // 1..31

    auto operator<=>(const Date&) const = default;

    /// Days since 1970-01-01, for ordering and arithmetic.
    std::int64_t serial() const {
        using namespace std::chrono;
        return sys_days(year_month_day(std::chrono::year(year),
                                       std::chrono::month(unsigned(month)),
                                       std::chrono::day(unsigned(day))))
            .time_since_epoch()
            .count();
    }

    int month_key() const { return year * 12 + (month - 1); }
};

/// Parses "YYYY-MM-DD". Throws ValidationError on malformed input.
Date parse_date(const std::string& s);

/// Parses "HH:MM:SS" into seconds after midnight.
int parse_time_of_day(const std::string& s);

/// Parses "YYYY-MM-DDTHH:MM:SS" (a space separator is also accepted).
struct DateTime {
    Date date;
    int tod_seconds = 0;
};
DateTime parse_datetime(const std::string& s);

std::string format_date(const Date& d);
std::string format_time_of_day(int seconds);
std::string format_datetime(const Date& d, int tod_seconds);

/// "Jan", "Feb", ... for report labels.
std::string month_abbrev(int month);

} // namespace mrwlab

#endif
