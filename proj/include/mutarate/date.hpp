#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace mutarate {

// Calendar date with ISO-8601 (YYYY-MM-DD) text form.
class Date {
public:
    Date() = default;
    Date(int year, unsigned month, unsigned day);

    static Date parse_iso(std::string_view text);

    int year() const { return static_cast<int>(ymd_.year()); }
    unsigned month() const { return static_cast<unsigned>(ymd_.month()); }
    unsigned day() const { return static_cast<unsigned>(ymd_.day()); }

    std::string iso() const;

    // Signed number of days from `origin` to this date.
    long days_since(const Date& origin) const;
    Date plus_days(long days) const;

    friend bool operator==(const Date&, const Date&) = default;
    friend auto operator<=>(const Date& a, const Date& b) {
        return std::chrono::sys_days{a.ymd_} <=> std::chrono::sys_days{b.ymd_};
    }

private:
    std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::month{1},
                                     std::chrono::day{1}};
};

}  // namespace mutarate
