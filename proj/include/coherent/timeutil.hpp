#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace coherent {

/// Broken-down UTC time.
struct CivilTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;   // 0..23
    int minute = 0;
    int second = 0;
};

CivilTime civil_from_epoch(std::int64_t epoch_sec);
std::int64_t epoch_from_civil(const CivilTime& c);

/// Parses "YYYY-MM-DD HH:MM[:SS]" (space or 'T' separator), UTC.
std::int64_t parse_timestamp(std::string_view text);
std::string format_timestamp(std::int64_t epoch_sec);

int quarter_of(std::int64_t epoch_sec);  // 1..4
int hour_of(std::int64_t epoch_sec);     // 0..23

} // namespace coherent
