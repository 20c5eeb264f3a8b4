#pragma once

namespace rislink {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kEarthRadius = 6371.0e3;      // m, mean radius

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

inline constexpr double wavelength(double frequency_hz) { return kSpeedOfLight / frequency_hz; }
inline constexpr double wave_number(double lambda_m) { return kTwoPi / lambda_m; }

}  // namespace rislink
