// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

namespace wxkit::units {

constexpr double mm_per_inch = 25.4;
constexpr double kph_per_mps = 3.6;

constexpr double fahrenheit_to_celsius(double f) { return (f - 32.0) * 5.0 / 9.0; }
constexpr double celsius_to_fahrenheit(double c) { return c * 9.0 / 5.0 + 32.0; }

constexpr double mps_to_kph(double v) { return v * kph_per_mps; }
constexpr double kph_to_mps(double v) { return v / kph_per_mps; }

} // namespace wxkit::units
