// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <string>

#include <json.hpp>

#include "wxkit/core/weather_record.hpp"

namespace wxkit {

/// {"station":{...},"seq":N,"fields":{...}} with null for invalid fields.
/// Numbers are rounded to their payload resolution so output is stable.
nlohmann::ordered_json to_json(const WeatherRecord& r);
WeatherRecord record_from_json(const nlohmann::json& j);

/// Single-line form used by the CLI.
std::string to_json_line(const WeatherRecord& r);

} // namespace wxkit
