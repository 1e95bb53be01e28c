#pragma once

#include "gal/activation.hpp"
#include "gal/battery.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace gal::report {

inline constexpr const char* kVersion = "1.0.0";

/// {"num": "...", "den": "..."} with decimal strings.
nlohmann::json rational(const Rational& q);
/// The double rounded to 9 significant digits; non-finite values become null.
nlohmann::json real(double x);

nlohmann::json meta(const SdpOptions& sdp, uint64_t seed);
nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const GraphSummary& s);
nlohmann::json to_json(const ActivationReport& r);
nlohmann::json to_json(const RosenfeldWitness& w);
nlohmann::json to_json(const HalesReport& h);
nlohmann::json to_json(const ZetaProbe& z);

/// {meta, graphs, checks, series, witnesses, observations}.
nlohmann::json to_json(const BatteryReport& r);

/// Document with the standard top-level sections, all empty.
nlohmann::json document(const SdpOptions& sdp, uint64_t seed);

std::string dump(const nlohmann::json& j);

} // namespace gal::report
