#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qpdt/signal.hpp"

namespace qpdt {

enum class SignalFormat { kCsv, kJson };

/// "csv" or "json"; throws DomainError otherwise.
SignalFormat parse_format(std::string_view name);

/// .json files are JSON, everything else CSV.
SignalFormat format_for(const std::filesystem::path& path);

/// Shortest decimal text that reads back to exactly x.
std::string shortest(double x);

/// Header `v,re,im`, one sample per line.
std::string to_csv(const SampledSignal& s);

/// {"meta": {"mu": mu, "domain": [lo, hi]}, "samples": [[v, re, im], ...]}
nlohmann::json to_json(const SampledSignal& s);

/// to_json as text with one sample per line.
std::string to_json_text(const SampledSignal& s);

/// Parsers throw IoError on malformed text, non-finite entries or a grid
/// that is not strictly increasing. CSV carries no mu; `mu` is used. JSON
/// uses meta.mu when present.
SampledSignal parse_csv(std::string_view text, MultiplicityIndex mu);
SampledSignal parse_json(std::string_view text, MultiplicityIndex mu);

SampledSignal read_signal(const std::filesystem::path& path, MultiplicityIndex mu,
                          std::optional<SignalFormat> format = std::nullopt);
void write_signal(const std::filesystem::path& path, const SampledSignal& s, SignalFormat format);

}  // namespace qpdt
