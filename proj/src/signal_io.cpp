#include "qpdt/signal_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qpdt/errors.hpp"

namespace qpdt {

SignalFormat parse_format(std::string_view name) {
  if (name == "csv") {
    return SignalFormat::kCsv;
  }
  if (name == "json") {
    return SignalFormat::kJson;
  }
  throw DomainError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

SignalFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? SignalFormat::kJson : SignalFormat::kCsv;
}

std::string shortest(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) {
    throw IoError("cannot format number");
  }
  return {buf.data(), end};
}

std::string to_csv(const SampledSignal& s) {
  std::string out = "v,re,im\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += shortest(s.grid()[i]);
    out += ',';
    out += shortest(s.values()[i].real());
    out += ',';
    out += shortest(s.values()[i].imag());
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const SampledSignal& s) {
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    samples.push_back({s.grid()[i], s.values()[i].real(), s.values()[i].imag()});
  }
  nlohmann::json domain = nlohmann::json::array();
  if (s.size() > 0) {
    domain = {s.grid().front(), s.grid().back()};
  }
  return {{"meta", {{"mu", s.mu().value()}, {"domain", domain}}}, {"samples", samples}};
}

std::string to_json_text(const SampledSignal& s) {
  nlohmann::json meta = to_json(s)["meta"];
  std::string out = "{\"meta\": " + meta.dump() + ",\n \"samples\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += i == 0 ? "\n  [" : ",\n  [";
    out += nlohmann::json(s.grid()[i]).dump() + ", " + nlohmann::json(s.values()[i].real()).dump() + ", " +
           nlohmann::json(s.values()[i].imag()).dump() + "]";
  }
  out += "\n ]}\n";
  return out;
}

namespace {

double parse_number(std::string_view token, std::size_t line) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
    token.remove_prefix(1);
  }
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
    token.remove_suffix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw IoError("line " + std::to_string(line) + ": cannot parse '" + std::string(token) + "' as a number");
  }
  return value;
}

SampledSignal build(std::vector<double> grid, std::vector<Complex> values, MultiplicityIndex mu) {
  try {
    return {std::move(grid), std::move(values), mu};
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid signal data: ") + e.what());
  }
}

}  // namespace

SampledSignal parse_csv(std::string_view text, MultiplicityIndex mu) {
  std::vector<double> grid;
  std::vector<Complex> values;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      continue;
    }
    if (!header_seen && grid.empty()) {
      header_seen = true;
      if (line.find_first_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ") != std::string_view::npos &&
          line.find("inf") == std::string_view::npos && line.find("nan") == std::string_view::npos) {
        if (line != "v,re,im") {
          throw IoError("line 1: expected header 'v,re,im'");
        }
        continue;
      }
    }
    std::array<double, 3> cols{};
    std::size_t col = 0;
    while (true) {
      const auto comma = line.find(',');
      if (col >= 3) {
        throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
      }
      cols[col++] = parse_number(line.substr(0, comma), line_no);
      if (comma == std::string_view::npos) {
        break;
      }
      line.remove_prefix(comma + 1);
    }
    if (col != 3) {
      throw IoError("line " + std::to_string(line_no) + ": expected 3 columns");
    }
    grid.push_back(cols[0]);
    values.emplace_back(cols[1], cols[2]);
  }
  if (grid.empty()) {
    throw IoError("signal file contains no samples");
  }
  return build(std::move(grid), std::move(values), mu);
}

SampledSignal parse_json(std::string_view text, MultiplicityIndex mu) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array()) {
    throw IoError("JSON signal needs a 'samples' array");
  }
  double tag = mu.value();
  if (doc.contains("meta") && doc["meta"].is_object() && doc["meta"].contains("mu")) {
    if (!doc["meta"]["mu"].is_number()) {
      throw IoError("meta.mu is not a number");
    }
    tag = doc["meta"]["mu"].get<double>();
  }
  std::vector<double> grid;
  std::vector<Complex> values;
  for (const auto& row : doc["samples"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number() || !row[1].is_number() || !row[2].is_number()) {
      throw IoError("each sample must be [v, re, im]");
    }
    grid.push_back(row[0].get<double>());
    values.emplace_back(row[1].get<double>(), row[2].get<double>());
  }
  if (grid.empty()) {
    throw IoError("signal file contains no samples");
  }
  try {
    return build(std::move(grid), std::move(values), MultiplicityIndex{tag});
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid meta.mu: ") + e.what());
  }
}

SampledSignal read_signal(const std::filesystem::path& path, MultiplicityIndex mu,
                          std::optional<SignalFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return format.value_or(format_for(path)) == SignalFormat::kJson ? parse_json(text, mu) : parse_csv(text, mu);
}

void write_signal(const std::filesystem::path& path, const SampledSignal& s, SignalFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << (format == SignalFormat::kJson ? to_json_text(s) : to_csv(s));
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

}  // namespace qpdt
