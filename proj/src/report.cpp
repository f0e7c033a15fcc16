#include "entpower/report.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace entpower {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return {buf, res.ptr};
}

namespace {

constexpr const char* kPowerHeader =
    "gate,d,assisted,method,entropy,value,stderr,samples,seed,runtime_ms";

template <typename T, typename Fmt>
std::string opt_to_string(const std::optional<T>& v, Fmt&& fmt) {
  return v.has_value() ? fmt(*v) : std::string();
}

}  // namespace

void write_power_csv(std::ostream& out, const std::vector<PowerReport>& reports) {
  out << kPowerHeader << '\n';
  for (const auto& r : reports) {
    out << r.gate << ',' << r.d << ',' << (r.assisted ? 1 : 0) << ',' << r.method
        << ',' << r.entropy << ',' << format_double(r.value) << ','
        << opt_to_string(r.std_error, format_double) << ','
        << opt_to_string(r.samples, [](long s) { return std::to_string(s); })
        << ','
        << opt_to_string(r.seed,
                         [](std::uint64_t s) { return std::to_string(s); })
        << ',' << opt_to_string(r.runtime_ms, format_double) << '\n';
  }
}

void write_power_json(std::ostream& out, const std::vector<PowerReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json obj;
    obj["gate"] = r.gate;
    obj["d"] = r.d;
    obj["assisted"] = r.assisted;
    obj["method"] = r.method;
    obj["entropy"] = r.entropy;
    obj["value"] = r.value;
    if (r.std_error) obj["stderr"] = *r.std_error;
    if (r.samples) obj["samples"] = *r.samples;
    if (r.seed) obj["seed"] = *r.seed;
    if (r.runtime_ms) obj["runtime_ms"] = *r.runtime_ms;
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_csv_table(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  for (size_t k = 0; k < header.size(); ++k)
    out << header[k] << (k + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows)
    for (size_t k = 0; k < row.size(); ++k)
      out << row[k] << (k + 1 < row.size() ? "," : "\n");
}

}  // namespace entpower
