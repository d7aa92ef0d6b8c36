#include "tvpoint/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tvpoint/error.hpp"

namespace tvpoint::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, const std::filesystem::path& path, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(fmt::format("{}:{}: cannot parse '{}'", path.string(), line, text));
  }
  return value;
}

}  // namespace

EventFormat parse_format(std::string_view name) {
  if (name == "timestamps") return EventFormat::timestamps;
  if (name == "positions") return EventFormat::positions;
  throw ConfigError(fmt::format("unknown event format '{}'", name));
}

std::vector<double> normalize_positions(const std::vector<std::int64_t>& positions) {
  if (positions.empty()) return {};
  const auto [lo, hi] = std::minmax_element(positions.begin(), positions.end());
  const double span = static_cast<double>(*hi - *lo) + 1.0;
  std::vector<double> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back((static_cast<double>(p - *lo) + 1.0) / span);
  return out;
}

EventSeries read_event_file(const std::filesystem::path& path, EventFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open event file '{}'", path.string()));

  std::int64_t replicates = 1;
  std::vector<double> times;
  std::vector<std::int64_t> positions;
  std::string raw;
  std::size_t line = 0;
  bool seen_data = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const auto body = trim(text.substr(1));
      if (!seen_data && body.starts_with("n=")) {
        replicates = parse_number<std::int64_t>(trim(body.substr(2)), path, line);
        if (replicates < 1) {
          throw InputError(fmt::format("{}:{}: replicate count must be >= 1", path.string(), line));
        }
      }
      continue;
    }
    seen_data = true;
    if (format == EventFormat::timestamps) {
      const double t = parse_number<double>(text, path, line);
      if (!(t > 0.0 && t <= 1.0)) {
        throw InputError(fmt::format("{}:{}: timestamp {} is outside (0, 1]", path.string(), line, t));
      }
      times.push_back(t);
    } else {
      positions.push_back(parse_number<std::int64_t>(text, path, line));
    }
  }
  if (in.bad()) throw IoError(fmt::format("error while reading '{}'", path.string()));
  if (format == EventFormat::positions) times = normalize_positions(positions);
  return EventSeries(std::move(times), replicates);
}

void write_text(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << contents;
  out.flush();
  if (!out) throw IoError(fmt::format("error while writing '{}'", path.string()));
}

void write_event_file(const std::filesystem::path& path, const EventSeries& events) {
  std::string text = fmt::format("# n={}\n", events.replicates());
  for (double t : events.times()) fmt::format_to(std::back_inserter(text), "{}\n", t);
  write_text(path, text);
}

StepFunction read_intensity_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open intensity file '{}'", path.string()));
  try {
    const auto doc = nlohmann::json::parse(in);
    return StepFunction(doc.at("breakpoints").get<std::vector<double>>(),
                        doc.at("levels").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("bad intensity file '{}': {}", path.string(), e.what()));
  } catch (const InputError& e) {
    throw ConfigError(fmt::format("bad intensity file '{}': {}", path.string(), e.what()));
  } catch (const DimensionError& e) {
    throw ConfigError(fmt::format("bad intensity file '{}': {}", path.string(), e.what()));
  }
}

}  // namespace tvpoint::io
