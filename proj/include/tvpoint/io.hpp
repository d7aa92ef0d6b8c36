#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "tvpoint/types.hpp"

namespace tvpoint::io {

/**
 * Event files hold one value per line, optionally preceded by a header line
 * `# n=<replicates>` (default n = 1). Other lines starting with '#' and blank
 * lines are ignored.
 *
 *   timestamps: a real in (0, 1] per line
 *   positions:  an integer per line, mapped to (pos - min + 1) / (max - min + 1)
 */
enum class EventFormat { timestamps, positions };

EventFormat parse_format(std::string_view name);

/// Throws IoError when the file cannot be read, InputError when it is ill-formed.
EventSeries read_event_file(const std::filesystem::path& path, EventFormat format);

/// Normalises integer positions onto (0, 1]; order preserving, max maps to 1.
std::vector<double> normalize_positions(const std::vector<std::int64_t>& positions);

/// Writes `# n=<replicates>` then one shortest round-trip time per line.
void write_event_file(const std::filesystem::path& path, const EventSeries& events);

/// Intensity file: {"breakpoints": [0, ..., 1], "levels": [...]}.
StepFunction read_intensity_json(const std::filesystem::path& path);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& contents);

}  // namespace tvpoint::io
