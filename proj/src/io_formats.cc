// Copyright 2026 The ortrack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ortrack/io_formats.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "ortrack/errors.h"

namespace ortrack {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, line) for every line, numbering from 1.
template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line =
        nl == std::string_view::npos ? text : text.substr(0, nl);
    ++line_no;
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(Trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

double ParseReal(std::string_view field, std::size_t line_no,
                 std::string_view what) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty() ||
      !std::isfinite(value)) {
    throw ParseError(line_no, "invalid " + std::string(what) + " '" +
                                  std::string(field) + "'");
  }
  return value;
}

// Accepts "3" as well as "3.0", which some MOT exports emit.
int ParseInteger(std::string_view field, std::size_t line_no,
                 std::string_view what) {
  const double value = ParseReal(field, line_no, what);
  if (value != std::floor(value) || std::abs(value) > 1e9) {
    throw ParseError(line_no, std::string(what) + " is not an integer '" +
                                  std::string(field) + "'");
  }
  return static_cast<int>(value);
}

void AppendFormatted(std::string& out, const char* fmt, double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), fmt, v);
  // Avoid emitting "-0.00".
  if (n > 0 && std::string_view(buf, n).find_first_not_of("-0.") ==
                   std::string_view::npos) {
    out += std::string_view(buf, n).substr(buf[0] == '-' ? 1 : 0);
    return;
  }
  out.append(buf, n);
}

std::string WriteMotLines(const std::vector<DetectionRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += std::to_string(r.frame);
    out += ',';
    out += std::to_string(r.id);
    for (double v : {r.box.left, r.box.top, r.box.width, r.box.height,
                     r.conf}) {
      out += ',';
      AppendFormatted(out, "%.2f", v);
    }
    out += ",-1,-1,-1\n";
  }
  return out;
}

}  // namespace

double Iou(const Box& a, const Box& b) {
  const double ix = std::max(0.0, std::min(a.left + a.width, b.left + b.width) -
                                      std::max(a.left, b.left));
  const double iy = std::max(0.0, std::min(a.top + a.height, b.top + b.height) -
                                      std::max(a.top, b.top));
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

const FeatureVector* FeatureTable::Find(int frame, int det_index) const {
  const auto it = entries.find({frame, det_index});
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<DetectionRecord> ParseMot(std::string_view text) {
  std::vector<DetectionRecord> records;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    line = Trim(line);
    if (line.empty()) return;
    const auto fields = SplitCommas(line);
    if (fields.size() < 7) {
      throw ParseError(line_no, "too few fields (" +
                                    std::to_string(fields.size()) +
                                    " < 7)");
    }
    DetectionRecord r;
    r.frame = ParseInteger(fields[0], line_no, "frame");
    r.id = ParseInteger(fields[1], line_no, "id");
    r.box.left = ParseReal(fields[2], line_no, "bb_left");
    r.box.top = ParseReal(fields[3], line_no, "bb_top");
    r.box.width = ParseReal(fields[4], line_no, "bb_width");
    r.box.height = ParseReal(fields[5], line_no, "bb_height");
    r.conf = ParseReal(fields[6], line_no, "conf");
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (r.frame < 1) throw ValidationError(where + "frame must be >= 1");
    if (r.box.width <= 0.0 || r.box.height <= 0.0) {
      throw ValidationError(where + "box dimensions must be positive");
    }
    if (r.conf < 0.0) throw ValidationError(where + "conf must be >= 0");
    records.push_back(r);
  });
  return records;
}

FeatureTable ParseFeatures(std::string_view text) {
  FeatureTable table;
  bool have_header = false;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    line = Trim(line);
    if (line.empty()) return;
    if (!have_header) {
      constexpr std::string_view kPrefix = "# dim=";
      if (!line.starts_with(kPrefix)) {
        throw ParseError(line_no, "missing '# dim=<d>' header");
      }
      table.dim = ParseInteger(Trim(line.substr(kPrefix.size())), line_no,
                               "dim");
      if (table.dim < 1) throw ParseError(line_no, "dim must be positive");
      have_header = true;
      return;
    }
    const auto fields = SplitCommas(line);
    if (fields.size() < 2) throw ParseError(line_no, "too few fields");
    const int frame = ParseInteger(fields[0], line_no, "frame");
    const int det_index = ParseInteger(fields[1], line_no, "det_index");
    if (frame < 1) throw ParseError(line_no, "frame must be >= 1");
    if (det_index < 0) throw ParseError(line_no, "det_index must be >= 0");
    const int length = static_cast<int>(fields.size()) - 2;
    if (length != table.dim) {
      throw ParseError(line_no, "vector length " + std::to_string(length) +
                                    " != dim " + std::to_string(table.dim));
    }
    FeatureVector v(table.dim);
    for (int k = 0; k < table.dim; ++k) {
      v[k] = ParseReal(fields[k + 2], line_no, "feature value");
    }
    if (!table.entries.emplace(FeatureTable::Key{frame, det_index}, v)
             .second) {
      throw ParseError(line_no, "duplicate key (" + std::to_string(frame) +
                                    "," + std::to_string(det_index) + ")");
    }
  });
  if (!have_header) throw ParseError(0, "missing '# dim=<d>' header");
  return table;
}

std::vector<KeypointRecord> ParseKeypoints(std::string_view text) {
  using nlohmann::json;
  std::vector<KeypointRecord> records;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    line = Trim(line);
    if (line.empty()) return;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    try {
      KeypointRecord r;
      r.frame = obj.at("frame").get<int>();
      r.det_index = obj.at("det_index").get<int>();
      const json& kps = obj.at("keypoints");
      if (r.frame < 1) throw ParseError(line_no, "frame must be >= 1");
      if (r.det_index < 0) throw ParseError(line_no, "det_index must be >= 0");
      if (!kps.is_array() || kps.size() != kNumKeypoints) {
        throw ParseError(line_no, "keypoints must hold exactly 18 triples");
      }
      for (int k = 0; k < kNumKeypoints; ++k) {
        const json& t = kps[k];
        if (!t.is_array() || t.size() != 3) {
          throw ParseError(line_no, "keypoint " + std::to_string(k) +
                                        " is not an [x,y,c] triple");
        }
        Keypoint& kp = r.keypoints[k];
        kp.x = t[0].get<double>();
        kp.y = t[1].get<double>();
        kp.c = t[2].get<double>();
        if (!(kp.c >= 0.0 && kp.c <= 1.0)) {
          throw ParseError(line_no, "keypoint " + std::to_string(k) +
                                        " confidence outside [0,1]");
        }
      }
      records.push_back(r);
    } catch (const json::exception& e) {
      throw ParseError(line_no, std::string("bad keypoint record: ") +
                                    e.what());
    }
  });
  return records;
}

std::string WriteTracks(const std::vector<DetectionRecord>& records) {
  for (const auto& r : records) {
    if (r.id < 1) {
      throw ValidationError("track record at frame " +
                            std::to_string(r.frame) + " has id " +
                            std::to_string(r.id) + " < 1");
    }
  }
  return WriteMotLines(records);
}

std::string WriteDetections(const std::vector<DetectionRecord>& records) {
  return WriteMotLines(records);
}

std::string WriteFeatures(const FeatureTable& table) {
  std::string out = "# dim=" + std::to_string(table.dim) + "\n";
  for (const auto& [key, v] : table.entries) {
    out += std::to_string(key.first);
    out += ',';
    out += std::to_string(key.second);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      out += ',';
      AppendFormatted(out, "%.9g", v[k]);
    }
    out += '\n';
  }
  return out;
}

std::string WriteKeypoints(const std::vector<KeypointRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += "{\"frame\":" + std::to_string(r.frame) +
           ",\"det_index\":" + std::to_string(r.det_index) +
           ",\"keypoints\":[";
    for (int k = 0; k < kNumKeypoints; ++k) {
      const Keypoint& kp = r.keypoints[k];
      if (k > 0) out += ',';
      out += '[';
      AppendFormatted(out, "%.3f", kp.x);
      out += ',';
      AppendFormatted(out, "%.3f", kp.y);
      out += ',';
      AppendFormatted(out, "%.3f", kp.c);
      out += ']';
    }
    out += "]}\n";
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace ortrack
