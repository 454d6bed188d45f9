#include <fstream>
#include <sstream>
#include <string>

#include "internal.hpp"
#include "isolab/error.hpp"

namespace isolab {

namespace {

using nlohmann::ordered_json;

std::string frequency_text(const Frequency& f) {
  return std::to_string(f.successes) + "/" + std::to_string(f.trials);
}

ordered_json to_json(const ExperimentResult& r) {
  ordered_json out;
  out["schema"] = r.schema;
  out["version"] = r.version;
  out["kind"] = to_string(r.kind);
  out["config"] = r.config;
  auto freqs = ordered_json::array();
  for (const auto& f : r.frequencies) {
    freqs.push_back(ordered_json{{"name", f.name},
                                 {"successes", f.successes},
                                 {"trials", f.trials},
                                 {"frequency", frequency_text(f)}});
  }
  out["frequencies"] = std::move(freqs);
  auto sums = ordered_json::array();
  for (const auto& s : r.summaries) {
    sums.push_back(ordered_json{{"name", s.name}, {"count", s.count}, {"min", s.min}, {"max", s.max}, {"mean", s.mean}});
  }
  out["summaries"] = std::move(sums);
  out["records"] = r.records;
  out["wall_clock_seconds"] = r.wall_clock_seconds;
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return detail::format_double(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ' ';
      out += scalar_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

std::string cell_text(const ordered_json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += scalar_text(v[i]);
  }
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string emit(const ExperimentResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(result).dump(2) + "\n";

  std::ostringstream out;
  const std::string kind = to_string(result.kind);
  out << "kind,metric,type,successes,trials,frequency,count,min,max,mean\n";
  for (const auto& f : result.frequencies) {
    out << kind << ',' << csv_field(f.name) << ",frequency," << f.successes << ',' << f.trials << ','
        << frequency_text(f) << ",,,,\n";
  }
  for (const auto& s : result.summaries) {
    out << kind << ',' << csv_field(s.name) << ",summary,,,," << s.count << ',' << detail::format_double(s.min)
        << ',' << detail::format_double(s.max) << ',' << detail::format_double(s.mean) << '\n';
  }
  return out.str();
}

std::string emit_records_csv(const ExperimentResult& result) {
  std::ostringstream out;
  if (result.records.empty()) return "";
  std::vector<std::string> columns;
  for (const auto& [key, value] : result.records.front().items()) columns.push_back(key);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
  out << '\n';
  for (const auto& rec : result.records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = rec.find(columns[i]);
      out << (i ? "," : "") << (it == rec.end() ? "" : csv_field(cell_text(*it)));
    }
    out << '\n';
  }
  return out.str();
}

ExperimentResult parse_result_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed result JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kResultSchema) {
    throw ConfigError("result JSON does not carry schema " + std::string(kResultSchema));
  }
  try {
    ExperimentResult r;
    r.schema = j.at("schema").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.kind = parse_experiment_kind(j.at("kind").get<std::string>());
    r.config = j.at("config");
    for (const auto& f : j.at("frequencies")) {
      r.frequencies.push_back(
          {f.at("name").get<std::string>(), f.at("successes").get<std::uint64_t>(), f.at("trials").get<std::uint64_t>()});
    }
    for (const auto& s : j.at("summaries")) {
      r.summaries.push_back({s.at("name").get<std::string>(), s.at("count").get<std::uint64_t>(),
                             s.at("min").get<double>(), s.at("max").get<double>(), s.at("mean").get<double>()});
    }
    for (const auto& rec : j.at("records")) r.records.push_back(rec);
    r.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("result JSON is missing fields: ") + e.what());
  }
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace isolab
