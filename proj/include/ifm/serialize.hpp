#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ifm/network.hpp"

namespace ifm {

/// Number formatting used by every CLI document: 12 significant digits,
/// shortest form, so golden files stay byte stable.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// NetworkSpec <-> JSON
// ---------------------------------------------------------------------------

inline nlohmann::json network_to_json(const NetworkSpec& spec) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& element : spec.elements) {
    std::visit(detail::Overloaded{
                   [&](const BeamSplitterElement& e) {
                     elements.push_back({{"kind", "beam_splitter"},
                                         {"mode_a", e.mode_a},
                                         {"mode_b", e.mode_b},
                                         {"transmission", e.transmission}});
                   },
                   [&](const PhaseElement& e) {
                     elements.push_back({{"kind", "phase"}, {"mode", e.mode}, {"phase", e.phase}});
                   },
                   [&](const AbsorberElement& e) {
                     elements.push_back({{"kind", "absorber"},
                                         {"mode", e.mode},
                                         {"present", e.present},
                                         {"outcome_label", e.outcome_label}});
                   },
               },
               element);
  }
  return nlohmann::json{{"modes", spec.modes},
                        {"input_mode", spec.input_mode},
                        {"elements", elements},
                        {"detector_map", spec.detector_map}};
}

inline NetworkSpec network_from_json(const nlohmann::json& j) {
  NetworkSpec spec;
  spec.modes = j.at("modes").get<std::vector<std::string>>();
  spec.input_mode = j.at("input_mode").get<std::string>();
  for (const auto& e : j.at("elements")) {
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "beam_splitter") {
      spec.elements.push_back(BeamSplitterElement{e.at("mode_a").get<std::string>(),
                                                  e.at("mode_b").get<std::string>(),
                                                  e.at("transmission").get<double>()});
    } else if (kind == "phase") {
      spec.elements.push_back(
          PhaseElement{e.at("mode").get<std::string>(), e.at("phase").get<double>()});
    } else if (kind == "absorber") {
      spec.elements.push_back(AbsorberElement{e.at("mode").get<std::string>(),
                                              e.value("present", true),
                                              e.value("outcome_label", std::string("explosion"))});
    } else {
      throw std::invalid_argument("unknown element kind '" + kind + "'");
    }
  }
  spec.detector_map = j.at("detector_map").get<std::map<std::string, std::string>>();
  return spec;
}

// ---------------------------------------------------------------------------
// RunRequest (the CLI config-file document)
// ---------------------------------------------------------------------------

enum class Protocol { penrose, ev, repeated_ev, zeno, xray, generalized };
enum class RunMode { exact, sample };
enum class OutputFormat { json, csv };

using ParamValue = std::variant<double, std::int64_t, bool, std::string>;

struct RunRequest {
  Protocol protocol = Protocol::ev;
  std::map<std::string, ParamValue> params;
  RunMode mode = RunMode::exact;
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
};

inline std::string protocol_name(Protocol p) {
  switch (p) {
    case Protocol::penrose: return "penrose";
    case Protocol::ev: return "ev";
    case Protocol::repeated_ev: return "repeated_ev";
    case Protocol::zeno: return "zeno";
    case Protocol::xray: return "xray";
    case Protocol::generalized: return "generalized";
  }
  throw std::logic_error("unreachable protocol value");
}

inline Protocol protocol_from_name(const std::string& name) {
  if (name == "penrose") return Protocol::penrose;
  if (name == "ev") return Protocol::ev;
  if (name == "repeated_ev") return Protocol::repeated_ev;
  if (name == "zeno") return Protocol::zeno;
  if (name == "xray") return Protocol::xray;
  if (name == "generalized") return Protocol::generalized;
  throw std::invalid_argument(
      "unknown protocol '" + name +
      "' (expected penrose, ev, repeated_ev, zeno, xray or generalized)");
}

inline std::string run_mode_name(RunMode m) { return m == RunMode::exact ? "exact" : "sample"; }

inline RunMode run_mode_from_name(const std::string& name) {
  if (name == "exact") return RunMode::exact;
  if (name == "sample") return RunMode::sample;
  throw std::invalid_argument("unknown mode '" + name + "' (expected exact or sample)");
}

inline std::string output_format_name(OutputFormat f) {
  return f == OutputFormat::json ? "json" : "csv";
}

inline OutputFormat output_format_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected json or csv)");
}

/// Parses a --param value: booleans, then integers, then reals, else text.
inline ParamValue parse_param_value(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  const char* begin = text.data();
  const char* end = begin + text.size();
  std::int64_t i = 0;
  auto ir = std::from_chars(begin, end, i);
  if (ir.ec == std::errc() && ir.ptr == end) return i;
  double d = 0.0;
  auto dr = std::from_chars(begin, end, d);
  if (dr.ec == std::errc() && dr.ptr == end) return d;
  return text;
}

inline nlohmann::json param_to_json(const ParamValue& v) {
  return std::visit([](const auto& x) { return nlohmann::json(x); }, v);
}

inline ParamValue param_from_json(const nlohmann::json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("parameter values must be scalars");
}

inline nlohmann::json run_request_to_json(const RunRequest& req) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : req.params) params[name] = param_to_json(value);
  return nlohmann::json{{"protocol", protocol_name(req.protocol)},
                        {"params", params},
                        {"mode", run_mode_name(req.mode)},
                        {"trials", req.trials},
                        {"seed", req.seed},
                        {"format", output_format_name(req.format)}};
}

inline RunRequest run_request_from_json(const nlohmann::json& j) {
  RunRequest req;
  req.protocol = protocol_from_name(j.at("protocol").get<std::string>());
  if (j.contains("params"))
    for (const auto& [name, value] : j.at("params").items())
      req.params[name] = param_from_json(value);
  if (j.contains("mode")) req.mode = run_mode_from_name(j.at("mode").get<std::string>());
  if (j.contains("trials")) req.trials = j.at("trials").get<std::int64_t>();
  if (j.contains("seed")) req.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("format"))
    req.format = output_format_from_name(j.at("format").get<std::string>());
  return req;
}

// ---------------------------------------------------------------------------
// Ordered JSON writer for result documents
// ---------------------------------------------------------------------------

/// Minimal insertion-ordered JSON writer. The generic library would sort keys
/// and print doubles at round-trip precision; result documents are specified
/// with stable key order and 12-significant-digit numbers instead.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    prefix();
    out_ += '{';
    first_ = true;
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    first_ = false;
    return *this;
  }
  JsonWriter& begin_array() {
    prefix();
    out_ += '[';
    first_ = true;
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    first_ = false;
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    prefix();
    append_string(k);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    prefix();
    if (std::isfinite(v))
      out_ += format_number(v);
    else
      out_ += "null";
    return *this;
  }
  JsonWriter& value(std::int64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    prefix();
    append_string(v);
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& null() {
    prefix();
    out_ += "null";
    return *this;
  }
  JsonWriter& value(const ParamValue& v) {
    std::visit([this](const auto& x) { this->value(x); }, v);
    return *this;
  }
  const std::string& str() const { return out_; }

 private:
  void prefix() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!first_) out_ += ',';
    first_ = false;
  }
  void append_string(const std::string& s) {
    out_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += ch;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool first_ = true;
  bool pending_value_ = false;
};

}  // namespace ifm
