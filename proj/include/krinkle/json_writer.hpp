#pragma once

/**
 * @file json_writer.hpp
 * @brief Minimal streaming JSON writer with fixed number formatting.
 *
 * Exports are snapshot-tested byte for byte, so doubles are always written
 * with %.12g (12 significant digits) and key order is whatever the caller
 * emits. Reading JSON is done elsewhere with nlohmann/json; this writer
 * exists only to keep the output format pinned.
 */

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace krinkle {

class JsonWriter {
 public:
  void begin_object() { pre_value(); out_ += '{'; first_.push_back(true); }
  void end_object() { out_ += '}'; first_.pop_back(); }
  void begin_array() { pre_value(); out_ += '['; first_.push_back(true); }
  void end_array() { out_ += ']'; first_.pop_back(); }

  void key(std::string_view k) {
    separate();
    append_string(k);
    out_ += ':';
    after_key_ = true;
  }

  void value(std::int64_t v) { pre_value(); out_ += std::to_string(v); }
  void value(int v) { value(static_cast<std::int64_t>(v)); }
  void value(bool v) { pre_value(); out_ += v ? "true" : "false"; }
  void value(double v) { pre_value(); out_ += format_double(v); }
  void value(std::string_view v) { pre_value(); append_string(v); }
  void value(const char* v) { value(std::string_view(v)); }

  const std::string& str() const { return out_; }

  static std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

 private:
  void separate() {
    if (!first_.empty()) {
      if (!first_.back()) out_ += ',';
      first_.back() = false;
    }
  }

  void pre_value() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    separate();
  }

  void append_string(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\r': out_ += "\\r"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

}  // namespace krinkle
