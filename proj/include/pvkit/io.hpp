#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pvkit::io {

/// Locale-independent 17-significant-digit rendering; round-trips exactly
/// and is byte-stable across runs.
std::string format_double(double v);

/// Minimal ordered JSON document builder. Keys keep insertion order so
/// repeated runs serialize byte-identically.
class JsonValue {
public:
    static JsonValue object();
    static JsonValue array();
    static JsonValue string(std::string s);
    static JsonValue number(double v);
    static JsonValue integer(long long v);
    static JsonValue boolean(bool b);

    JsonValue& add(std::string key, JsonValue v); // object member
    JsonValue& push(JsonValue v);                 // array element

    std::string dump(int indent = 2) const;

private:
    enum class Type { Object, Array, String, Number, Int, Bool };
    Type type_ = Type::Object;
    std::string scalar_;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> elements_;

    void write(std::string& out, int indent, int depth) const;
};

/// Convenience: {"re": ..., "im": ...}.
JsonValue complex_json(double re, double im);

std::string json_escape(const std::string& s);

} // namespace pvkit::io
