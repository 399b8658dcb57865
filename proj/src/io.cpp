#include "pvkit/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace pvkit::io {

std::string format_double(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e400" : (v < 0 ? "-1e400" : "0");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char hex[8];
                    std::snprintf(hex, sizeof(hex), "\\u%04x", c);
                    out += hex;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

JsonValue JsonValue::object() {
    JsonValue v;
    v.type_ = Type::Object;
    return v;
}

JsonValue JsonValue::array() {
    JsonValue v;
    v.type_ = Type::Array;
    return v;
}

JsonValue JsonValue::string(std::string s) {
    JsonValue v;
    v.type_ = Type::String;
    v.scalar_ = std::move(s);
    return v;
}

JsonValue JsonValue::number(double d) {
    JsonValue v;
    v.type_ = Type::Number;
    v.scalar_ = format_double(d);
    return v;
}

JsonValue JsonValue::integer(long long i) {
    JsonValue v;
    v.type_ = Type::Int;
    v.scalar_ = std::to_string(i);
    return v;
}

JsonValue JsonValue::boolean(bool b) {
    JsonValue v;
    v.type_ = Type::Bool;
    v.scalar_ = b ? "true" : "false";
    return v;
}

JsonValue& JsonValue::add(std::string key, JsonValue v) {
    members_.emplace_back(std::move(key), std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    elements_.push_back(std::move(v));
    return *this;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
    auto newline = [&](int d) {
        if (indent <= 0) return;
        out += '\n';
        out.append(static_cast<size_t>(indent * d), ' ');
    };
    switch (type_) {
        case Type::Object: {
            if (members_.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            for (size_t i = 0; i < members_.size(); ++i) {
                newline(depth + 1);
                out += '"';
                out += json_escape(members_[i].first);
                out += "\": ";
                members_[i].second.write(out, indent, depth + 1);
                if (i + 1 < members_.size()) out += ',';
            }
            newline(depth);
            out += '}';
            return;
        }
        case Type::Array: {
            if (elements_.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (size_t i = 0; i < elements_.size(); ++i) {
                newline(depth + 1);
                elements_[i].write(out, indent, depth + 1);
                if (i + 1 < elements_.size()) out += ',';
            }
            newline(depth);
            out += ']';
            return;
        }
        case Type::String:
            out += '"';
            out += json_escape(scalar_);
            out += '"';
            return;
        default:
            out += scalar_;
            return;
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

JsonValue complex_json(double re, double im) {
    JsonValue v = JsonValue::object();
    v.add("re", JsonValue::number(re));
    v.add("im", JsonValue::number(im));
    return v;
}

} // namespace pvkit::io
