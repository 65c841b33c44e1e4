#pragma once

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "radii/errors.hpp"

namespace radii {

using jsonv = nlohmann::ordered_json;

namespace detail {

inline void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

inline void write_value(std::string& out, const jsonv& j) {
    switch (j.type()) {
        case jsonv::value_t::null: out += "null"; break;
        case jsonv::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case jsonv::value_t::number_integer: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRId64, static_cast<std::int64_t>(j.get<std::int64_t>()));
            out += buf;
            break;
        }
        case jsonv::value_t::number_unsigned: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%" PRIu64, static_cast<std::uint64_t>(j.get<std::uint64_t>()));
            out += buf;
            break;
        }
        case jsonv::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) throw InputError("json output: non-finite number");
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            out += buf;
            break;
        }
        case jsonv::value_t::string: append_escaped(out, j.get<std::string>()); break;
        case jsonv::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                write_value(out, el);
            }
            out += ']';
            break;
        }
        case jsonv::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                append_escaped(out, it.key());
                out += ':';
                write_value(out, it.value());
            }
            out += '}';
            break;
        }
        default: throw InputError("json output: unsupported value type");
    }
}

}  // namespace detail

/// Compact single-line serialization with doubles at 12 significant digits
/// and insertion-ordered keys; byte-stable for identical inputs.
inline std::string dump12(const jsonv& j) {
    std::string out;
    detail::write_value(out, j);
    return out;
}

}  // namespace radii
