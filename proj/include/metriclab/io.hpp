// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Machine-readable output: a minimal ordered JSON value and CSV rows. All
// floating-point values are serialized with 17 significant digits, enough to
// round-trip binary64 exactly.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace metriclab {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// A write-only JSON document; keys keep insertion order.
class Json {
public:
    static Json number(double v) { return Json(Kind::number, format_double(v)); }
    static Json integer(std::uint64_t v) { return Json(Kind::number, std::to_string(v)); }
    static Json integer(std::int64_t v) { return Json(Kind::number, std::to_string(v)); }
    static Json integer(int v) { return Json(Kind::number, std::to_string(v)); }
    static Json boolean(bool v) { return Json(Kind::number, v ? "true" : "false"); }
    static Json string(std::string v) { return Json(Kind::string, std::move(v)); }
    static Json array() { return Json(Kind::array, ""); }
    static Json object() { return Json(Kind::object, ""); }

    Json& push(Json v) {
        items_.push_back({"", std::move(v)});
        return *this;
    }

    Json& set(std::string key, Json v) {
        items_.push_back({std::move(key), std::move(v)});
        return *this;
    }

    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    enum class Kind { number, string, array, object };

    Json(Kind k, std::string scalar) : kind_(k), scalar_(std::move(scalar)) {}

    static void write_escaped(std::string& out, const std::string& s) {
        out += '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(ch) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                        out += buf;
                    } else {
                        out += ch;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (kind_) {
            case Kind::number:
                out += scalar_;
                break;
            case Kind::string:
                write_escaped(out, scalar_);
                break;
            case Kind::array: {
                out += '[';
                bool first = true;
                for (const auto& [key, value] : items_) {
                    if (!first) out += ',';
                    first = false;
                    value.write(out);
                }
                out += ']';
                break;
            }
            case Kind::object: {
                out += '{';
                bool first = true;
                for (const auto& [key, value] : items_) {
                    if (!first) out += ',';
                    first = false;
                    write_escaped(out, key);
                    out += ':';
                    value.write(out);
                }
                out += '}';
                break;
            }
        }
    }

    Kind kind_;
    std::string scalar_;
    std::vector<std::pair<std::string, Json>> items_;
};

/// CSV table with a header row; cells are preformatted strings.
class Csv {
public:
    explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}

    Csv& row(std::vector<std::string> cells) {
        rows_.push_back(std::move(cells));
        return *this;
    }

    std::string dump() const {
        std::string out = join(header_);
        for (const auto& r : rows_) {
            out += '\n';
            out += join(r);
        }
        out += '\n';
        return out;
    }

private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        return out;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace metriclab
