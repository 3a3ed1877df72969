#include "esym/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace esym {

Json& Json::set(std::string key, Json value) {
    if (!std::holds_alternative<Members>(v_)) throw std::logic_error("Json::set on non-object");
    std::get<Members>(v_).emplace_back(std::move(key), std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (!std::holds_alternative<Elements>(v_)) throw std::logic_error("Json::push on non-array");
    std::get<Elements>(v_).push_back(std::move(value));
    return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

void Json::write(std::string& out) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
        out += "null";
    } else if (std::holds_alternative<bool>(v_)) {
        out += std::get<bool>(v_) ? "true" : "false";
    } else if (std::holds_alternative<std::int64_t>(v_)) {
        out += std::to_string(std::get<std::int64_t>(v_));
    } else if (std::holds_alternative<double>(v_)) {
        double d = std::get<double>(v_);
        if (!std::isfinite(d)) {
            out += "null";
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            out += buf;
        }
    } else if (std::holds_alternative<std::string>(v_)) {
        write_escaped(out, std::get<std::string>(v_));
    } else if (std::holds_alternative<Elements>(v_)) {
        out += '[';
        const auto& elems = std::get<Elements>(v_);
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) out += ',';
            elems[i].write(out);
        }
        out += ']';
    } else {
        out += '{';
        const auto& members = std::get<Members>(v_);
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out += ',';
            write_escaped(out, members[i].first);
            out += ':';
            members[i].second.write(out);
        }
        out += '}';
    }
}

std::string Json::dump() const {
    std::string out;
    write(out);
    return out;
}

bool Json::is_object() const { return std::holds_alternative<Members>(v_); }
bool Json::is_array() const { return std::holds_alternative<Elements>(v_); }
bool Json::is_string() const { return std::holds_alternative<std::string>(v_); }

const std::string& Json::string_value() const { return std::get<std::string>(v_); }

const std::vector<std::pair<std::string, Json>>& Json::members() const {
    return std::get<Members>(v_);
}

const std::vector<Json>& Json::elements() const { return std::get<Elements>(v_); }

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw std::invalid_argument("unknown format: '" + name + "'");
}

}  // namespace esym
