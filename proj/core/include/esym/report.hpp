#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace esym {

/// Minimal JSON value for report emission. Object keys keep insertion order
/// and doubles print via "%.17g", so a report is a pure function of its data:
/// identical inputs give byte-identical bytes.
class Json {
public:
    Json() : v_(nullptr) {}
    Json(std::nullptr_t) : v_(nullptr) {}
    Json(bool b) : v_(b) {}
    Json(int i) : v_(static_cast<std::int64_t>(i)) {}
    Json(long i) : v_(static_cast<std::int64_t>(i)) {}
    Json(long long i) : v_(static_cast<std::int64_t>(i)) {}
    Json(unsigned long long i) : v_(static_cast<std::int64_t>(i)) {}
    Json(std::uint64_t i) : v_(static_cast<std::int64_t>(i)) {}
    Json(double d) : v_(d) {}
    Json(const char* s) : v_(std::string(s)) {}
    Json(std::string s) : v_(std::move(s)) {}

    static Json object() {
        Json j;
        j.v_ = Members{};
        return j;
    }
    static Json array() {
        Json j;
        j.v_ = Elements{};
        return j;
    }

    Json& set(std::string key, Json value);
    Json& push(Json value);

    std::string dump() const;

    bool is_object() const;
    bool is_array() const;
    bool is_string() const;
    const std::string& string_value() const;
    const std::vector<std::pair<std::string, Json>>& members() const;
    const std::vector<Json>& elements() const;

private:
    using Members = std::vector<std::pair<std::string, Json>>;
    using Elements = std::vector<Json>;
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Elements, Members> v_;

    void write(std::string& out) const;
};

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& name);

}  // namespace esym
