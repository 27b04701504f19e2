#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oblique/matrix.hpp"
#include "oblique/matrix_io.hpp"

namespace oblique {

/// Minimal JSON value with insertion-ordered object keys and all floats
/// emitted via %.17g. Reports must be byte-identical for identical inputs
/// and seed, which rules out serializers that pick shortest float forms
/// or reorder keys.
class Json {
public:
    static Json object();
    static Json array();
    static Json str(std::string v);
    static Json number(double v);
    static Json integer(std::int64_t v);
    static Json boolean(bool v);

    /// Object member (insertion order preserved). Returns *this.
    Json& set(const std::string& key, Json value);
    /// Array element.
    Json& push(Json value);

    std::string dump(int indent = 2) const;

private:
    enum class Kind { object, array, string, num_float, num_int, boolean };
    Json(Kind kind) : kind_(kind) {}
    void write(std::string& out, int indent, int depth) const;

    Kind kind_;
    std::string str_;
    double float_ = 0.0;
    std::int64_t int_ = 0;
    bool bool_ = false;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> elements_;
};

/// JSON encoding of a matrix: {"field", "rows", "cols", "entries"} with
/// row-major entries; complex entries are [re, im] pairs.
Json matrix_json(const Matrix& m, Field field);

/// Shared skeleton of every report document. The schema carries a version
/// field; result payloads are command specific.
inline constexpr const char* kReportSchemaVersion = "1";

struct NamedVerdict {
    std::string name;
    bool pass;
};

Json verdicts_json(const std::vector<NamedVerdict>& verdicts);

}  // namespace oblique
