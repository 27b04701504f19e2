#include "oblique/report.hpp"

#include <cmath>

#include "oblique/errors.hpp"

namespace oblique {

Json Json::object() { return Json(Kind::object); }
Json Json::array() { return Json(Kind::array); }

Json Json::str(std::string v) {
    Json j(Kind::string);
    j.str_ = std::move(v);
    return j;
}

Json Json::number(double v) {
    if (!std::isfinite(v)) {
        throw Error("Json: non-finite number in report");
    }
    Json j(Kind::num_float);
    j.float_ = v;
    return j;
}

Json Json::integer(std::int64_t v) {
    Json j(Kind::num_int);
    j.int_ = v;
    return j;
}

Json Json::boolean(bool v) {
    Json j(Kind::boolean);
    j.bool_ = v;
    return j;
}

Json& Json::set(const std::string& key, Json value) {
    if (kind_ != Kind::object) throw Error("Json::set on a non-object");
    members_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::array) throw Error("Json::push on a non-array");
    elements_.push_back(std::move(value));
    return *this;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
    out.push_back('"');
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
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out.push_back('\n');
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::string:
            escape_into(out, str_);
            break;
        case Kind::num_float:
            out += format_double(float_);
            break;
        case Kind::num_int:
            out += std::to_string(int_);
            break;
        case Kind::boolean:
            out += bool_ ? "true" : "false";
            break;
        case Kind::object: {
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out.push_back('{');
            bool first = true;
            for (const auto& [key, value] : members_) {
                if (!first) out.push_back(',');
                first = false;
                newline_indent(out, indent, depth + 1);
                escape_into(out, key);
                out += indent > 0 ? ": " : ":";
                value.write(out, indent, depth + 1);
            }
            newline_indent(out, indent, depth);
            out.push_back('}');
            break;
        }
        case Kind::array: {
            if (elements_.empty()) {
                out += "[]";
                break;
            }
            out.push_back('[');
            bool first = true;
            for (const auto& value : elements_) {
                if (!first) out.push_back(',');
                first = false;
                newline_indent(out, indent, depth + 1);
                value.write(out, indent, depth + 1);
            }
            newline_indent(out, indent, depth);
            out.push_back(']');
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

Json matrix_json(const Matrix& m, Field field) {
    Json j = Json::object();
    j.set("field", Json::str(field == Field::real ? "real" : "complex"));
    j.set("rows", Json::integer(m.rows()));
    j.set("cols", Json::integer(m.cols()));
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index jdx = 0; jdx < m.cols(); ++jdx) {
            if (field == Field::real) {
                entries.push(Json::number(m(i, jdx).real()));
            } else {
                Json pair = Json::array();
                pair.push(Json::number(m(i, jdx).real()));
                pair.push(Json::number(m(i, jdx).imag()));
                entries.push(std::move(pair));
            }
        }
    }
    j.set("entries", std::move(entries));
    return j;
}

Json verdicts_json(const std::vector<NamedVerdict>& verdicts) {
    Json arr = Json::array();
    for (const auto& v : verdicts) {
        Json item = Json::object();
        item.set("name", Json::str(v.name));
        item.set("pass", Json::boolean(v.pass));
        arr.push(std::move(item));
    }
    return arr;
}

}  // namespace oblique
