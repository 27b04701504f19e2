#include "oblique/matrix_io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "oblique/errors.hpp"

namespace oblique {

namespace {

struct Token {
    std::string text;
    int line;
};

/// Whitespace-separated tokens with '#' comments stripped, line numbers kept.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    std::string current;
    int current_line = 1;
    bool in_comment = false;
    auto flush = [&]() {
        if (!current.empty()) {
            tokens.push_back({current, current_line});
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            continue;
        }
        if (in_comment) continue;
        if (c == '#') {
            flush();
            in_comment = true;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (current.empty()) current_line = line;
        current.push_back(c);
    }
    flush();
    return tokens;
}

double parse_number(const Token& tok, const std::string& source, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok.text, &used);
        if (used != tok.text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + " '" + tok.text + "'", source, tok.line);
    }
}

long parse_count(const Token& tok, const std::string& source, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok.text, &used);
        if (used != tok.text.size() || v < 1) {
            throw std::invalid_argument("not a positive count");
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + " '" + tok.text + "'", source, tok.line);
    }
}

Complex parse_entry(const Token& tok, Field field, const std::string& source) {
    if (field == Field::real) {
        return Complex(parse_number(tok, source, "real entry"), 0.0);
    }
    const std::size_t comma = tok.text.find(',');
    if (comma == std::string::npos || tok.text.find(',', comma + 1) != std::string::npos) {
        throw ParseError("complex entry '" + tok.text + "' must be re,im", source, tok.line);
    }
    const Token re{tok.text.substr(0, comma), tok.line};
    const Token im{tok.text.substr(comma + 1), tok.line};
    if (re.text.empty() || im.text.empty()) {
        throw ParseError("complex entry '" + tok.text + "' must be re,im", source, tok.line);
    }
    return Complex(parse_number(re, source, "real part"), parse_number(im, source, "imag part"));
}

}  // namespace

TaggedMatrix parse_matrix_text(const std::string& text, const std::string& source_name) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.size() < 3) {
        throw ParseError("expected header '<field> <rows> <cols>'", source_name, 1);
    }
    Field field;
    if (tokens[0].text == "real") {
        field = Field::real;
    } else if (tokens[0].text == "complex") {
        field = Field::cplx;
    } else {
        throw ParseError("field must be 'real' or 'complex', got '" + tokens[0].text + "'",
                         source_name, tokens[0].line);
    }
    const long rows = parse_count(tokens[1], source_name, "row count");
    const long cols = parse_count(tokens[2], source_name, "column count");

    const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    const std::size_t got = tokens.size() - 3;
    if (got != expected) {
        const int where = got < expected ? tokens.back().line : tokens[3 + expected].line;
        throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                             std::to_string(got),
                         source_name, where);
    }

    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            const Token& tok = tokens[3 + static_cast<std::size_t>(i) * cols + j];
            const Complex v = parse_entry(tok, field, source_name);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw ParseError("entry '" + tok.text + "' is not finite", source_name,
                                 tok.line);
            }
            m(i, j) = v;
        }
    }
    return TaggedMatrix{std::move(m), field};
}

TaggedMatrix parse_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on '" + path + "'");
    }
    return parse_matrix_text(buf.str(), path);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_matrix(const Matrix& m, Field field) {
    std::string out = field == Field::real ? "real " : "complex ";
    out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " ";
            if (field == Field::real) {
                out += format_double(m(i, j).real());
            } else {
                out += format_double(m(i, j).real()) + "," + format_double(m(i, j).imag());
            }
        }
        out += "\n";
    }
    return out;
}

void write_matrix(const std::string& path, const Matrix& m, Field field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << format_matrix(m, field);
    if (!out) {
        throw IoError("write failure on '" + path + "'");
    }
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for digest");
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    if (in.bad()) {
        throw IoError("read failure on '" + path + "'");
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "0x%016" PRIx64, h);
    return buf;
}

}  // namespace oblique
