#include "bqp/io.hpp"

#include <sstream>
#include <vector>

#include "bqp/error.hpp"

namespace bqp {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty()) out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

class LineReader {
 public:
    explicit LineReader(std::string_view text) : lines_(significant_lines(text)) {}

    const Line& next(const std::string& what) {
        if (index_ >= lines_.size()) {
            std::size_t last = lines_.empty() ? 0 : lines_.back().number;
            throw ParseError("unexpected end of input, expected " + what, last);
        }
        return lines_[index_++];
    }

    void expect_end() const {
        if (index_ < lines_.size()) throw ParseError("unexpected trailing content", lines_[index_].number);
    }

 private:
    std::vector<Line> lines_;
    std::size_t index_ = 0;
};

std::size_t parse_size(const std::string& tok, std::size_t line, const std::string& what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty() || tok[0] == '-' || tok[0] == '+' || v == 0)
        throw ParseError(what + " must be a positive integer, got '" + tok + "'", line);
    return static_cast<std::size_t>(v);
}

std::vector<Rational> parse_values(const Line& line, std::size_t count, const std::string& what) {
    if (line.tokens.size() != count)
        throw ParseError(what + ": expected " + std::to_string(count) + " values, found " +
                             std::to_string(line.tokens.size()),
                         line.number);
    std::vector<Rational> out;
    out.reserve(count);
    for (const auto& tok : line.tokens) {
        try {
            out.push_back(parse_rational(tok));
        } catch (const std::invalid_argument& e) {
            throw ParseError(what + ": " + e.what(), line.number);
        }
    }
    return out;
}

Matrix parse_rows(LineReader& reader, std::size_t rows, std::size_t cols) {
    Matrix q(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string what = "Q row " + std::to_string(i + 1);
        auto values = parse_values(reader.next(what), cols, what);
        for (std::size_t j = 0; j < cols; ++j) q(i, j) = std::move(values[j]);
    }
    return q;
}

void append_row(std::string& out, std::span<const Rational> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ' ';
        out += to_string(values[k]);
    }
    out += '\n';
}

}  // namespace

std::string peek_header(std::string_view text) {
    auto lines = significant_lines(text);
    return lines.empty() ? std::string() : lines.front().tokens.front();
}

ParsedInstance parse_instance(std::string_view text) {
    LineReader reader(text);
    const Line& header = reader.next("header");
    if (header.tokens.size() != 1 || (header.tokens[0] != "bqp01" && header.tokens[0] != "bqp11"))
        throw ParseError("expected header 'bqp01' or 'bqp11'", header.number);
    const VariableDomain domain = header.tokens[0] == "bqp01" ? VariableDomain::binary : VariableDomain::spin;

    const Line& dims = reader.next("dimensions 'm n'");
    if (dims.tokens.size() != 2) throw ParseError("expected dimensions 'm n'", dims.number);
    const std::size_t m = parse_size(dims.tokens[0], dims.number, "m");
    const std::size_t n = parse_size(dims.tokens[1], dims.number, "n");

    Rational c0 = parse_values(reader.next("c0"), 1, "c0").front();
    auto c = parse_values(reader.next("c"), m, "c");
    auto d = parse_values(reader.next("d"), n, "d");
    Matrix q = parse_rows(reader, m, n);
    reader.expect_end();
    return {domain, Instance(std::move(q), std::move(c), std::move(d), std::move(c0))};
}

std::string format_instance(const Instance& inst, VariableDomain domain) {
    std::string out = domain == VariableDomain::binary ? "bqp01\n" : "bqp11\n";
    out += std::to_string(inst.rows()) + " " + std::to_string(inst.cols()) + "\n";
    out += to_string(inst.c0()) + "\n";
    append_row(out, inst.c());
    append_row(out, inst.d());
    for (std::size_t i = 0; i < inst.rows(); ++i) append_row(out, inst.q().row(i));
    return out;
}

Qp01Problem parse_qp01(std::string_view text) {
    LineReader reader(text);
    const Line& header = reader.next("header");
    if (header.tokens.size() != 1 || header.tokens[0] != "qp01") throw ParseError("expected header 'qp01'", header.number);
    const Line& dims = reader.next("size 'n'");
    if (dims.tokens.size() != 1) throw ParseError("expected a single size 'n'", dims.number);
    const std::size_t n = parse_size(dims.tokens[0], dims.number, "n");
    Rational c0 = parse_values(reader.next("c0"), 1, "c0").front();
    auto c = parse_values(reader.next("c"), n, "c");
    Matrix q = parse_rows(reader, n, n);
    reader.expect_end();
    return {std::move(q), std::move(c), std::move(c0)};
}

std::string format_qp01(const Qp01Problem& problem) {
    std::string out = "qp01\n" + std::to_string(problem.size()) + "\n" + to_string(problem.c0) + "\n";
    append_row(out, problem.c);
    for (std::size_t i = 0; i < problem.size(); ++i) append_row(out, problem.q.row(i));
    return out;
}

std::string bits_to_string(const BinaryVector& v) {
    std::string out;
    out.reserve(v.size());
    for (auto b : v) out += b ? '1' : '0';
    return out;
}

std::string format_solution(const Solution& s) {
    return "value " + to_string(s.value) + " " + to_decimal(s.value) + "\nx " + bits_to_string(s.x) + "\ny " +
           bits_to_string(s.y) + "\n";
}

}  // namespace bqp
