#include "wedge/barcode.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace wedge {

bool event_order_less(const Event& a, const Event& b) {
    if (a.time != b.time) return a.time < b.time;
    if (a.kind != b.kind) return a.kind < b.kind; // deaths first
    return a.bar_index < b.bar_index;
}

void validate_barcode(const Barcode& bc) {
    for (std::size_t r = 0; r < bc.bars.size(); ++r) {
        const Bar& bar = bc.bars[r];
        if (bar.index != static_cast<index_t>(r))
            throw std::invalid_argument("barcode: bar " + std::to_string(r) +
                                        " has index " + std::to_string(bar.index));
        if (!std::isfinite(bar.birth) || !std::isfinite(bar.death))
            throw std::invalid_argument("barcode: bar " + std::to_string(r) +
                                        " has a non-finite endpoint");
        if (!(bar.birth < bar.death))
            throw std::invalid_argument("barcode: bar " + std::to_string(r) + " [" +
                                        format_value(bar.birth) + ", " +
                                        format_value(bar.death) + ") is empty");
    }
}

namespace {

bool is_infinity_token(std::string_view tok) {
    if (!tok.empty() && (tok.front() == '+')) tok.remove_prefix(1);
    std::string lower(tok);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return lower == "inf" || lower == "infinity";
}

// Parses one numeric token; infinity tokens yield +inf. Returns nullopt on
// anything else (including trailing garbage and NaN).
std::optional<value_t> parse_token(std::string_view tok) {
    if (is_infinity_token(tok)) return std::numeric_limits<value_t>::infinity();
    std::string buf(tok);
    const char* begin = buf.c_str();
    char* end = nullptr;
    errno = 0;
    value_t v = std::strtod(begin, &end);
    if (end != begin + buf.size() || end == begin) return std::nullopt;
    if (std::isnan(v)) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_sep(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Barcode parse_barcode(std::istream& in, std::optional<value_t> t_max) {
    Barcode bc;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        auto tokens = split_tokens(body);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected two tokens, got " +
                                 std::to_string(tokens.size()),
                             line_no);
        auto birth = parse_token(tokens[0]);
        auto death = parse_token(tokens[1]);
        if (!birth || !death)
            throw ParseError("line " + std::to_string(line_no) + ": malformed number", line_no);
        if (!std::isfinite(*birth))
            throw ParseError("line " + std::to_string(line_no) + ": birth must be finite",
                             line_no);
        if (std::isinf(*death)) {
            if (*death < 0)
                throw ParseError("line " + std::to_string(line_no) + ": death is -inf", line_no);
            if (!t_max)
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": infinite death requires a truncation horizon (t_max)");
            *death = *t_max;
        }
        if (!(*birth < *death))
            throw ParseError("line " + std::to_string(line_no) + ": empty bar [" +
                                 format_value(*birth) + ", " + format_value(*death) + ")",
                             line_no);
        bc.bars.push_back(Bar{static_cast<index_t>(bc.bars.size()), *birth, *death});
    }
    return bc;
}

Barcode parse_barcode(std::string_view text, std::optional<value_t> t_max) {
    std::istringstream in{std::string(text)};
    return parse_barcode(in, t_max);
}

void serialize_barcode(const Barcode& bc, std::ostream& out) {
    for (const Bar& bar : bc.bars)
        out << format_value(bar.birth) << ' ' << format_value(bar.death) << '\n';
}

std::string serialize_barcode(const Barcode& bc) {
    std::ostringstream out;
    serialize_barcode(bc, out);
    return out.str();
}

std::vector<Event> build_event_list(const Barcode& bc) {
    std::vector<Event> events;
    events.reserve(2 * bc.bars.size());
    for (const Bar& bar : bc.bars) {
        events.push_back(Event{bar.birth, EventKind::Birth, bar.index});
        events.push_back(Event{bar.death, EventKind::Death, bar.index});
    }
    std::sort(events.begin(), events.end(), event_order_less);
    return events;
}

std::string format_value(value_t v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace wedge
