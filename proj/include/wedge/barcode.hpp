#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

using value_t = double;
using index_t = std::int32_t;

// One closed-open interval [birth, death). After parsing, death is always
// finite (infinite deaths are truncated to the configured horizon) and
// birth < death. `index` is the bar's position in input order; duplicates
// of the same interval keep distinct indices.
struct Bar {
    index_t index = 0;
    value_t birth = 0;
    value_t death = 0;

    value_t length() const { return death - birth; }
    friend bool operator==(const Bar&, const Bar&) = default;
};

// A multiset of bars. Construction does not validate; call validate_barcode
// after building one by hand.
struct Barcode {
    std::vector<Bar> bars;

    index_t size() const { return static_cast<index_t>(bars.size()); }
    bool empty() const { return bars.empty(); }
    friend bool operator==(const Barcode&, const Barcode&) = default;
};

enum class EventKind : std::uint8_t { Death = 0, Birth = 1 };

// Sweep event. The global order is (time, deaths before births, bar index),
// which fixes a total order that every consumer of the sweep relies on.
struct Event {
    value_t time = 0;
    EventKind kind = EventKind::Death;
    index_t bar_index = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

bool event_order_less(const Event& a, const Event& b);

// Throws std::invalid_argument if any bar is non-finite, empty (birth >= death)
// or carries a wrong index.
void validate_barcode(const Barcode& bc);

// Line-oriented text: two numeric tokens per line separated by whitespace or
// commas, '#' starts a comment, "inf"/"Inf"/"infinity" denote +infinity in the
// death column. Infinite deaths are replaced by [b, t_max) when t_max is given
// and rejected with ConfigError otherwise.
Barcode parse_barcode(std::istream& in, std::optional<value_t> t_max = std::nullopt);
Barcode parse_barcode(std::string_view text, std::optional<value_t> t_max = std::nullopt);

// One "birth death" pair per line, input order, round-trip precision.
void serialize_barcode(const Barcode& bc, std::ostream& out);
std::string serialize_barcode(const Barcode& bc);

// 2M events sorted by event_order_less.
std::vector<Event> build_event_list(const Barcode& bc);

// Shortest decimal form that parses back to exactly the same double.
std::string format_value(value_t v);

} // namespace wedge
