#include "hquat/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "hquat/error.hpp"

namespace hquat {
namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ == s_.size();
    }
    bool eat(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat(std::string_view word) {
        skip_space();
        if (s_.substr(pos_).starts_with(word)) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::optional<std::int64_t> digits() {
        skip_space();
        std::int64_t v = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        if (first == last || !std::isdigit(static_cast<unsigned char>(*first))) return std::nullopt;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ptr == first) return std::nullopt;
        if (ec == std::errc::result_out_of_range) fail("integer out of range");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }
    std::int64_t signed_integer() {
        const bool negative = eat('-');
        if (!negative) eat('+');
        auto v = digits();
        if (!v) fail("expected an integer");
        return negative ? checked::neg(*v) : *v;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("cannot parse quaternion '" + std::string(s_) + "': " + why);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

OrderElement parse_vbasis(Cursor& cur) {
    OrderElement e;
    for (int n = 0; n < 4; ++n) {
        if (n > 0) cur.expect(',');
        e.g[static_cast<std::size_t>(n)] = cur.signed_integer();
    }
    cur.expect(']');
    return e;
}

OrderElement parse_half(Cursor& cur) {
    // slots: 0 real, 1 i, 2 r2j, 3 r2k
    std::array<std::optional<std::int64_t>, 4> slot;
    bool first = true;
    while (!cur.eat(')')) {
        bool negative = false;
        if (cur.eat('-')) {
            negative = true;
        } else if (!cur.eat('+') && !first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;
        const auto coeff = cur.digits();
        std::size_t which = 0;
        if (cur.eat("r2j")) {
            which = 2;
        } else if (cur.eat("r2k")) {
            which = 3;
        } else if (cur.eat('i')) {
            which = 1;
        } else if (!coeff) {
            cur.fail("expected a term");
        }
        std::int64_t v = coeff.value_or(1);
        if (negative) v = checked::neg(v);
        if (slot[which]) cur.fail("repeated term");
        slot[which] = v;
    }
    cur.expect('/');
    if (cur.digits() != 2) cur.fail("half form must be divided by 2");
    const HalfCoords h{slot[0].value_or(0), slot[1].value_or(0), slot[2].value_or(0),
                       slot[3].value_or(0)};
    if (!satisfies_parity(h)) cur.fail("parity violation: not an element of the order");
    return from_half(h);
}

void append_term(std::string& out, std::int64_t v, std::string_view suffix, bool lead) {
    if (v < 0) {
        out += '-';
    } else if (!lead) {
        out += '+';
    }
    // Magnitude via unsigned to survive INT64_MIN.
    const auto mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    out += std::to_string(mag);
    out += suffix;
}

}  // namespace

OrderElement parse(std::string_view text) {
    Cursor cur(text);
    OrderElement e;
    if (cur.eat('[')) {
        e = parse_vbasis(cur);
    } else if (cur.eat('(')) {
        e = parse_half(cur);
    } else {
        cur.fail("expected '[' or '('");
    }
    if (!cur.done()) cur.fail("trailing characters");
    return e;
}

std::string format(const OrderElement& e) {
    return "[" + std::to_string(e.g[0]) + "," + std::to_string(e.g[1]) + "," + std::to_string(e.g[2]) +
           "," + std::to_string(e.g[3]) + "]";
}

std::string format_half(const OrderElement& e) {
    const HalfCoords h = to_half(e);
    std::string out = "(";
    append_term(out, h.a, "", true);
    append_term(out, h.b, "i", false);
    append_term(out, h.c, "r2j", false);
    append_term(out, h.d, "r2k", false);
    out += ")/2";
    return out;
}

}  // namespace hquat
