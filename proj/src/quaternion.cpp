#include "sderiv/quaternion.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace sderiv {

namespace {

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void append_component(std::string& out, double v, char unit) {
    out += std::signbit(v) ? '-' : '+';
    append_number(out, std::fabs(v));
    out += unit;
}

} // namespace

std::string to_string(const Quaternion& q) {
    std::string out;
    append_number(out, q.t);
    append_component(out, q.x, 'i');
    append_component(out, q.y, 'j');
    append_component(out, q.z, 'k');
    return out;
}

Quaternion parse_quaternion(std::string_view text) {
    // Sum of signed terms; each term is a decimal number, a unit letter,
    // or a number immediately followed by a unit letter.
    Quaternion result;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("empty quaternion literal");

    bool first = true;
    while (pos < text.size()) {
        double sign = 1.0;
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between quaternion terms");
        }
        if (pos >= text.size()) throw std::invalid_argument("dangling sign in quaternion literal");

        double value = 1.0;
        bool have_number = false;
        const char c = text[pos];
        if (c != 'i' && c != 'j' && c != 'k') {
            const std::string num(text.substr(pos));
            char* end = nullptr;
            value = std::strtod(num.c_str(), &end);
            if (end == num.c_str()) {
                throw std::invalid_argument("malformed quaternion component");
            }
            pos += static_cast<std::size_t>(end - num.c_str());
            have_number = true;
            skip_ws();
        }

        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            switch (text[pos]) {
                case 'i': result.x += sign * value; break;
                case 'j': result.y += sign * value; break;
                default: result.z += sign * value; break;
            }
            ++pos;
        } else if (have_number) {
            result.t += sign * value;
        } else {
            throw std::invalid_argument("malformed quaternion component");
        }
        skip_ws();
        first = false;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << to_string(q);
}

} // namespace sderiv
