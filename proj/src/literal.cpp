#include "quatcomm/literal.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "quatcomm/errors.hpp"

namespace quatcomm {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
};

int unit_slot(char c) {
  switch (c) {
    case 'i': return 1;
    case 'j': return 2;
    case 'k': return 3;
    default: return 0;
  }
}

double parse_float_coefficient(Cursor& c) {
  const char* begin = c.text.data() + c.pos;
  const char* end = c.text.data() + c.text.size();
  double value = 0.0;
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr == begin) {
    throw parse_error("expected a decimal coefficient", c.pos);
  }
  if (!std::isfinite(value)) {
    throw parse_error("coefficient is not finite", c.pos);
  }
  c.pos += static_cast<std::size_t>(result.ptr - begin);
  return value;
}

std::string parse_digit_run(Cursor& c, const char* what) {
  const std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) throw parse_error(std::string("expected ") + what, c.pos);
  return std::string(c.text.substr(start, c.pos - start));
}

Rational parse_exact_coefficient(Cursor& c) {
  if (!c.done() && c.peek() == '.') {
    throw mode_error("decimal literals are not exact; use integer/integer (offset " +
                     std::to_string(c.pos) + ")");
  }
  const BigInt numerator(parse_digit_run(c, "an integer coefficient"));
  if (!c.done() && c.peek() == '.') {
    throw mode_error("decimal literals are not exact; use integer/integer (offset " +
                     std::to_string(c.pos) + ")");
  }
  if (!c.done() && c.peek() == '/') {
    ++c.pos;
    const std::size_t den_pos = c.pos;
    const BigInt denominator(parse_digit_run(c, "a denominator"));
    if (denominator == 0) throw parse_error("zero denominator", den_pos);
    return Rational(numerator, denominator);
  }
  return Rational(numerator);
}

template <class S>
Quaternion<S> parse_impl(std::string_view text) {
  Cursor c{text};
  std::array<S, 4> comps = {S(0), S(0), S(0), S(0)};

  c.skip_ws();
  if (c.done()) throw parse_error("empty quaternion literal", c.pos);

  bool first = true;
  while (true) {
    int sign = 1;
    c.skip_ws();
    if (first) {
      if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
      }
    } else {
      if (c.done()) break;
      const char sep = c.peek();
      if (sep != '+' && sep != '-') {
        throw parse_error("expected '+' or '-' between terms", c.pos);
      }
      sign = sep == '-' ? -1 : 1;
      ++c.pos;
    }

    c.skip_ws();
    if (c.done()) throw parse_error("expected a term", c.pos);

    S coefficient(1);
    int slot;
    if (const int bare = unit_slot(c.peek()); bare != 0) {
      slot = bare;
      ++c.pos;
    } else {
      if constexpr (is_exact_v<S>) {
        coefficient = parse_exact_coefficient(c);
      } else {
        coefficient = parse_float_coefficient(c);
      }
      c.skip_ws();
      if (!c.done() && unit_slot(c.peek()) != 0) {
        slot = unit_slot(c.peek());
        ++c.pos;
      } else {
        slot = 0;
      }
    }

    if (sign < 0) coefficient = -coefficient;
    comps[static_cast<std::size_t>(slot)] = comps[static_cast<std::size_t>(slot)] + coefficient;
    first = false;
  }

  return Quaternion<S>(comps[0], comps[1], comps[2], comps[3]);
}

template <class S>
std::string format_impl(const Quaternion<S>& q) {
  static constexpr const char* units[3] = {"i", "j", "k"};
  const std::array<S, 4> comps = {q.re, q.im.x, q.im.y, q.im.z};
  std::string out;
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const S& value = comps[slot];
    if (value == S(0)) continue;
    const bool negative = value < S(0);
    const S magnitude = negative ? -value : value;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (slot == 0) {
      out += format_scalar(magnitude);
    } else {
      if (magnitude != S(1)) out += format_scalar(magnitude);
      out += units[slot - 1];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

std::string format_scalar(double value) {
  std::array<char, 32> buffer;
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string format_scalar(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

std::string format_quaternion(const Quaternion<double>& q) { return format_impl(q); }

std::string format_quaternion(const Quaternion<Rational>& q) { return format_impl(q); }

Quaternion<double> parse_float_quaternion(std::string_view text) {
  return parse_impl<double>(text);
}

Quaternion<Rational> parse_exact_quaternion(std::string_view text) {
  return parse_impl<Rational>(text);
}

}  // namespace quatcomm
