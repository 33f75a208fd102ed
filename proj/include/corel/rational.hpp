#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace corel {

/// Exact rational scalar backed by GMP. GMP keeps every value canonical
/// (lowest terms, positive denominator), so equality is plain value equality
/// and ranks computed downstream are exact, never "numerically" exact.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses a rational literal: optional sign, a digit run, optionally "/"
/// followed by a nonzero digit run. Anything else yields nullopt, including
/// "3/0", "1/-2", embedded spaces and empty input. Results are canonical,
/// so parse_rational("4/6") == parse_rational("2/3").
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const auto scan_digits = [&text](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  const std::size_t num_end = scan_digits(i);
  if (num_end == i) return std::nullopt;
  mpz_class num(std::string(text.substr(i, num_end - i)), 10);
  mpz_class den(1);
  if (num_end != text.size()) {
    if (text[num_end] != '/') return std::nullopt;
    const std::size_t den_end = scan_digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) return std::nullopt;
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)), 10);
    if (sgn(den) == 0) return std::nullopt;
  }
  if (negative) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace corel
