#pragma once

// Exact rational scalars.  Rat is GMP's mpq_class: arbitrary-precision,
// always canonical (lowest terms, positive denominator).  This header adds
// the string form used throughout the project: "p" for integers, "p/q"
// otherwise, both exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace frobkit {

using Rat = mpq_class;

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q"
/// with q > 0 and gcd(p, q) = 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parse "p" or "p/q" (optional leading sign on p; q > 0 after
/// canonicalization).  Returns nullopt for anything else, including a zero
/// denominator, embedded whitespace, or trailing junk.
inline std::optional<Rat> rat_parse(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = s, den = "1";
  if (std::size_t slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  std::string_view num_body = num;
  bool negative = false;
  if (!num_body.empty() && (num_body[0] == '-' || num_body[0] == '+')) {
    negative = num_body[0] == '-';
    num_body.remove_prefix(1);
  }
  if (!digits(num_body) || !digits(den)) return std::nullopt;
  mpz_class p{std::string(num_body)};
  if (negative) p = -p;
  mpz_class q{std::string(den)};
  if (sgn(q) == 0) return std::nullopt;
  Rat r{p, q};
  r.canonicalize();
  return r;
}

}  // namespace frobkit
