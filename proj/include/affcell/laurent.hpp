#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace affcell {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Z[v, v^-1]: sparse exponent -> coefficient map. Zero coefficients are never
// stored, so the zero polynomial is the empty map and operator== is structural.
class LaurentPoly {
public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c) {
    if (c != 0) terms_.emplace(0, c);
  }
  explicit LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace(0, c);
  }

  static LaurentPoly monomial(const mpz_class& c, int e) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }
  static LaurentPoly v(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  mpz_class coeff_at(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  // nullopt for the zero polynomial; deliberately not a numeric sentinel
  std::optional<int> max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }
  std::optional<int> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // the ring involution v -> v^-1
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  mpz_class evaluate_at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const bool neg = it->second < 0;
      if (out.empty()) {
        if (neg) out += '-';
      } else {
        out += neg ? " - " : " + ";
      }
      mpz_class a = abs(it->second);
      out += a.get_str();
      if (it->first != 0) out += "*v^" + std::to_string(it->first);
    }
    return out;
  }

  // Accepts sums of c*v^e terms, e.g. "1*v^1 + 1*v^-1", "-v^2+3", "0".
  // Whitespace is insignificant.
  static LaurentPoly parse(const std::string& input) {
    std::string s;
    for (char ch : input)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw FormatError("empty coefficient string");
    LaurentPoly out;
    size_t i = 0;
    const size_t n = s.size();
    auto read_digits = [&](const char* what) {
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start)
        throw FormatError(std::string("expected digits in ") + what + ": " + input);
      return s.substr(start, i - start);
    };
    bool first = true;
    while (i < n) {
      bool negative = false;
      if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
      } else if (!first) {
        throw FormatError("expected + or - between terms: " + input);
      }
      mpz_class coeff = 1;
      bool have_coeff = false;
      if (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = mpz_class(read_digits("coefficient"));
        have_coeff = true;
        if (i < n && s[i] == '*') {
          ++i;
          if (i >= n || s[i] != 'v')
            throw FormatError("expected v after '*': " + input);
        }
      }
      int expo = 0;
      bool have_v = false;
      if (i < n && s[i] == 'v') {
        have_v = true;
        ++i;
        expo = 1;
        if (i < n && s[i] == '^') {
          ++i;
          bool eneg = false;
          if (i < n && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
          }
          try {
            expo = std::stoi(read_digits("exponent"));
          } catch (const std::out_of_range&) {
            throw FormatError("exponent out of range: " + input);
          }
          if (eneg) expo = -expo;
        }
      }
      if (!have_coeff && !have_v)
        throw FormatError("malformed term: " + input);
      if (negative) coeff = -coeff;
      out.add_term(expo, coeff);
      first = false;
    }
    return out;
  }

private:
  Terms terms_;

  void add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
};

}  // namespace affcell
