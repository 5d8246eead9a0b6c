#pragma once

// Linear forms with exact rational coefficients and their text grammar:
// integer coefficients, declared variable names, `+`, `-` and an optional `*`,
// e.g. `2w + 3x - 5z`.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sing/polynomial.hpp"

namespace sing {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {}
  static LinearForm from_ints(const std::vector<long>& c) {
    std::vector<mpq_class> q;
    q.reserve(c.size());
    for (long v : c) q.emplace_back(v);
    return LinearForm(std::move(q));
  }
  static LinearForm coordinate(int nvars, int i) {
    std::vector<mpq_class> q(static_cast<std::size_t>(nvars), 0);
    q.at(static_cast<std::size_t>(i)) = 1;
    return LinearForm(std::move(q));
  }

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const mpq_class& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }

  /// True iff one form is a scalar multiple of the other (including zero forms).
  friend bool dependent(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("linear forms over different variable sets");
    for (int i = 0; i < a.nvars(); ++i) {
      for (int j = i + 1; j < a.nvars(); ++j) {
        if (a[i] * b[j] != a[j] * b[i]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }

  /// Scales so coefficients are coprime integers with a positive first nonzero entry.
  LinearForm primitive() const {
    mpz_class den = 1, num = 0;
    for (const auto& c : coeffs_) {
      if (sgn(c) == 0) continue;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpq_class> out;
    for (const auto& c : coeffs_) {
      mpq_class v = c * den;
      out.push_back(v);
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
    }
    if (num == 0) return *this;
    int sign = 0;
    for (const auto& v : out) {
      if (sgn(v) != 0) {
        sign = sgn(v);
        break;
      }
    }
    for (auto& v : out) {
      v /= num;
      if (sign < 0) v = -v;
    }
    return LinearForm(std::move(out));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      mpq_class mag = abs(c);
      if (s.empty()) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      if (mag != 1) s += mag.get_str();
      s += names.at(static_cast<std::size_t>(i));
    }
    return s.empty() ? "0" : s;
  }

  template <class Field>
  Polynomial<Field> to_polynomial(const Ring<Field>& ring) const {
    if (nvars() != ring.nvars()) throw RingError("linear form does not match the ring");
    std::vector<Term<typename Field::Element>> t;
    for (int i = 0; i < nvars(); ++i) {
      if (sgn(coeffs_[static_cast<std::size_t>(i)]) == 0) continue;
      auto c = ring.field().from_rational(coeffs_[static_cast<std::size_t>(i)]);
      if (ring.field().is_zero(c)) continue;
      t.push_back({Monomial::variable(i), c});
    }
    return ring.from_terms(std::move(t));
  }

  /// Parses `text` over the given variable names.  `line` only decorates errors.
  static LinearForm parse(std::string_view text, const std::vector<std::string>& names, int line = 0) {
    std::vector<mpq_class> coeffs(names.size(), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' in \"" + std::string(text) + "\"", line);
      }
      first = false;
      mpz_class coef = 1;
      bool has_coef = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        coef = mpz_class(std::string(text.substr(start, pos - start)));
        has_coef = true;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        }
      }
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        ++pos;
      }
      if (start == pos) {
        if (has_coef) throw ParseError("constant term in linear form \"" + std::string(text) + "\"", line);
        throw ParseError("expected a variable in \"" + std::string(text) + "\"", line);
      }
      std::string var(text.substr(start, pos - start));
      std::size_t idx = names.size();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == var) idx = i;
      }
      if (idx == names.size()) throw ParseError("unknown variable '" + var + "'", line);
      coeffs[idx] += mpq_class(coef) * sign;
      any = true;
    }
    if (!any) throw ParseError("empty linear form", line);
    LinearForm f(std::move(coeffs));
    if (f.is_zero()) throw ParseError("linear form is identically zero", line);
    return f;
  }

 private:
  std::vector<mpq_class> coeffs_;
};

/// Product of linear forms, expanded.
template <class Field>
Polynomial<Field> expand_product(const std::vector<LinearForm>& forms, const Ring<Field>& ring) {
  if (forms.empty()) throw std::invalid_argument("empty product of linear forms");
  auto f = ring.one();
  for (const auto& l : forms) f = ring.mul(f, l.to_polynomial(ring));
  return f;
}

/// Substitutes images[i] for variable i of `source`; the images live in `target`.
template <class Field>
Polynomial<Field> apply_linear_substitution(const Polynomial<Field>& f, const Ring<Field>& source,
                                            const std::vector<LinearForm>& images, const Ring<Field>& target) {
  std::vector<Polynomial<Field>> polys;
  polys.reserve(images.size());
  for (const auto& l : images) polys.push_back(l.to_polynomial(target));
  return source.substitute(f, polys, target);
}

}  // namespace sing
