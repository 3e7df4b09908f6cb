#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace codecalc {

/// Exponent vector of a monomial in x_1 .. x_n.
using Monomial = std::vector<int>;

/// Multivariate polynomial over Z with GMP coefficients. Terms are kept in a
/// lexicographically ordered map and zero coefficients are never stored, so
/// structural equality is polynomial equality.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::size_t variables = 0) : variables_(variables) {}

  static IntPolynomial constant(std::size_t variables, const mpz_class& c);
  /// x_index (1-based).
  static IntPolynomial variable(std::size_t variables, std::size_t index);
  static IntPolynomial monomial(const Monomial& exponents, const mpz_class& c);

  std::size_t variables() const { return variables_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }

  /// Coefficient of `exponents`, 0 if absent.
  mpz_class coefficient(const Monomial& exponents) const;

  void add_term(const Monomial& exponents, const mpz_class& c);

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  /// Quotient of an exact division (lex-order multivariate division).
  /// Throws InvariantError if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Canonical text: terms in graded-lex order, highest first, each with an
  /// explicit coefficient, e.g. "1*x1^2*x2 + 1*x1*x2^2"; "0" for zero.
  std::string render() const;

 private:
  void check_compatible(const IntPolynomial& other) const;

  std::size_t variables_;
  std::map<Monomial, mpz_class> terms_;
};

}  // namespace codecalc
