#include "codecalc/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "codecalc/errors.hpp"

namespace codecalc {

IntPolynomial IntPolynomial::constant(std::size_t variables, const mpz_class& c) {
  IntPolynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t variables, std::size_t index) {
  if (index < 1 || index > variables) {
    throw DomainError("variable index out of range");
  }
  Monomial e(variables, 0);
  e[index - 1] = 1;
  return monomial(e, 1);
}

IntPolynomial IntPolynomial::monomial(const Monomial& exponents, const mpz_class& c) {
  IntPolynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

mpz_class IntPolynomial::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial::add_term(const Monomial& exponents, const mpz_class& c) {
  if (exponents.size() != variables_) {
    throw DomainError("monomial has the wrong number of variables");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw DomainError("negative exponent in polynomial term");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntPolynomial::check_compatible(const IntPolynomial& other) const {
  if (variables_ != other.variables_) {
    throw DomainError("polynomials over different variable counts");
  }
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_compatible(b);
  IntPolynomial out(a.variables_);
  Monomial e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  IntPolynomial out(p.variables_);
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");

  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  IntPolynomial remainder = *this;
  IntPolynomial quotient(variables_);
  Monomial shift(variables_);
  Monomial e(variables_);

  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.rbegin();
    bool divisible = true;
    for (std::size_t v = 0; v < variables_; ++v) {
      shift[v] = re[v] - lead_e[v];
      if (shift[v] < 0) divisible = false;
    }
    if (!divisible || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw InvariantError("polynomial division is not exact");
    }
    const mpz_class factor = rc / lead_c;
    quotient.add_term(shift, factor);
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t v = 0; v < variables_; ++v) e[v] = de[v] + shift[v];
      remainder.add_term(e, -factor * dc);
    }
  }
  return quotient;
}

std::string IntPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, mpz_class>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0L); };
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const long da = degree(a->first);
    const long db = degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const mpz_class& c = t->second;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    mpz_class mag = abs(c);
    out += mag.get_str();
    for (std::size_t v = 0; v < variables_; ++v) {
      const int power = t->first[v];
      if (power == 0) continue;
      out += "*x" + std::to_string(v + 1);
      if (power != 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

}  // namespace codecalc
