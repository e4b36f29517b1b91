// SPDX-License-Identifier: Apache-2.0
#include "bruhat/polynomial.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace bruhat {

Exponent staircase(int n) {
  Exponent rho(n > 0 ? static_cast<std::size_t>(n - 1) : 0);
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = n - 1 - static_cast<int>(i);
  return rho;
}

bool under_staircase(const Exponent& alpha, int n) {
  if (n < 1 || alpha.size() != static_cast<std::size_t>(n - 1)) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || alpha[i] > n - 1 - static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

void collect_monomials(const Exponent& bound, std::size_t pos, int remaining, Exponent& current,
                       std::vector<Exponent>& out) {
  if (pos == bound.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  int tail = 0;
  for (std::size_t k = pos + 1; k < bound.size(); ++k) tail += bound[k];
  for (int a = std::min(bound[pos], remaining); a >= 0 && remaining - a <= tail; --a) {
    current[pos] = a;
    collect_monomials(bound, pos + 1, remaining - a, current, out);
  }
  current[pos] = 0;
}

void accumulate(TermMap& terms, const Exponent& alpha, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int degree_of(const Exponent& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

std::optional<int> common_degree(const TermMap& terms) {
  if (terms.empty()) return std::nullopt;
  const int d = degree_of(terms.begin()->first);
  for (const auto& [alpha, c] : terms) {
    if (degree_of(alpha) != d) return std::nullopt;
  }
  return d;
}

void append_power(std::string& out, char var, std::size_t index, int power) {
  if (power == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  out += std::to_string(index + 1);
  if (power > 1) out += "^" + std::to_string(power);
}

// Shared renderer; rho is empty for unpadded polynomials.
std::string render(const TermMap& terms, const Exponent& rho) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [alpha, c] = *it;
    std::string monomial;
    for (std::size_t i = 0; i < alpha.size(); ++i) append_power(monomial, 'x', i, alpha[i]);
    for (std::size_t i = 0; i < rho.size(); ++i) append_power(monomial, 'y', i, rho[i] - alpha[i]);
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (monomial.empty()) {
      out += to_decimal(mag);
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += to_decimal(mag) + "*" + monomial;
    }
  }
  return out;
}

std::string render_json(const TermMap& terms) {
  nlohmann::ordered_json doc;
  auto list = nlohmann::ordered_json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    list.push_back({{"alpha", it->first}, {"coeff", to_decimal(it->second)}});
  }
  doc["terms"] = std::move(list);
  return doc.dump();
}

void check_staircase(const Exponent& alpha, int n) {
  if (!under_staircase(alpha, n)) {
    throw std::invalid_argument("exponent vector outside the staircase for n = " + std::to_string(n));
  }
}

}  // namespace

std::vector<Exponent> staircase_monomials(int n, int k) {
  const Exponent rho = staircase(n);
  std::vector<Exponent> out;
  if (k < 0 || k > max_length(n)) return out;
  Exponent current(rho.size(), 0);
  collect_monomials(rho, 0, k, current, out);
  return out;
}

IntPolynomial IntPolynomial::constant(int n, const BigInt& c) {
  IntPolynomial p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n - 1), 0), c);
  return p;
}

IntPolynomial IntPolynomial::monomial(int n, const Exponent& alpha, const BigInt& c) {
  IntPolynomial p(n);
  p.add_term(alpha, c);
  return p;
}

void IntPolynomial::add_term(const Exponent& alpha, const BigInt& c) {
  check_staircase(alpha, n_);
  accumulate(terms_, alpha, c);
}

std::optional<int> IntPolynomial::homogeneous_degree() const { return common_degree(terms_); }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomials over different n");
  for (const auto& [alpha, c] : other.terms_) accumulate(terms_, alpha, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomials over different n");
  for (const auto& [alpha, c] : other.terms_) accumulate(terms_, alpha, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

std::string IntPolynomial::to_string() const { return render(terms_, {}); }
std::string IntPolynomial::to_json() const { return render_json(terms_); }

PaddedPolynomial PaddedPolynomial::monomial(int n, const Exponent& alpha, const BigInt& c) {
  PaddedPolynomial p(n);
  p.add_term(alpha, c);
  return p;
}

void PaddedPolynomial::add_term(const Exponent& alpha, const BigInt& c) {
  check_staircase(alpha, n_);
  accumulate(terms_, alpha, c);
}

std::optional<int> PaddedPolynomial::homogeneous_degree() const { return common_degree(terms_); }

PaddedPolynomial& PaddedPolynomial::operator+=(const PaddedPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("polynomials over different n");
  for (const auto& [alpha, c] : other.terms_) accumulate(terms_, alpha, c);
  return *this;
}

PaddedPolynomial& PaddedPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

std::string PaddedPolynomial::to_string() const { return render(terms_, staircase(n_)); }
std::string PaddedPolynomial::to_json() const { return render_json(terms_); }

PaddedPolynomial pad(const IntPolynomial& p) {
  PaddedPolynomial out(p.n());
  for (const auto& [alpha, c] : p.terms()) out.add_term(alpha, c);
  return out;
}

IntPolynomial unpad(const PaddedPolynomial& p) {
  IntPolynomial out(p.n());
  for (const auto& [alpha, c] : p.terms()) out.add_term(alpha, c);
  return out;
}

BigInt principal_specialization(const IntPolynomial& p) {
  BigInt sum = 0;
  for (const auto& [alpha, c] : p.terms()) sum += c;
  return sum;
}

PaddedPolynomial apply_nabla(const PaddedPolynomial& p) {
  PaddedPolynomial out(p.n());
  for (const auto& [alpha, c] : p.terms()) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      Exponent lowered = alpha;
      --lowered[i];
      out.add_term(lowered, c * alpha[i]);
    }
  }
  return out;
}

PaddedPolynomial apply_delta(const PaddedPolynomial& p) {
  const Exponent rho = staircase(p.n());
  PaddedPolynomial out(p.n());
  for (const auto& [alpha, c] : p.terms()) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const int room = rho[i] - alpha[i];
      if (room == 0) continue;
      Exponent raised = alpha;
      ++raised[i];
      out.add_term(raised, c * room);
    }
  }
  return out;
}

IntPolynomial divided_difference(int i, const IntPolynomial& p) {
  const int n = p.n();
  if (i < 1 || i > n - 1) throw std::out_of_range("divided difference index out of range");
  const std::size_t a = static_cast<std::size_t>(i - 1);  // slot of x_i
  const std::size_t b = a + 1;                            // slot of x_{i+1}

  // Numerator p - s_i p over x_1..x_n; the extra slot holds x_n.
  TermMap numerator;
  for (const auto& [alpha, c] : p.terms()) {
    Exponent ext = alpha;
    ext.push_back(0);
    Exponent swapped = ext;
    std::swap(swapped[a], swapped[b]);
    accumulate(numerator, ext, c);
    accumulate(numerator, swapped, -c);
  }

  // Synthetic division by x_i - x_{i+1}: peel off the highest power of x_i.
  // c x^beta = (x_i - x_{i+1}) c x^(beta - e_i) + c x^(beta - e_i + e_{i+1}).
  TermMap quotient;
  while (true) {
    auto lead = numerator.end();
    for (auto it = numerator.begin(); it != numerator.end(); ++it) {
      if (it->first[a] > 0 && (lead == numerator.end() || it->first[a] > lead->first[a])) lead = it;
    }
    if (lead == numerator.end()) break;
    Exponent beta = lead->first;
    const BigInt c = lead->second;
    numerator.erase(lead);
    --beta[a];
    accumulate(quotient, beta, c);
    ++beta[b];
    accumulate(numerator, beta, c);
  }
  if (!numerator.empty()) {
    throw std::logic_error("divided difference left a nonzero remainder");
  }

  IntPolynomial out(n);
  for (auto& [ext, c] : quotient) {
    if (ext.back() != 0) throw std::logic_error("divided difference produced x_n");
    Exponent alpha(ext.begin(), ext.end() - 1);
    out.add_term(alpha, c);
  }
  return out;
}

}  // namespace bruhat
