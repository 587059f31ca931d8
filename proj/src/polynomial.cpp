#include "supertree/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "supertree/error.hpp"

namespace supertree {

namespace {

using RationalCoeffs = std::vector<Rational>;

void trim_rational(RationalCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Multiplies by the positive lcm of the denominators, then removes content.
Polynomial clear_denominators(const RationalCoeffs& c) {
  BigInt lcm = 1;
  for (const auto& q : c) {
    const BigInt d = boost::multiprecision::denominator(q);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(c.size());
  for (const auto& q : c) {
    out.push_back(boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q)));
  }
  return Polynomial(std::move(out)).primitive();
}

RationalCoeffs to_rational(const Polynomial& p) {
  RationalCoeffs out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

std::pair<RationalCoeffs, RationalCoeffs> divmod(RationalCoeffs a, const RationalCoeffs& b) {
  const int db = static_cast<int>(b.size()) - 1;
  RationalCoeffs q;
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - db, Rational(0));
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim_rational(a);
  }
  trim_rational(q);
  return {std::move(q), std::move(a)};
}

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(BigInt c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, BigInt(0));
  coeffs.back() = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const BigInt& c) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  const Rational v = evaluate(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int Polynomial::sign_at_infinity() const {
  if (is_zero()) return 0;
  return leading() > 0 ? 1 : -1;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  if (g < 0) g = -g;
  if (g == 1) return *this;
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c /= g;
  return Polynomial(std::move(out));
}

BigInt Polynomial::root_bound() const {
  if (degree() <= 0) return 1;
  // Cauchy: |z| < 1 + max |c_i / c_lead|.
  BigInt lead = abs(leading());
  BigInt best = 0;
  for (int i = 0; i < degree(); ++i) {
    BigInt c = abs(coeffs_[i]);
    BigInt q = c / lead + (c % lead != 0 ? 1 : 0);
    best = std::max(best, q);
  }
  return best + 1;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

DivisionResult divide_scaled(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::BadParams, "polynomial division by zero");
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  return {clear_denominators(q), clear_denominators(r)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  RationalCoeffs x = to_rational(a);
  RationalCoeffs y = to_rational(b);
  while (!y.empty()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  Polynomial g = clear_denominators(x);
  if (!g.is_zero() && g.leading() < 0) g = -g;
  return g;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.empty()) throw Error(ErrorCode::BadParams, "exact_quotient: divisor does not divide");
  std::vector<BigInt> out;
  for (const auto& c : q) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw Error(ErrorCode::BadParams, "exact_quotient: quotient is not integral");
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return Polynomial(std::move(out));
}

std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  // Yun's algorithm over Q, with primitive integer representatives.
  std::vector<Polynomial> factors;
  if (p.degree() <= 0) return factors;
  const Polynomial f = p.primitive();
  const Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = exact_quotient(f, a);
  Polynomial c = exact_quotient(fp, a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    Polynomial nb = exact_quotient(b, g);
    Polynomial nc = exact_quotient(d, g);
    b = nb;
    d = nc - b.derivative();
  }
  return factors;
}

Polynomial sign_change_part(const Polynomial& p) {
  Polynomial out(std::vector<BigInt>{1});
  const auto factors = squarefree_factors(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) out = out * factors[i];
  return out.primitive();
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::BadParams, "Sturm sequence of the zero polynomial");
  // Working with the square-free part keeps the count right when an
  // endpoint is a repeated root, where every member of p's own chain vanishes.
  const Polynomial g = gcd(p, p.derivative());
  const Polynomial base = g.degree() > 0 ? exact_quotient(p, g).primitive() : p.primitive();
  chain_.push_back(base);
  Polynomial next = base.derivative().primitive();
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& n = chain_.size();
    next = -divide_scaled(chain_[n - 2], chain_[n - 1]).remainder;
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.sign_at_infinity());
  return count_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_roots_above(const Rational& a) const {
  return variations_at(a) - variations_at_infinity();
}

std::optional<RootBracket> bracket_largest_root(const Polynomial& p, Rational lo, Rational hi,
                                                const Rational& width) {
  const SturmSequence sturm(p);
  if (sturm.count_roots_above(hi) != 0) {
    throw Error(ErrorCode::BadParams, "bracket upper end lies below a real root");
  }
  if (sturm.count_roots(lo, hi) == 0) return std::nullopt;
  RootBracket br{std::move(lo), std::move(hi), false};
  if (p.sign_at(br.hi) == 0 && sturm.count_roots_above(br.hi) == 0) {
    // The largest root is hi itself; nothing lies above it.
    br.exact = true;
    br.lo = br.hi;
    return br;
  }
  while (!br.exact && (br.hi - br.lo > width || sturm.count_roots(br.lo, br.hi) > 1)) {
    br = refine(p, sturm, br);
  }
  return br;
}

RootBracket refine(const Polynomial& p, const SturmSequence& sturm, RootBracket br) {
  if (br.exact) return br;
  const Rational mid = (br.lo + br.hi) / 2;
  if (sturm.count_roots(mid, br.hi) >= 1) {
    br.lo = mid;
  } else if (p.sign_at(mid) == 0) {
    br.lo = br.hi = mid;
    br.exact = true;
  } else {
    br.hi = mid;
  }
  return br;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace supertree
