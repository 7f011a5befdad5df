#include "coxlat/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace coxlat {

int sgn(const Rat& q) { return ::sgn(q); }

std::string rat_str(const Rat& q) { return q.get_str(); }

namespace {

// Dense univariate polynomials over Q, ascending coefficients, no trailing
// zeros (empty vector = zero polynomial).
using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && ::sgn(p.back()) == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly neg(Poly p) {
  for (auto& c : p) c = -c;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Euclidean division a = q*b + r, deg r < deg b.  b must be nonzero.
std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  Poly q;
  trim(a);
  if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
  while (deg(a) >= deg(b)) {
    Rat f = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

Rat eval(const Poly& p, const Rat& x) {
  Rat r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// n-th cyclotomic polynomial via exact division of x^n - 1.
Poly cyclotomic(int n) {
  static std::map<int, Poly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly p(n + 1, Rat(0));
  p[0] = Rat(-1);
  p[n] = Rat(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divrem(p, cyclotomic(d));
    if (!r.empty()) throw InternalError("cyclotomic division left a remainder");
    p = q;
  }
  memo[n] = p;
  return p;
}

// Minimal polynomial of 2cos(pi/m): fold the palindromic cyclotomic Phi_{2m}
// through y = x + 1/x, using x^i + x^-i = p_i(y) with p_0 = 2, p_1 = y,
// p_{i+1} = y*p_i - p_{i-1}.
Poly min_poly_two_cos(int m) {
  Poly phi = cyclotomic(2 * m);
  int d2 = deg(phi);
  if (d2 % 2 != 0) throw InternalError("cyclotomic of odd degree");
  int k = d2 / 2;
  for (int i = 0; i <= d2; ++i)
    if (phi[i] != phi[d2 - i]) throw InternalError("cyclotomic not palindromic");
  std::vector<Poly> p(k + 1);
  p[0] = {Rat(2)};
  if (k >= 1) p[1] = {Rat(0), Rat(1)};
  for (int i = 2; i <= k; ++i) {
    Poly shifted(p[i - 1].size() + 1, Rat(0));
    for (size_t j = 0; j < p[i - 1].size(); ++j) shifted[j + 1] = p[i - 1][j];
    Poly r = shifted;
    for (size_t j = 0; j < p[i - 2].size(); ++j) r[j] -= p[i - 2][j];
    trim(r);
    p[i] = r;
  }
  Poly out = {phi[k]};
  for (int i = 1; i <= k; ++i) {
    Poly term = p[i];
    for (auto& c : term) c *= phi[k + i];
    out.resize(std::max(out.size(), term.size()), Rat(0));
    for (size_t j = 0; j < term.size(); ++j) out[j] += term[j];
  }
  trim(out);
  if (out.back() != 1) throw InternalError("folded minimal polynomial not monic");
  return out;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  chain.push_back(f);
  chain.push_back(derivative(f));
  while (!chain.back().empty() && deg(chain.back()) > 0) {
    auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.empty()) break;
    chain.push_back(neg(r));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int v = 0, prev = 0;
  for (const auto& p : chain) {
    int s = ::sgn(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int count_roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Isolate the largest real root of a squarefree polynomial inside (-2, 2),
// then tighten the isolating interval below width 2^-8.
std::pair<Rat, Rat> isolate_largest_root(const Poly& f, const std::vector<Poly>& chain) {
  std::vector<std::pair<Rat, Rat>> stack{{Rat(-2), Rat(2)}};
  std::vector<std::pair<Rat, Rat>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (::sgn(eval(f, a)) == 0 || ::sgn(eval(f, b)) == 0)
      throw InternalError("isolating endpoint hits a root");
    int c = count_roots_in(chain, a, b);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rat m = (a + b) / 2;
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  if (isolated.empty()) throw InternalError("no real root found in (-2, 2)");
  auto best = *std::max_element(isolated.begin(), isolated.end(),
                                [](const auto& x, const auto& y) { return x.second < y.second; });
  Rat lo = best.first, hi = best.second;
  Rat width_cap(1, 256);
  while (hi - lo > width_cap) {
    Rat m = (lo + hi) / 2;
    if (::sgn(eval(f, m)) == 0) throw InternalError("rational root of irreducible polynomial");
    if (count_roots_in(chain, lo, m) == 1)
      hi = m;
    else
      lo = m;
  }
  return {lo, hi};
}

// Interval evaluation of a polynomial over [lo, hi] by interval Horner.
struct Interval {
  Rat lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Interval eval_interval(const std::vector<Rat>& p, const Interval& x) {
  Interval r{Rat(0), Rat(0)};
  for (size_t i = p.size(); i-- > 0;) {
    r = imul(r, x);
    r.lo += p[i];
    r.hi += p[i];
  }
  return r;
}

}  // namespace

NumberField::NumberField(int m, std::vector<Rat> min_poly)
    : m_(m), min_poly_(std::move(min_poly)) {
  const int d = degree();
  Poly f(min_poly_);
  sturm_ = sturm_chain(f);
  if (d == 1) {
    // Rational presentation: theta = -c0 exactly.
    Rat root = -min_poly_[0];
    lo_ = root - Rat(1, 2);
    hi_ = root + Rat(1, 2);
    theta_double_ = root.get_d();
  } else {
    auto [lo, hi] = isolate_largest_root(f, sturm_);
    lo_ = lo;
    hi_ = hi;
    // Tighten once to 2^-64 for the cached double approximation.
    Rat a = lo_, b = hi_;
    Rat cap(mpz_class(1), mpz_class(1) << 64);
    while (b - a > cap) {
      Rat mid = (a + b) / 2;
      if (::sgn(eval(f, mid)) == 0) throw InternalError("rational root of irreducible polynomial");
      if (count_roots_in(sturm_, a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    Rat mid = (a + b) / 2;
    theta_double_ = mid.get_d();
  }
  // Reduction rows: theta^(d+k) for k = 0..d-2 in the power basis.
  if (d >= 2) {
    std::vector<Rat> row(d);
    for (int i = 0; i < d; ++i) row[i] = -min_poly_[i];
    red_.push_back(row);
    for (int k = 1; k <= d - 2; ++k) {
      std::vector<Rat> next(d, Rat(0));
      for (int i = 0; i < d - 1; ++i) next[i + 1] = row[i];
      Rat top = row[d - 1];
      for (int i = 0; i < d; ++i) next[i] += top * red_[0][i];
      red_.push_back(next);
      row = next;
    }
  }
}

int NumberField::count_roots(const Rat& a, const Rat& b) const {
  return count_roots_in(sturm_, a, b);
}

struct FieldRegistry {
  std::mutex mtx;
  std::map<int, std::unique_ptr<NumberField>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const NumberField& get(int m) {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = fields.find(m);
    if (it != fields.end()) return *it->second;
    Poly mp = min_poly_two_cos(m);
    if (deg(mp) == 1) {
      // Degree-one extensions are Q itself.
      auto rat = fields.find(3);
      if (rat == fields.end()) {
        fields.emplace(3, std::unique_ptr<NumberField>(
                              new NumberField(3, {Rat(-1), Rat(1)})));
        rat = fields.find(3);
      }
      if (m != 3) return *rat->second;
      return *rat->second;
    }
    auto res = fields.emplace(m, std::unique_ptr<NumberField>(new NumberField(m, mp)));
    return *res.first->second;
  }
};

const NumberField& NumberField::rationals() { return FieldRegistry::instance().get(3); }

const NumberField& NumberField::cos_field(int m) {
  if (m < 2 || m > 30)
    throw Error("cos_field: generator order m = " + std::to_string(m) +
                " is outside the supported table (2 <= m <= 30)");
  if (m == 2) return rationals();
  return FieldRegistry::instance().get(m);
}

FieldElement::FieldElement() : fld_(&NumberField::rationals()), c_(1, Rat(0)) {}

FieldElement::FieldElement(const NumberField& f) : fld_(&f), c_(f.degree(), Rat(0)) {}

FieldElement::FieldElement(const NumberField& f, Rat c0) : fld_(&f), c_(f.degree(), Rat(0)) {
  c0.canonicalize();
  c_[0] = std::move(c0);
}

FieldElement::FieldElement(const NumberField& f, long c0) : FieldElement(f, Rat(c0)) {}

FieldElement FieldElement::theta(const NumberField& f) {
  FieldElement e(f);
  if (f.degree() == 1)
    e.c_[0] = -f.min_poly()[0];
  else
    e.c_[1] = Rat(1);
  return e;
}

FieldElement FieldElement::from_coeffs(const NumberField& f, std::vector<Rat> c) {
  if (static_cast<int>(c.size()) != f.degree())
    throw Error("from_coeffs: coefficient vector has wrong length");
  FieldElement e(f);
  e.c_ = std::move(c);
  for (auto& q : e.c_) q.canonicalize();
  return e;
}

bool FieldElement::is_zero() const {
  for (const auto& q : c_)
    if (::sgn(q) != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (::sgn(c_[i]) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (::sgn(c_[i]) != 0) return false;
  return true;
}

const Rat& FieldElement::rational_value() const {
  if (!is_rational()) throw Error("rational_value: element is not rational");
  return c_[0];
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (fld_ != o.fld_) throw Error("arithmetic across distinct number fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void FieldElement::reduce(std::vector<Rat>& prod) const {
  const int d = fld_->degree();
  for (int k = static_cast<int>(prod.size()) - 1; k >= d; --k) {
    if (::sgn(prod[k]) == 0) continue;
    const auto& row = fld_->red_[k - d];
    for (int i = 0; i < d; ++i) prod[i] += prod[k] * row[i];
    prod[k] = 0;
  }
  prod.resize(d);
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const int d = fld_->degree();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (::sgn(c_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (::sgn(o.c_[j]) == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce(prod);
  c_ = std::move(prod);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rat& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero in number field");
  const int d = fld_->degree();
  if (d == 1) {
    FieldElement r(*fld_);
    r.c_[0] = Rat(1) / c_[0];
    return r;
  }
  // Extended Euclid over Q[x]: u*a + v*minpoly = gcd = nonzero constant.
  Poly a(c_);
  trim(a);
  Poly b(fld_->min_poly());
  Poly u0{Rat(1)}, u1{};
  Poly r0 = a, r1 = b;
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    Poly u2 = u0;
    Poly qu = mul(q, u1);
    u2.resize(std::max(u2.size(), qu.size()), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
  }
  if (deg(r0) != 0) throw InternalError("minimal polynomial is not coprime to element");
  Rat g = r0[0];
  std::vector<Rat> inv(d, Rat(0));
  for (size_t i = 0; i < u0.size() && i < inv.size(); ++i) inv[i] = u0[i] / g;
  FieldElement r(*fld_);
  r.c_ = std::move(inv);
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (fld_ != o.fld_) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (fld_->degree() == 1 || is_rational()) return ::sgn(c_[0]);
  Interval x{fld_->interval_lo(), fld_->interval_hi()};
  const auto& f = fld_->min_poly();
  for (int iter = 0; iter < 256; ++iter) {
    Interval v = eval_interval(c_, x);
    if (::sgn(v.lo) > 0) return 1;
    if (::sgn(v.hi) < 0) return -1;
    Rat mid = (x.lo + x.hi) / 2;
    Rat fm = eval(f, mid);
    if (::sgn(fm) == 0) throw InternalError("rational root of irreducible polynomial");
    if (::sgn(eval(f, x.lo)) * ::sgn(fm) < 0)
      x.hi = mid;
    else
      x.lo = mid;
  }
  throw InternalError("sign bisection exceeded 256 iterations");
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (::sgn(c_[k]) == 0) continue;
    Rat a = c_[k];
    bool negative = ::sgn(a) < 0;
    if (negative) a = -a;
    std::string t;
    if (k == 0) {
      t = a.get_str();
    } else {
      std::string power = (k == 1) ? "t" : "t^" + std::to_string(k);
      t = (a == 1) ? power : a.get_str() + "*" + power;
    }
    if (s.empty())
      s = (negative ? "-" : "") + t;
    else
      s += (negative ? "-" : "+") + t;
  }
  return s;
}

std::string FieldElement::key() const {
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) s.push_back(',');
    s += c_[k].get_str();
  }
  return s;
}

double FieldElement::to_double() const {
  double t = fld_->theta_double();
  double r = 0.0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i].get_d();
  return r;
}

}  // namespace coxlat
