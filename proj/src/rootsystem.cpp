#include "coxlat/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace coxlat {

namespace {

std::vector<std::vector<int>> blank_cox(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_edge(std::vector<std::vector<int>>& m, int i, int j, int label) {
  m[i][j] = label;
  m[j][i] = label;
}

const NumberField& field_for_labels(const std::vector<std::vector<int>>& cox) {
  std::set<int> big;
  for (size_t i = 0; i < cox.size(); ++i)
    for (size_t j = i + 1; j < cox.size(); ++j)
      if (cox[i][j] > 3) big.insert(cox[i][j]);
  if (big.empty()) return NumberField::rationals();
  if (big.size() > 1) throw Error("Coxeter matrix needs more than one quadratic extension");
  return NumberField::cos_field(*big.begin());
}

void validate_cox(const std::vector<std::vector<int>>& cox) {
  int n = static_cast<int>(cox.size());
  if (n == 0) throw Error("empty Coxeter matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cox[i].size()) != n) throw Error("Coxeter matrix is not square");
    if (cox[i][i] != 1) throw Error("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (cox[i][j] != cox[j][i]) throw Error("Coxeter matrix is not symmetric");
      if (i != j && cox[i][j] < 2) throw Error("off-diagonal Coxeter entries must be >= 2");
    }
  }
  // Connectivity (irreducibility).
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && cox[v][w] >= 3) {
        seen[w] = true;
        q.push_back(w);
      }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v] && n > 1) throw Error("Coxeter graph is not connected (reducible type)");
}

}  // namespace

CoxeterDatum parse_type(const std::string& symbol) {
  auto fail = [&]() -> CoxeterDatum {
    throw Error("unrecognised type symbol '" + symbol + "'");
  };
  if (symbol.size() < 2) fail();
  char letter = symbol[0];

  // Dihedral grammar I2(m).
  if (letter == 'I') {
    if (symbol.size() < 5 || symbol.substr(0, 3) != "I2(" || symbol.back() != ')') fail();
    std::string inner = symbol.substr(3, symbol.size() - 4);
    if (inner.empty() || !std::all_of(inner.begin(), inner.end(), ::isdigit)) fail();
    int m = std::stoi(inner);
    if (m < 3) throw Error("I2(m) requires m >= 3");
    auto cox = blank_cox(2);
    set_edge(cox, 0, 1, m);
    return CoxeterDatum{symbol, 2, cox, &NumberField::cos_field(m)};
  }

  std::string digits = symbol.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) fail();
  int n = std::stoi(digits);
  auto path = [&](int rank) {
    auto cox = blank_cox(rank);
    for (int i = 0; i + 1 < rank; ++i) set_edge(cox, i, i + 1, 3);
    return cox;
  };

  switch (letter) {
    case 'A': {
      if (n < 1) throw Error("A_n requires n >= 1");
      return CoxeterDatum{symbol, n, path(n), &NumberField::rationals()};
    }
    case 'B':
    case 'C': {
      // Unit-root geometry: B and C coincide.
      if (n < 2) throw Error("B_n requires n >= 2");
      auto cox = path(n);
      set_edge(cox, 0, 1, 4);
      return CoxeterDatum{symbol, n, cox, &NumberField::cos_field(4)};
    }
    case 'D': {
      if (n < 4) throw Error("D_n requires n >= 4");
      auto cox = blank_cox(n);
      for (int i = 0; i + 1 < n - 2; ++i) set_edge(cox, i, i + 1, 3);
      set_edge(cox, n - 3, n - 2, 3);
      set_edge(cox, n - 3, n - 1, 3);
      return CoxeterDatum{symbol, n, cox, &NumberField::rationals()};
    }
    case 'E': {
      if (n < 6 || n > 8) throw Error("E_n requires 6 <= n <= 8");
      auto cox = blank_cox(n);
      set_edge(cox, 0, 2, 3);
      set_edge(cox, 1, 3, 3);
      set_edge(cox, 2, 3, 3);
      for (int i = 3; i + 1 < n; ++i) set_edge(cox, i, i + 1, 3);
      return CoxeterDatum{symbol, n, cox, &NumberField::rationals()};
    }
    case 'F': {
      if (n != 4) throw Error("F_n requires n = 4");
      auto cox = path(4);
      set_edge(cox, 1, 2, 4);
      return CoxeterDatum{symbol, 4, cox, &NumberField::cos_field(4)};
    }
    case 'G': {
      if (n != 2) throw Error("G_n requires n = 2");
      auto cox = blank_cox(2);
      set_edge(cox, 0, 1, 6);
      return CoxeterDatum{symbol, 2, cox, &NumberField::cos_field(6)};
    }
    case 'H': {
      if (n < 3 || n > 4) throw Error("H_n requires n = 3 or 4");
      auto cox = path(n);
      set_edge(cox, n - 2, n - 1, 5);
      return CoxeterDatum{symbol, n, cox, &NumberField::cos_field(5)};
    }
    default:
      fail();
  }
  return {};
}

CoxeterDatum datum_from_matrix(std::string label, std::vector<std::vector<int>> cox) {
  validate_cox(cox);
  const NumberField& f = field_for_labels(cox);
  return CoxeterDatum{std::move(label), static_cast<int>(cox.size()), std::move(cox), &f};
}

Bipartition bipartition(const CoxeterDatum& datum) {
  int n = datum.rank;
  std::vector<int> colour(n, -1);
  for (int start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<int> q{start};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w = 0; w < n; ++w) {
        if (w == v || datum.cox[v][w] == 2) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          q.push_back(w);
        } else if (colour[w] == colour[v]) {
          throw Error("Coxeter graph is not 2-colourable");
        }
      }
    }
  }
  Bipartition bip;
  int first = colour[0];
  for (int v = 0; v < n; ++v)
    if (colour[v] == first) bip.order.push_back(v);
  bip.split = static_cast<int>(bip.order.size());
  for (int v = 0; v < n; ++v)
    if (colour[v] != first) bip.order.push_back(v);
  return bip;
}

CoxeterDatum apply_order(const CoxeterDatum& datum, const Bipartition& bip) {
  int n = datum.rank;
  auto cox = blank_cox(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cox[i][j] = datum.cox[bip.order[i]][bip.order[j]];
  return CoxeterDatum{datum.type_label, n, cox, datum.field};
}

Mat gram(const CoxeterDatum& datum) {
  const NumberField& f = *datum.field;
  int n = datum.rank;
  Mat B(f, n, n);
  FieldElement half(f, Rat(1, 2));
  FieldElement theta_half = FieldElement::theta(f) * Rat(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = datum.cox[i][j];
      if (i == j)
        B.at(i, j) = FieldElement(f, 1L);
      else if (m == 2)
        B.at(i, j) = FieldElement(f);
      else if (m == 3)
        B.at(i, j) = -half;
      else if (m == f.generator_order())
        B.at(i, j) = -theta_half;
      else
        throw Error("-cos(pi/" + std::to_string(m) + ") is not expressible in the chosen field");
    }
  // Positive definiteness: every leading principal minor has sign +1.
  for (int k = 1; k <= n; ++k) {
    Mat lead(f, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = B.at(i, j);
    if (det(lead).sign() != 1)
      throw Error("Gram matrix is not positive definite (not a finite type)");
  }
  return B;
}

size_t RootSystem::cyclic(int i) const {
  int nh = num_roots();
  int r = (i - 1) % nh;
  if (r < 0) r += nh;
  return static_cast<size_t>(r);
}

FieldElement RootSystem::dot(const Vec& x, const Vec& y) const {
  const NumberField& f = field();
  FieldElement acc(f);
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    FieldElement row(f);
    for (int j = 0; j < n; ++j) {
      if (B_.at(i, j).is_zero() || y[j].is_zero()) continue;
      row += B_.at(i, j) * y[j];
    }
    acc += x[i] * row;
  }
  return acc;
}

Mat RootSystem::reflection_from_vector(const Vec& v) const {
  const NumberField& f = field();
  int n = rank();
  FieldElement norm(f);
  Vec bv(n, FieldElement(f));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (B_.at(i, j).is_zero() || v[j].is_zero()) continue;
      bv[i] += B_.at(i, j) * v[j];
    }
  }
  for (int i = 0; i < n; ++i) norm += v[i] * bv[i];
  if (norm.is_zero()) throw Error("reflection axis has zero norm");
  FieldElement scale = FieldElement(f, 2L) / norm;
  Mat r = Mat::identity(f, n);
  for (int i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    FieldElement vi = v[i] * scale;
    for (int j = 0; j < n; ++j) {
      if (bv[j].is_zero()) continue;
      r.at(i, j) -= vi * bv[j];
    }
  }
  return r;
}

int RootSystem::root_sign(const Vec& v) const {
  bool nonneg = true, nonpos = true;
  for (const auto& c : v) {
    int s = c.sign();
    if (s > 0) nonpos = false;
    if (s < 0) nonneg = false;
  }
  if (nonneg && !nonpos) return 1;
  if (nonpos && !nonneg) return -1;
  if (nonneg && nonpos) return 0;  // zero vector
  return 0;
}

int RootSystem::index_of_root(const Vec& v) const {
  auto it = root_index_.find(vec_key(v));
  return it == root_index_.end() ? 0 : it->second;
}

Vec RootSystem::mu_of(const Vec& v) const {
  Vec rhs = v;
  for (auto& c : rhs) c *= Rat(-2);
  return gmi_inv_.apply(rhs);
}

Mat RootSystem::dot_table() const {
  int np = num_positive();
  Mat t(field(), np, np);
  for (int i = 1; i <= np; ++i)
    for (int j = 1; j <= np; ++j) t.at(i - 1, j - 1) = dot(mu(i), rho(j));
  return t;
}

RootSystem::RootSystem(const CoxeterDatum& raw)
    : datum_(raw),
      bip_(bipartition(raw)),
      B_(*raw.field, raw.rank, raw.rank),
      Binv_(*raw.field, raw.rank, raw.rank),
      gamma_(*raw.field, raw.rank, raw.rank),
      gamma_inv_(*raw.field, raw.rank, raw.rank),
      gmi_inv_(*raw.field, raw.rank, raw.rank),
      prod_s1_(*raw.field, raw.rank, raw.rank),
      prod_s2_(*raw.field, raw.rank, raw.rank) {
  validate_cox(raw.cox);
  datum_ = apply_order(raw, bip_);
  split_ = bip_.split;
  const NumberField& f = field();
  const int n = rank();

  B_ = gram(datum_);
  Binv_ = inverse(B_);

  alpha_.reserve(n);
  beta_.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Vec a(n, FieldElement(f));
    a[i - 1] = FieldElement(f, 1L);
    alpha_.push_back(a);
    beta_.push_back(Binv_.column(i - 1));
  }

  // Simple reflections R_i = I - 2 e_i (row i of B).
  simple_refl_.reserve(n);
  for (int i = 0; i < n; ++i) {
    Mat r = Mat::identity(f, n);
    for (int j = 0; j < n; ++j) r.at(i, j) -= FieldElement(f, 2L) * B_.at(i, j);
    simple_refl_.push_back(std::move(r));
  }

  prod_s1_ = Mat::identity(f, n);
  for (int i = 0; i < split_; ++i) prod_s1_ = prod_s1_ * simple_refl_[i];
  prod_s2_ = Mat::identity(f, n);
  for (int i = split_; i < n; ++i) prod_s2_ = prod_s2_ * simple_refl_[i];
  gamma_ = prod_s1_ * prod_s2_;
  gamma_inv_ = Mat::identity(f, n);
  for (int i = n - 1; i >= 0; --i) gamma_inv_ = gamma_inv_ * simple_refl_[i];

  // Order of gamma by power iteration.
  Mat pow = gamma_;
  h_ = 1;
  while (!pow.is_identity()) {
    pow = pow * gamma_;
    ++h_;
    if (h_ > 1000) throw Error("Coxeter element order exceeds cap (not finite type?)");
  }

  gmi_inv_ = inverse(gamma_ - Mat::identity(f, n));

  // rho_i and mu_i from the defining cyclic products.
  const int nh = n * h_;
  rho_.reserve(nh);
  mu_.reserve(nh);
  Mat prefix = Mat::identity(f, n);
  for (int i = 1; i <= nh; ++i) {
    int c = (i - 1) % n;
    rho_.push_back(prefix.apply(alpha_[c]));
    mu_.push_back(prefix.apply(beta_[c]));
    prefix = prefix * simple_refl_[c];
  }

  // Closed forms.
  for (int i = 1; i <= n; ++i) {
    if (i <= split_) {
      if (!(rho_[i - 1] == alpha_[i - 1])) throw InternalError("rho_i != alpha_i for i <= s");
    } else {
      Vec expect = vec_neg(gamma_.apply(alpha_[i - 1]));
      if (!(rho_[i - 1] == expect)) throw InternalError("rho_i != -gamma(alpha_i) for s < i <= n");
    }
    if (!(mu_[i - 1] == beta_[i - 1])) throw InternalError("mu_i != beta_i for i <= n");
  }
  for (int i = 1; i + n <= nh; ++i) {
    if (!(rho_[i + n - 1] == gamma_.apply(rho_[i - 1])))
      throw InternalError("rho recursion rho_{i+n} = gamma rho_i fails");
    if (!(mu_[i + n - 1] == gamma_.apply(mu_[i - 1])))
      throw InternalError("mu recursion mu_{i+n} = gamma mu_i fails");
  }

  // Positivity partition and unit norms.
  const int np = nh / 2;
  for (int i = 1; i <= nh; ++i) {
    int s = root_sign(rho_[i - 1]);
    if (i <= np ? s != 1 : s != -1)
      throw Error("positivity partition violated in the Steinberg ordering");
    if (!dot(rho_[i - 1], rho_[i - 1]).is_one())
      throw InternalError("generated root is not a unit vector");
  }

  // The last n - s positive roots are a permutation of S2.
  {
    std::set<std::string> tail, s2;
    for (int i = np - (n - split_) + 1; i <= np; ++i) tail.insert(vec_key(rho_[i - 1]));
    for (int i = split_ + 1; i <= n; ++i) s2.insert(vec_key(alpha_[i - 1]));
    if (tail != s2)
      throw InternalError("last n-s positive roots are not a permutation of S2");
  }

  // Root index and reflections.
  for (int i = 1; i <= nh; ++i) root_index_[vec_key(rho_[i - 1])] = i;
  refl_.reserve(nh);
  for (int i = 1; i <= nh; ++i) refl_.push_back(reflection_from_vector(rho_[i - 1]));
  ant_.resize(nh);
  for (int i = 1; i <= nh; ++i) {
    int j = index_of_root(vec_neg(rho_[i - 1]));
    if (j == 0) throw InternalError("antipode of a root is not a root");
    ant_[i - 1] = j - 1;
  }
}

}  // namespace coxlat
