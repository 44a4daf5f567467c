#include "macsat/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace macsat {

namespace {

long long ll_abs(long long x) { return x < 0 ? -x : x; }

// floor and ceil of a rational
Int qfloor(const Rational& x) {
  Int n = numerator(x), d = denominator(x);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

}  // namespace

IntMat identity_mat(int n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size();
  IntMat r(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IVec mat_apply(const IntMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

QVec mat_apply(const IntMat& m, const QVec& v) {
  QVec r(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i] += Rational(m[i][j]) * v[j];
  return r;
}

bool WeylElement::is_identity() const {
  if (!is_translation()) return false;
  for (long long x : mu)
    if (x != 0) return false;
  return true;
}

bool WeylElement::is_translation() const {
  for (size_t i = 0; i < fin.size(); ++i)
    for (size_t j = 0; j < fin.size(); ++j)
      if (fin[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

WeylGroup::WeylGroup(const RootSystem& rs, const Lattice& lat) : rs_(&rs), lat_(&lat) {
  const int n = rs.rank;
  // finite reflection matrices on Lambda coordinates: c -> c - <c,a_i^vee> a_i
  for (int i = 0; i < n; ++i) {
    IntMat m = identity_mat(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[k][j] -= lat.pair_row[i][j] * lat.simple_coords[i][k];
    simple_mat_.push_back(m);
    simple_fin_.push_back({IVec(n, 0), m});
  }
  // r_0 = t_{mu0} r_theta
  IntMat mth = identity_mat(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) mth[k][j] -= lat.theta_pair_row[j] * lat.theta_coords[k];
  r0_ = {lat.mu0_coords, mth};

  for (int node = 0; node <= n; ++node) node_root_.push_back(affine_simple(rs, node));

  // Lambda coordinates of every root (roots lie in Q <= Lambda)
  for (int i = 0; i < (int)rs.roots.size(); ++i) {
    auto c = lat.coords_of(rs.roots[i]);
    if (!c) throw LatticeError("root not in Lambda");
    root_coord_index_[*c] = i;
  }

  // interior sample point: barycenter of the alcove vertices, scaled by 1/2
  QVec acc(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    Rational m = rs.inner(rs.roots[rs.theta], rs.fund_coweight[i]);
    QVec vert = (Rational(1) / m) * rs.fund_coweight[i];
    auto coords = linalg::solve_in_span(lat.basis, vert);
    for (int j = 0; j < n; ++j) acc[j] += coords[j];
  }
  sample_.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) sample_[j] = acc[j] / Rational(2 * (n + 1));
  for (int node = 0; node <= n; ++node)
    if (alcove_value(node, sample_) <= 0) throw ConstructionError("sample point not interior");

  // minuscule set: dominant fundamental-coordinate combinations with (theta,x) <= 1
  std::vector<Rational> tw(n);
  for (int i = 0; i < n; ++i) tw[i] = rs.inner(rs.roots[rs.theta], rs.fund_weight[i]);
  std::set<IVec> mins;
  std::vector<long long> cap(n);
  for (int i = 0; i < n; ++i) cap[i] = qfloor(Rational(1) / tw[i]).convert_to<long long>();
  IVec m(n, 0);
  while (true) {
    Rational tot = 0;
    for (int i = 0; i < n; ++i) tot += Rational(m[i]) * tw[i];
    if (tot <= 1) {
      QVec v(rs.ambient, Rational(0));
      for (int i = 0; i < n; ++i) v = v + Rational(m[i]) * rs.fund_weight[i];
      auto c = lat.coords_of(v);
      if (c) mins.insert(*c);
    }
    int i = 0;
    while (i < n) {
      if (++m[i] <= cap[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  minuscule_.assign(mins.begin(), mins.end());
  std::stable_sort(minuscule_.begin(), minuscule_.end(), [](const IVec& a, const IVec& b) {
    auto norm = [](const IVec& v) {
      long long s = 0;
      for (long long x : v) s += ll_abs(x);
      return s;
    };
    long long na = norm(a), nb = norm(b);
    return na != nb ? na < nb : a < b;
  });

  // Omega: omega_nu = t_nu w_ring_nu, one per minuscule element
  for (const IVec& nu : minuscule_) {
    IVec x = nu;
    std::vector<int> letters;
    while (true) {
      int found = -1;
      for (int i = 1; i <= n; ++i)
        if (lat.pair(x, i - 1) > 0) {
          found = i;
          break;
        }
      if (found < 0) break;
      letters.push_back(found);
      x = mat_apply(simple_mat_[found - 1], x);
    }
    WeylElement w = translation(nu);
    for (int l : letters) w = mul(w, simple_fin_[l - 1]);
    if (length(w) != 0) throw ConstructionError("omega element has positive length");
    omega_.push_back(w);
  }
}

WeylElement WeylGroup::identity() const {
  return {IVec(rank(), 0), identity_mat(rank())};
}

WeylElement WeylGroup::translation(const IVec& mu) const { return {mu, identity_mat(rank())}; }

WeylElement WeylGroup::simple(int node) const {
  if (node == 0) return r0_;
  return simple_fin_[node - 1];
}

WeylElement WeylGroup::mul(const WeylElement& a, const WeylElement& b) const {
  IVec mu = a.mu;
  IVec bm = mat_apply(a.fin, b.mu);
  for (int i = 0; i < rank(); ++i) mu[i] += bm[i];
  return {mu, mat_mul(a.fin, b.fin)};
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  // (t_mu f)^-1 = t_{-f^-1 mu} f^-1; the finite part inverts by exact Gauss
  // (unimodular integer matrix)
  const int n = rank();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = a.fin[i][j];
  IntMat inv(n, std::vector<long long>(n));
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> b(n, Rational(0));
    b[col] = 1;
    auto x = linalg::solve(A, b);
    for (int i = 0; i < n; ++i) {
      if (denominator(x[i]) != 1) throw ConstructionError("non-integral Weyl inverse");
      inv[i][col] = numerator(x[i]).convert_to<long long>();
    }
  }
  IVec mu = mat_apply(inv, a.mu);
  for (auto& x : mu) x = -x;
  return {mu, inv};
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int node : word) w = mul(w, simple(node));
  return w;
}

QVec WeylGroup::affine_act(const WeylElement& w, const QVec& x) const {
  QVec r = mat_apply(w.fin, x);
  for (int i = 0; i < rank(); ++i) r[i] += w.mu[i];
  return r;
}

IVec WeylGroup::affine_act(const WeylElement& w, const IVec& x) const {
  IVec r = mat_apply(w.fin, x);
  for (int i = 0; i < rank(); ++i) r[i] += w.mu[i];
  return r;
}

QVec WeylGroup::affine_act_node(int node, const QVec& x) const {
  return affine_act(simple(node), x);
}

IVec WeylGroup::affine_act_node(int node, const IVec& x) const {
  return affine_act(simple(node), x);
}

IVec WeylGroup::linear_act(const WeylElement& w, const IVec& x) const {
  return mat_apply(w.fin, x);
}

long long WeylGroup::root_index_of_coords(const IVec& c) const {
  auto it = root_coord_index_.find(c);
  if (it == root_coord_index_.end()) throw ConstructionError("not a root");
  return it->second;
}

AffineRoot WeylGroup::act_affine_root(const WeylElement& w, const AffineRoot& a) const {
  auto bc = lat_->coords_of(rs_->roots[a.root]);
  IVec img = mat_apply(w.fin, *bc);
  int ri = (int)root_index_of_coords(img);
  Rational ip = lat_->inner_coords(to_qvec(img), to_qvec(w.mu));
  Rational k2 = Rational(a.shift2) - 2 * ip;
  if (denominator(k2) != 1) throw ConstructionError("non-integral affine shift");
  return {ri, numerator(k2).convert_to<long long>()};
}

Rational WeylGroup::alcove_value(int node, const QVec& x) const {
  if (node >= 1) return lat_->inner_coords(to_qvec(lat_->simple_coords[node - 1]), x);
  Rational th = lat_->inner_coords(to_qvec(lat_->theta_coords), x);
  return (Rational(1) - th) / rs_->c0;
}

long long WeylGroup::length(const WeylElement& w) const {
  QVec q = affine_act(w, sample_);
  long long count = 0;
  for (int i = 0; i < (int)rs_->roots.size(); ++i) {
    if (rs_->nonreduced && rs_->len2(i) == 4) continue;  // divisible: wall already counted
    long long s2 = band_step2(*rs_, i);
    long long k0 = rs_->positive[i] ? 0 : s2;
    auto bc = lat_->coords_of(rs_->roots[i]);
    Rational X = -2 * lat_->inner_coords(to_qvec(*bc), q);  // count k2 in [k0, X)
    if (X <= k0) continue;
    // largest multiple of s2 strictly below X
    Int hi = qfloor(X / s2);
    if (Rational(hi) * s2 >= X) hi -= 1;
    count += (hi - k0 / s2 + 1).convert_to<long long>();
  }
  return count;
}

bool WeylGroup::right_descent(const WeylElement& w, int node) const {
  AffineRoot img = act_affine_root(w, node_root_[node]);
  return !affine_positive(*rs_, img);
}

WeylGroup::ReducedWord WeylGroup::reduced_word(const WeylElement& w) const {
  ReducedWord rw;
  WeylElement cur = w;
  std::vector<int> rev;
  long long guard = length(w) + 1;
  while (guard-- > 0) {
    int found = -1;
    for (int node = 0; node <= rank(); ++node)
      if (right_descent(cur, node)) {
        found = node;
        break;
      }
    if (found < 0) break;
    rev.push_back(found);
    cur = mul(cur, simple(found));
  }
  int oi = omega_index(cur);
  if (oi < 0) throw ConstructionError("reduced word peeling did not land in Omega");
  rw.omega = oi;
  rw.letters.assign(rev.rbegin(), rev.rend());
  return rw;
}

std::string WeylGroup::format_word(const ReducedWord& rw) const {
  std::ostringstream os;
  os << "w = omega" << rw.omega << " *";
  if (rw.letters.empty()) os << " e";
  for (int l : rw.letters) os << " r" << l;
  return os.str();
}

int WeylGroup::omega_index(const WeylElement& w) const {
  for (size_t i = 0; i < omega_.size(); ++i)
    if (omega_[i] == w) return (int)i;
  return -1;
}

WeylGroup::WeightOrbitData WeylGroup::orbit_data(const IVec& lambda) const {
  WeightOrbitData od;
  const int n = rank();
  IVec x = lambda;
  std::vector<int> letters;
  int guard = 100000;
  while (guard-- > 0) {
    int found = -1;
    for (int node = 0; node <= n; ++node) {
      bool neg;
      if (node >= 1) {
        neg = lat_->pair(x, node - 1) < 0;
      } else {
        Rational th = lat_->inner_coords(to_qvec(lat_->theta_coords), to_qvec(x));
        neg = th > 1;
      }
      if (neg) {
        found = node;
        break;
      }
    }
    if (found < 0) break;
    letters.push_back(found);
    x = affine_act_node(found, x);
  }
  if (guard <= 0) throw ConstructionError("orbit_data did not terminate");
  od.lambda_tilde = x;
  od.w_lambda_word = letters;
  od.w_lambda = from_word(letters);

  IVec y = lambda;
  std::vector<int> fin_letters;
  while (true) {
    int found = -1;
    for (int i = 1; i <= n; ++i)
      if (lat_->pair(y, i - 1) > 0) {
        found = i;
        break;
      }
    if (found < 0) break;
    fin_letters.push_back(found);
    y = mat_apply(simple_mat_[found - 1], y);
  }
  od.lambda_minus = y;
  od.w_ring_word = fin_letters;
  od.w_ring_lambda = from_word(fin_letters);
  return od;
}

std::vector<int> WeylGroup::word_from_dominant(const IVec& lambda, IVec* dominant_out) const {
  IVec x = lambda;
  std::vector<int> letters;
  while (true) {
    int found = -1;
    for (int i = 1; i <= rank(); ++i)
      if (lat_->pair(x, i - 1) < 0) {
        found = i;
        break;
      }
    if (found < 0) break;
    letters.push_back(found);
    x = mat_apply(simple_mat_[found - 1], x);
  }
  if (dominant_out) *dominant_out = x;
  return letters;
}

bool WeylGroup::is_dominant(const IVec& lambda) const {
  for (int i = 0; i < rank(); ++i)
    if (lat_->pair(lambda, i) < 0) return false;
  return true;
}

bool WeylGroup::is_antidominant(const IVec& lambda) const {
  for (int i = 0; i < rank(); ++i)
    if (lat_->pair(lambda, i) > 0) return false;
  return true;
}

const std::vector<WeylElement>& WeylGroup::finite_elements() const {
  if (!finite_cache_.empty()) return finite_cache_;
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{identity()};
  seen.insert(identity());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= rank(); ++i) {
        WeylElement v = mul(w, simple_fin_[i - 1]);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
    if (seen.size() > 2000000) throw ConstructionError("finite Weyl group too large to enumerate");
  }
  finite_cache_.assign(seen.begin(), seen.end());
  return finite_cache_;
}

bool WeylGroup::bruhat_leq(const WeylElement& x, const WeylElement& y) const {
  // subword property along a fixed reduced word of y (test support only)
  ReducedWord wy = reduced_word(y);
  ReducedWord wx = reduced_word(x);
  if (wx.omega != wy.omega) return false;
  if (wx.letters.size() > wy.letters.size()) return false;
  WeylElement om = omega_[wy.omega];
  WeylElement xx = mul(inverse(om), x);

  std::function<bool(const WeylElement&, size_t)> rec = [&](const WeylElement& z, size_t pos) {
    if (z.is_identity()) return true;
    if (pos == wy.letters.size()) return false;
    if ((long long)(wy.letters.size() - pos) < length(z)) return false;
    int s = wy.letters[pos];
    WeylElement sz = mul(simple(s), z);
    if (length(sz) < length(z) && rec(sz, pos + 1)) return true;
    return rec(z, pos + 1);
  };
  return rec(xx, 0);
}

}  // namespace macsat
