#include "macsat/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace macsat {

RootType parse_root_type(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "E") return RootType::E;
  if (s == "F") return RootType::F;
  if (s == "G") return RootType::G;
  if (s == "BC") return RootType::BC;
  throw ConstructionError("unknown root system type '" + s + "'");
}

std::string root_type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

namespace linalg {

std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const size_t n = A.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    Rational d = A[col][col];
    for (size_t j = col; j < n; ++j) A[col][j] /= d;
    b[col] /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rational f = A[r][col];
      for (size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<Rational> solve_in_span(const std::vector<QVec>& cols, const QVec& v) {
  // normal equations with the plain dot product (exact; columns independent)
  const size_t n = cols.size();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) A[i][j] = dot(cols[i], cols[j]);
    b[i] = dot(cols[i], v);
  }
  std::vector<Rational> c = solve(A, b);
  QVec check(v.size(), Rational(0));
  for (size_t i = 0; i < n; ++i) check = check + c[i] * cols[i];
  if (!(check == v)) throw std::runtime_error("vector not in span");
  return c;
}

}  // namespace linalg

namespace {

QVec unit(int amb, int i) {
  QVec v(amb, Rational(0));
  v[i] = 1;
  return v;
}

struct Seed {
  int ambient;
  Rational scale;
  int lace;
  std::vector<QVec> simples;
};

Seed seed_for(RootType type, int n) {
  auto bad = [&]() -> ConstructionError {
    std::ostringstream os;
    os << "invalid root system (" << root_type_name(type) << "," << n << ")";
    return ConstructionError(os.str());
  };
  Seed s;
  switch (type) {
    case RootType::A: {
      if (n < 1) throw bad();
      s.ambient = n + 1;
      s.scale = 1;
      s.lace = 1;
      for (int i = 0; i < n; ++i) s.simples.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
      break;
    }
    case RootType::B: {
      if (n < 2) throw bad();
      s.ambient = n;
      s.scale = 2;  // short e_i gets squared length 2
      s.lace = 2;
      for (int i = 0; i + 1 < n; ++i) s.simples.push_back(unit(n, i) - unit(n, i + 1));
      s.simples.push_back(unit(n, n - 1));
      break;
    }
    case RootType::C: {
      if (n < 2) throw bad();
      s.ambient = n;
      s.scale = 1;
      s.lace = 2;
      for (int i = 0; i + 1 < n; ++i) s.simples.push_back(unit(n, i) - unit(n, i + 1));
      s.simples.push_back(Rational(2) * unit(n, n - 1));
      break;
    }
    case RootType::D: {
      if (n < 3) throw bad();
      s.ambient = n;
      s.scale = 1;
      s.lace = 1;
      for (int i = 0; i + 1 < n; ++i) s.simples.push_back(unit(n, i) - unit(n, i + 1));
      s.simples.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    }
    case RootType::E: {
      if (n < 6 || n > 8) throw bad();
      s.ambient = 8;
      s.scale = 1;
      s.lace = 1;
      QVec a1(8, Rational(-1, 2));  // 1/2(e1+e8) - 1/2(e2+..+e7)
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      s.simples.push_back(a1);
      s.simples.push_back(unit(8, 0) + unit(8, 1));  // e1+e2
      for (int i = 3; i <= n; ++i) s.simples.push_back(unit(8, i - 2) - unit(8, i - 3));
      break;
    }
    case RootType::F: {
      if (n != 4) throw bad();
      s.ambient = 4;
      s.scale = 2;
      s.lace = 2;
      s.simples.push_back(unit(4, 1) - unit(4, 2));
      s.simples.push_back(unit(4, 2) - unit(4, 3));
      s.simples.push_back(unit(4, 3));
      QVec a4(4, Rational(-1, 2));
      a4[0] = Rational(1, 2);
      s.simples.push_back(a4);
      break;
    }
    case RootType::G: {
      if (n != 2) throw bad();
      s.ambient = 3;
      s.scale = 1;
      s.lace = 3;
      s.simples.push_back(unit(3, 0) - unit(3, 1));
      QVec a2(3);
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s.simples.push_back(a2);
      break;
    }
    case RootType::BC: {
      if (n < 1) throw bad();
      s.ambient = n;
      s.scale = 1;
      s.lace = 1;
      for (int i = 0; i + 1 < n; ++i) s.simples.push_back(unit(n, i) - unit(n, i + 1));
      s.simples.push_back(unit(n, n - 1));
      break;
    }
  }
  return s;
}

}  // namespace

QVec RootSystem::coroot(int idx) const {
  return (Rational(2) / len2(idx)) * roots[idx];
}

Rational RootSystem::pair(const QVec& x, int idx) const {
  return Rational(2) * inner(x, roots[idx]) / len2(idx);
}

int RootSystem::root_index(const QVec& v) const {
  auto it = std::find(roots.begin(), roots.end(), v);
  return it == roots.end() ? -1 : (int)(it - roots.begin());
}

int RootSystem::reflect_root(int a, int b) const {
  Rational m = pair(roots[a], b);
  QVec img = roots[a] - m * roots[b];
  int idx = root_index(img);
  if (idx < 0) throw ConstructionError("reflection left the root system");
  return idx;
}

int RootSystem::n_positive() const {
  return (int)std::count(positive.begin(), positive.end(), (char)1);
}

int RootSystem::alpha0_finite() const {
  QVec v = nonreduced ? Rational(-1, 2) * roots[theta] : Rational(-1) * roots[theta];
  int idx = root_index(v);
  if (idx < 0) throw ConstructionError("alpha_0 finite part is not a root");
  return idx;
}

RootSystem build_root_system(RootType type, int rank) {
  Seed seed = seed_for(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.nonreduced = (type == RootType::BC);
  rs.c0 = rs.nonreduced ? 2 : 1;
  rs.lace = seed.lace;
  rs.ambient = seed.ambient;
  rs.scale = seed.scale;

  // reflection closure of the simple roots
  std::set<QVec> all(seed.simples.begin(), seed.simples.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<QVec> cur(all.begin(), all.end());
    for (const auto& v : cur) {
      for (const auto& a : seed.simples) {
        Rational m = Rational(2) * seed.scale * dot(v, a) / (seed.scale * dot(a, a));
        QVec img = v - m * a;
        if (all.insert(img).second) grew = true;
      }
    }
  }
  if (type == RootType::BC) {
    std::vector<QVec> cur(all.begin(), all.end());
    for (const auto& v : cur)
      if (seed.scale * dot(v, v) == 1) all.insert(Rational(2) * v);
  }
  rs.roots.assign(all.begin(), all.end());

  rs.neg_idx.resize(rs.roots.size());
  rs.positive.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    rs.neg_idx[i] = rs.root_index(Rational(-1) * rs.roots[i]);
    if (rs.neg_idx[i] < 0) throw ConstructionError("root system not symmetric");
    auto c = linalg::solve_in_span(seed.simples, rs.roots[i]);
    bool pos = true, negv = true;
    for (const auto& x : c) {
      if (x < 0) pos = false;
      if (x > 0) negv = false;
    }
    if (pos == negv) throw ConstructionError("root with mixed simple coordinates");
    rs.positive[i] = pos ? 1 : 0;
  }

  rs.simple.resize(rank);
  for (int i = 0; i < rank; ++i) {
    rs.simple[i] = rs.root_index(seed.simples[i]);
    if (rs.simple[i] < 0) throw ConstructionError("lost a simple root");
  }

  // Cartan pairings (exact integers)
  rs.cartan.assign(rank, std::vector<long long>(rank));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) {
      Rational p = rs.pair(rs.roots[rs.simple[j]], rs.simple[i]);
      if (denominator(p) != 1) throw ConstructionError("non-integral Cartan pairing");
      rs.cartan[j][i] = numerator(p).convert_to<long long>();
    }

  // fundamental weights: lambda_i = sum_k c_k alpha_k with cartan^T c = e_i
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<Rational>> A(rank, std::vector<Rational>(rank));
    std::vector<Rational> b(rank, Rational(0));
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < rank; ++j) A[j][k] = rs.cartan[k][j];  // row j: sum_k c_k <a_k,a_j^vee>
    b[i] = 1;
    auto c = linalg::solve(A, b);
    QVec w(seed.ambient, Rational(0));
    for (int k = 0; k < rank; ++k) w = w + c[k] * seed.simples[k];
    rs.fund_weight.push_back(w);
  }
  // fundamental coweights: (lambda_i^vee, alpha_j) = delta_ij, solved in the root span
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<Rational>> A(rank, std::vector<Rational>(rank));
    std::vector<Rational> b(rank, Rational(0));
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) A[j][k] = rs.inner(seed.simples[k], seed.simples[j]);
    b[i] = 1;
    auto c = linalg::solve(A, b);
    QVec w(seed.ambient, Rational(0));
    for (int k = 0; k < rank; ++k) w = w + c[k] * seed.simples[k];
    rs.fund_coweight.push_back(w);
  }

  // theta: the dominant root of the distinguished length class
  Rational want;
  if (rs.nonreduced) {
    want = 4;  // highest root
  } else {
    want = 4 * seed.scale;  // placeholder; compute min length = short class
    for (size_t i = 0; i < rs.roots.size(); ++i) want = std::min(want, rs.len2((int)i));
  }
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (rs.len2((int)i) != want) continue;
    bool dom = true;
    for (int j = 0; j < rank; ++j)
      if (rs.pair(rs.roots[i], rs.simple[j]) < 0) dom = false;
    if (dom) {
      rs.theta = (int)i;
      break;
    }
  }
  if (rs.theta < 0) throw ConstructionError("no dominant root in the theta length class");

  // construction invariants
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational p = rs.pair(rs.fund_weight[j], rs.simple[i]);
      if (p != (i == j ? 1 : 0)) throw ConstructionError("fundamental weight pairing failed");
    }
  for (int i = 0; i < rank; ++i) {
    QVec diff = rs.roots[rs.theta] - seed.simples[i];
    for (int k = 0; k < rank; ++k)
      if (rs.inner(diff, rs.fund_coweight[k]) < 0)
        throw ConstructionError("theta is not highest in its class");
  }
  return rs;
}

// ---------------------------------------------------------------------------

long long band_step2(const RootSystem& rs, int idx) {
  Rational l2 = rs.len2(idx);
  if (rs.nonreduced) return l2 == 1 ? 1 : 2;  // shorts live on half-integral shifts
  return l2 == 2 ? 2 : 2LL * rs.lace;         // short band Zdelta, long band rZdelta
}

bool in_affine(const RootSystem& rs, int idx, long long shift2) {
  return shift2 % band_step2(rs, idx) == 0;
}

bool affine_positive(const RootSystem& rs, const AffineRoot& a) {
  if (a.shift2 > 0) return true;
  if (a.shift2 < 0) return false;
  return rs.positive[a.root];
}

bool affine_divisible(const RootSystem& rs, const AffineRoot& a) {
  if (!rs.nonreduced) return false;
  if (rs.len2(a.root) != 4) return false;
  return true;  // (2e_i + m delta)/2 = e_i + (m/2) delta is a short affine root
}

AffineRoot affine_alpha0(const RootSystem& rs) {
  return {rs.alpha0_finite(), rs.nonreduced ? 1LL : 2LL};
}

AffineRoot affine_simple(const RootSystem& rs, int node) {
  if (node == 0) return affine_alpha0(rs);
  return {rs.simple[node - 1], 0};
}

std::vector<AffineRoot> build_affine_roots(const RootSystem& rs, const Rational& bound) {
  if (bound <= 0) throw ConstructionError("shift bound must be positive");
  std::vector<AffineRoot> out;
  for (int i = 0; i < (int)rs.roots.size(); ++i) {
    long long step = band_step2(rs, i);
    for (long long k2 = 0;; k2 += step) {
      if (Rational(k2, 2) > bound) break;
      out.push_back({i, k2});
      if (k2 > 0) out.push_back({i, -k2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational inner(const RootSystem& rs, const ExtVec& x, const ExtVec& y) {
  Rational s = x.del * y.lam0 + x.lam0 * y.del;
  if (!x.fin.empty() && !y.fin.empty()) s += rs.inner(x.fin, y.fin);
  return s;
}

ExtVec affine_to_ext(const RootSystem& rs, const AffineRoot& a) {
  ExtVec v;
  v.fin = rs.roots[a.root];
  v.del = Rational(a.shift2, 2);
  return v;
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int OrbitTable::orbit_id(const AffineRoot& a) const {
  long long per = period2[a.root];
  long long m = ((a.shift2 % per) + per) % per;
  auto it = orbit_key.find({a.root, m});
  if (it == orbit_key.end()) throw ConstructionError("affine root outside orbit table");
  return it->second;
}

OrbitTable orbit_table(const RootSystem& rs) {
  OrbitTable tab;
  tab.rs = &rs;
  const int n = rs.rank;

  // BFS closure over a shift window wide enough to see two periods of every band
  const long long W2 = 8 * std::max<long long>(rs.lace, 2);
  std::vector<AffineRoot> win;
  std::map<AffineRoot, int> pos;
  for (int i = 0; i < (int)rs.roots.size(); ++i)
    for (long long k2 = -W2; k2 <= W2; ++k2)
      if (in_affine(rs, i, k2)) {
        pos[{i, k2}] = (int)win.size();
        win.push_back({i, k2});
      }

  UnionFind uf((int)win.size());
  for (size_t a = 0; a < win.size(); ++a) {
    for (int node = 0; node <= n; ++node) {
      AffineRoot s = affine_simple(rs, node);
      // level-zero reflection: b - <b, s^vee> s
      Rational m = Rational(2) * rs.inner(rs.roots[win[a].root], rs.roots[s.root]) / rs.len2(s.root);
      if (denominator(m) != 1) throw ConstructionError("non-integral reflection pairing");
      long long mi = numerator(m).convert_to<long long>();
      QVec img = rs.roots[win[a].root] - Rational(mi) * rs.roots[s.root];
      int ri = rs.root_index(img);
      if (ri < 0) throw ConstructionError("level-zero reflection left R");
      long long k2 = win[a].shift2 - mi * s.shift2;
      auto it = pos.find({ri, k2});
      if (it != pos.end()) uf.unite((int)a, it->second);
    }
  }

  // per-root delta periods from same-orbit repeats in the fiber
  tab.period2.assign(rs.roots.size(), 0);
  for (int i = 0; i < (int)rs.roots.size(); ++i) {
    long long best = 0;
    long long step = band_step2(rs, i);
    for (long long k2 = -W2; k2 <= W2; k2 += step) {
      for (long long j2 = k2 + step; j2 <= W2; j2 += step) {
        if (uf.find(pos[{i, k2}]) == uf.find(pos[{i, j2}])) {
          long long d = j2 - k2;
          best = best == 0 ? d : std::min(best, d);
        }
      }
      if (best == step) break;
    }
    if (best == 0) throw ConstructionError("no delta period detected (window too small)");
    tab.period2[i] = best;
  }

  // canonical keys -> orbit ids (deterministic order)
  std::map<int, int> rep_to_id;
  for (int i = 0; i < (int)rs.roots.size(); ++i) {
    long long step = band_step2(rs, i);
    for (long long m = 0; m < tab.period2[i]; m += step) {
      int rep = uf.find(pos[{i, m}]);
      auto it = rep_to_id.find(rep);
      int id;
      if (it == rep_to_id.end()) {
        id = (int)tab.orbit_rep.size();
        rep_to_id[rep] = id;
        tab.orbit_rep.push_back({i, m});
      } else {
        id = it->second;
      }
      tab.orbit_key[{i, m}] = id;
    }
  }
  tab.num_orbits = (int)tab.orbit_rep.size();

  // sanity: the table is W-stable on the window
  for (const auto& [ar, p] : pos) {
    (void)p;
    if (std::abs(ar.shift2) > W2 - 4 * rs.lace) continue;
    int id = tab.orbit_id(ar);
    for (int node = 0; node <= n; ++node) {
      AffineRoot s = affine_simple(rs, node);
      Rational m = Rational(2) * rs.inner(rs.roots[ar.root], rs.roots[s.root]) / rs.len2(s.root);
      long long mi = numerator(m).convert_to<long long>();
      int ri = rs.root_index(rs.roots[ar.root] - Rational(mi) * rs.roots[s.root]);
      AffineRoot img{ri, ar.shift2 - mi * s.shift2};
      if (tab.orbit_id(img) != id) throw ConstructionError("orbit table not W-stable");
    }
  }

  // ---- parameter binding
  auto add_param = [&](const std::string& name, ParamInfo::Kind kind, int rep_node) {
    tab.params.push_back({name, kind, rep_node});
    return (int)tab.params.size() - 1;
  };
  tab.orbit_param.assign(tab.num_orbits, -1);
  tab.node_param.assign(n + 1, -1);

  if (rs.nonreduced) {
    AffineRoot a0 = affine_alpha0(rs);
    AffineRoot two_a0{rs.root_index(Rational(2) * rs.roots[a0.root]), 2 * a0.shift2};
    AffineRoot an = affine_simple(rs, n);
    AffineRoot two_an{rs.root_index(Rational(2) * rs.roots[an.root]), 0};
    int o_t01 = tab.orbit_id(two_a0), o_t02 = tab.orbit_id(a0);
    int o_t03 = tab.orbit_id(an), o_tn = tab.orbit_id(two_an);
    tab.p_t01 = add_param("t01", ParamInfo::Kind::T01, -1);
    tab.p_t02 = add_param("t02", ParamInfo::Kind::T02, -1);
    tab.p_t03 = add_param("t03", ParamInfo::Kind::T03, -1);
    int p_tn = add_param("t" + std::to_string(n), ParamInfo::Kind::TN, n);
    tab.orbit_param[o_t01] = tab.p_t01;
    tab.orbit_param[o_t02] = tab.p_t02;
    tab.orbit_param[o_t03] = tab.p_t03;
    tab.orbit_param[o_tn] = p_tn;
    if (n >= 2) {
      int o_mid = tab.orbit_id(affine_simple(rs, 1));
      int p_mid = add_param("t1", ParamInfo::Kind::TMID, 1);
      tab.orbit_param[o_mid] = p_mid;
      for (int i = 1; i < n; ++i) tab.node_param[i] = p_mid;
    }
    if ((int)std::count(tab.orbit_param.begin(), tab.orbit_param.end(), -1) != 0)
      throw ConstructionError("unbound nonreduced orbit");
    tab.node_param[0] = tab.p_t03;  // quadratic parameter of the composite T_0
    tab.node_param[n] = p_tn;
  } else {
    // one parameter per root length; named after the smallest finite node of that length
    std::vector<Rational> lens;
    for (int i = 0; i < n; ++i) {
      Rational l2 = rs.len2(rs.simple[i]);
      if (std::find(lens.begin(), lens.end(), l2) == lens.end()) lens.push_back(l2);
    }
    std::map<Rational, int> len_param;
    for (const auto& l2 : lens) {
      int node = 0;
      for (int i = 0; i < n; ++i)
        if (rs.len2(rs.simple[i]) == l2) {
          node = i + 1;
          break;
        }
      len_param[l2] = add_param("t" + std::to_string(node), ParamInfo::Kind::RCLASS, node);
    }
    for (int o = 0; o < tab.num_orbits; ++o)
      tab.orbit_param[o] = len_param.at(rs.len2(tab.orbit_rep[o].root));
    for (int i = 1; i <= n; ++i) tab.node_param[i] = len_param.at(rs.len2(rs.simple[i - 1]));
    int p0 = len_param.at(rs.len2(rs.theta));
    tab.node_param[0] = p0;
    tab.p_t01 = tab.p_t02 = tab.p_t03 = p0;
  }
  return tab;
}

// ---------------------------------------------------------------------------

std::string Lattice::name() const {
  switch (kind) {
    case Kind::P: return "P";
    case Kind::Q: return "Q";
    default: return "custom";
  }
}

QVec Lattice::realize(const QVec& coords) const {
  QVec v(rs->ambient, Rational(0));
  for (size_t j = 0; j < basis.size(); ++j) v = v + coords[j] * basis[j];
  return v;
}

std::optional<IVec> Lattice::coords_of(const QVec& v) const {
  std::vector<Rational> c;
  try {
    c = linalg::solve_in_span(basis, v);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  IVec out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (denominator(c[i]) != 1) return std::nullopt;
    out[i] = numerator(c[i]).convert_to<long long>();
  }
  return out;
}

long long Lattice::pair(const IVec& c, int i) const {
  long long s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += pair_row[i][j] * c[j];
  return s;
}

Rational Lattice::pair_q(const QVec& c, int i) const {
  Rational s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += Rational(pair_row[i][j]) * c[j];
  return s;
}

long long Lattice::pair_theta(const IVec& c) const {
  long long s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += theta_pair_row[j] * c[j];
  return s;
}

Rational Lattice::pair_theta_q(const QVec& c) const {
  Rational s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += Rational(theta_pair_row[j]) * c[j];
  return s;
}

Rational Lattice::inner_coords(const QVec& a, const QVec& b) const {
  Rational s = 0;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t k = 0; k < b.size(); ++k) s += a[j] * gram[j][k] * b[k];
  return s;
}

Rational Lattice::coweight_pair(const IVec& c, int i) const {
  Rational s = 0;
  for (size_t j = 0; j < c.size(); ++j) s += coweight_row[i][j] * Rational(c[j]);
  return s;
}

namespace {

Lattice finish_lattice(const RootSystem& rs, Lattice lat) {
  const int n = rs.rank;
  lat.rs = &rs;
  // pairing rows (must be integral: Lambda <= P)
  lat.pair_row.assign(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational p = rs.pair(lat.basis[j], rs.simple[i]);
      if (denominator(p) != 1)
        throw LatticeError("lattice basis does not pair integrally with the coroots (Lambda <= P fails)");
      lat.pair_row[i][j] = numerator(p).convert_to<long long>();
    }
  lat.theta_pair_row.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    Rational p = rs.pair(lat.basis[j], rs.theta);
    if (denominator(p) != 1) throw LatticeError("theta coroot pairing not integral");
    lat.theta_pair_row[j] = numerator(p).convert_to<long long>();
  }
  lat.gram.assign(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) lat.gram[j][k] = rs.inner(lat.basis[j], lat.basis[k]);
  lat.coweight_row.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lat.coweight_row[i][j] = rs.inner(lat.basis[j], rs.fund_coweight[i]);

  // Q <= Lambda: simple roots must have integer coordinates
  for (int i = 0; i < n; ++i) {
    auto c = lat.coords_of(rs.roots[rs.simple[i]]);
    if (!c) throw LatticeError("root lattice not contained in Lambda (Q <= Lambda fails)");
    lat.simple_coords.push_back(*c);
  }
  auto th = lat.coords_of(rs.roots[rs.theta]);
  if (!th) throw LatticeError("theta not in Lambda");
  lat.theta_coords = *th;
  QVec mu0 = Rational(1, rs.c0) * rs.roots[rs.theta];
  auto m0 = lat.coords_of(mu0);
  if (!m0) throw LatticeError("mu0 = c0^{-1} theta not in Lambda");
  lat.mu0_coords = *m0;

  // nonreduced parity: <Lambda, alpha_n^vee> must be even for the order-2
  // string division in T_n to be exact
  if (rs.nonreduced) {
    for (int j = 0; j < n; ++j)
      if (lat.pair_row[n - 1][j] % 2 != 0)
        throw LatticeError("unsupported lattice for a nonreduced system: "
                           "<Lambda, alpha_n^vee> contains odd values");
  }
  return lat;
}

}  // namespace

Lattice make_lattice_P(const RootSystem& rs) {
  Lattice lat;
  lat.kind = Lattice::Kind::P;
  lat.basis = rs.fund_weight;
  lat.basis_fund.assign(rs.rank, std::vector<long long>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) lat.basis_fund[i][i] = 1;
  return finish_lattice(rs, std::move(lat));
}

Lattice make_lattice_Q(const RootSystem& rs) {
  Lattice lat;
  lat.kind = Lattice::Kind::Q;
  lat.basis_fund.assign(rs.rank, std::vector<long long>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) {
    lat.basis.push_back(rs.roots[rs.simple[i]]);
    for (int j = 0; j < rs.rank; ++j) lat.basis_fund[i][j] = rs.cartan[i][j];
  }
  return finish_lattice(rs, std::move(lat));
}

Lattice make_lattice_custom(const RootSystem& rs,
                            const std::vector<std::vector<long long>>& rows) {
  if ((int)rows.size() != rs.rank) throw LatticeError("lattice basis must have rank vectors");
  Lattice lat;
  lat.kind = Lattice::Kind::Custom;
  lat.basis_fund = rows;
  for (const auto& row : rows) {
    if ((int)row.size() != rs.rank) throw LatticeError("lattice basis row has wrong size");
    QVec v(rs.ambient, Rational(0));
    for (int j = 0; j < rs.rank; ++j) v = v + Rational(row[j]) * rs.fund_weight[j];
    lat.basis.push_back(v);
  }
  return finish_lattice(rs, std::move(lat));
}

Lattice make_lattice(const RootSystem& rs, const std::string& selector) {
  if (selector == "P") return make_lattice_P(rs);
  if (selector == "Q") return make_lattice_Q(rs);
  throw LatticeError("unknown lattice selector '" + selector + "'");
}

}  // namespace macsat
