#include "macsat/hecke.hpp"

#include <random>
#include <sstream>

namespace macsat {

void HeckeContext::init_common() {
  const WeylGroup& W = *W_;
  const int n = W.rank();
  n_ = n;

  // r_theta = t_{-mu0} r_0 and the context invariant ell(t_{mu0}) = ell(r_theta) + 1
  IVec neg_mu0 = W.lattice().mu0_coords;
  for (auto& x : neg_mu0) x = -x;
  WeylElement rtheta = W.mul(W.translation(neg_mu0), W.simple(0));
  auto rw = W.reduced_word(rtheta);
  if (rw.omega != 0 || !W.omega()[0].is_identity())
    throw ConstructionError("r_theta has a nontrivial Omega part");
  rtheta_word_ = rw.letters;
  for (int j : rtheta_word_)
    if (j == 0) throw ConstructionError("r_theta word contains the affine letter");

  WeylElement tmu0 = W.translation(W.lattice().mu0_coords);
  if (W.length(tmu0) != W.length(rtheta) + 1)
    throw ConstructionError("ell(t_mu0) != ell(r_theta) + 1");
  std::vector<int> word0{0};
  word0.insert(word0.end(), rtheta_word_.begin(), rtheta_word_.end());
  if (!(W.from_word(word0) == tmu0))
    throw ConstructionError("t_mu0 != r_0 r_theta");

  // T0 normalization: (tau(0) * prod_{word(r_theta)} tau(j))^{1/2}
  ParamScalar prod = np_.t[0];
  for (int j : rtheta_word_) prod = prod * np_.t[j];
  if (!prod.is_monomial()) throw ConstructionError("tau weight product not a monomial");
  auto [exp, coef] = *prod.terms().begin();
  ParamScalar::Exp half(exp.size());
  for (size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] % 2 != 0) throw ConstructionError("odd tau weight exponent");
    half[i] = exp[i] / 2;
  }
  T0_scale_ = ParamScalar::monomial(space_, half, coef);
}

HeckeContext::HeckeContext(const WeylGroup& W, const OrbitTable& orbits)
    : W_(&W), orbits_(&orbits), specialized_(false) {
  auto sp = std::make_shared<ParamSpace>();
  for (const auto& p : orbits.params) sp->names.push_back(p.name);
  space_ = sp;
  const int n = W.rank();
  np_.t.resize(n + 1);
  np_.xi.resize(n + 1);
  for (int node = 0; node <= n; ++node)
    np_.t[node] = ParamScalar::halfpow(space_, orbits.node_param[node], 2);
  np_.t03 = ParamScalar::halfpow(space_, orbits.p_t03, 2);
  for (int i = 1; i <= n; ++i) np_.xi[i] = np_.t[i];
  np_.xi[0] = ParamScalar::halfpow(space_, orbits.p_t01, 1) *
              ParamScalar::halfpow(space_, orbits.p_t03, 1);
  init_common();
}

HeckeContext::HeckeContext(const WeylGroup& W, const OrbitTable& orbits,
                           const std::vector<int>& d, const std::vector<int>& d2)
    : W_(&W), orbits_(&orbits), specialized_(true), d_(d), d2_(d2) {
  space_ = tau_space();
  const int n = W.rank();
  if ((int)d.size() != n + 1 || (int)d2.size() != n + 1)
    throw ConstructionError("specialized context needs d, d2 for nodes 0..n");
  np_.t.resize(n + 1);
  np_.xi.resize(n + 1);
  for (int node = 0; node <= n; ++node)
    np_.t[node] = ParamScalar::halfpow(space_, 0, 2 * (d[node] + d2[node]));
  np_.t03 = np_.t[0];
  for (int i = 1; i <= n; ++i) np_.xi[i] = np_.t[i];
  // xi(T_0) = (tau_n^* tau_0)^{1/2}
  np_.xi[0] = ParamScalar::halfpow(space_, 0, (d[n] - d2[n]) + (d[0] + d2[0]));
  init_common();
}

GroupAlgebraElement HeckeContext::zero() const {
  return GroupAlgebraElement::zero(&lattice(), space_);
}

GroupAlgebraElement HeckeContext::basis(const IVec& lambda) const {
  return GroupAlgebraElement::basis(&lattice(), space_, lambda);
}

GroupAlgebraElement HeckeContext::one() const { return basis(IVec(n_, 0)); }

GroupAlgebraElement HeckeContext::apply_Ti(int i, const GroupAlgebraElement& f) const {
  if (i < 1 || i > n_) throw ConstructionError("generator index out of range");
  if (rs().nonreduced && i == n_)
    throw ConstructionError("node n of a nonreduced system uses the two-parameter generator");
  const Lattice& lat = lattice();
  const IVec& alpha = lat.simple_coords[i - 1];
  const ParamScalar& ti = np_.t[i];
  ParamScalar ti_minus_1 = ti - ParamScalar::constant(space_, 1);

  GroupAlgebraElement out = zero();
  for (const auto& [lam, c] : f.terms()) {
    long long m = lat.pair(lam, i - 1);
    IVec refl = lam;
    for (int k = 0; k < n_; ++k) refl[k] -= m * alpha[k];
    out.add_term(refl, ti * c);
    ParamScalar cc = ti_minus_1 * c;
    if (m > 0) {
      IVec w = lam;
      for (long long j = 0; j < m; ++j) {
        out.add_term(w, cc);
        for (int k = 0; k < n_; ++k) w[k] -= alpha[k];
      }
    } else if (m < 0) {
      IVec w = lam;
      for (long long j = 1; j <= -m; ++j) {
        for (int k = 0; k < n_; ++k) w[k] += alpha[k];
        out.add_term(w, -cc);
      }
    }
  }
  return out;
}

GroupAlgebraElement HeckeContext::apply_Tn_nonreduced(const GroupAlgebraElement& f) const {
  if (!rs().nonreduced) throw ConstructionError("2 alpha_n not in R");
  const Lattice& lat = lattice();
  const int i = n_;
  const IVec& alpha = lat.simple_coords[i - 1];
  const ParamScalar& tn = np_.t[i];
  ParamScalar tn_minus_1 = tn - ParamScalar::constant(space_, 1);
  // t_n^{1/2} (t03^{1/2} - t03^{-1/2})
  ParamScalar half_tn = np_.t[i];
  {
    auto [e, c] = *half_tn.terms().begin();
    ParamScalar::Exp h(e.size());
    for (size_t k = 0; k < e.size(); ++k) h[k] = e[k] / 2;
    half_tn = ParamScalar::monomial(space_, h, c);
  }
  ParamScalar t03h = np_.t03;
  {
    auto [e, c] = *t03h.terms().begin();
    ParamScalar::Exp h(e.size());
    for (size_t k = 0; k < e.size(); ++k) h[k] = e[k] / 2;
    t03h = ParamScalar::monomial(space_, h, c);
  }
  ParamScalar extra = half_tn * (t03h - t03h.inverse());

  GroupAlgebraElement out = zero();
  for (const auto& [lam, c] : f.terms()) {
    long long m = lat.pair(lam, i - 1);
    if (m % 2 != 0) throw DivisibilityError("odd pairing with alpha_n^vee in a nonreduced system");
    IVec refl = lam;
    for (int k = 0; k < n_; ++k) refl[k] -= m * alpha[k];
    out.add_term(refl, tn * c);
    ParamScalar c1 = tn_minus_1 * c;
    ParamScalar c2 = extra * c;
    if (m > 0) {
      IVec w = lam;
      for (long long j = 0; j < m / 2; ++j) {
        out.add_term(w, c1);
        IVec ws = w;
        for (int k = 0; k < n_; ++k) ws[k] -= alpha[k];
        out.add_term(ws, c2);
        for (int k = 0; k < n_; ++k) w[k] -= 2 * alpha[k];
      }
    } else if (m < 0) {
      IVec w = lam;
      for (long long j = 1; j <= -m / 2; ++j) {
        for (int k = 0; k < n_; ++k) w[k] += 2 * alpha[k];
        out.add_term(w, -c1);
        IVec ws = w;
        for (int k = 0; k < n_; ++k) ws[k] -= alpha[k];
        out.add_term(ws, -c2);
      }
    }
  }
  return out;
}

GroupAlgebraElement HeckeContext::apply_X(const IVec& mu, const GroupAlgebraElement& f) const {
  return f.shifted(mu);
}

GroupAlgebraElement HeckeContext::apply_Tinv(int i, const GroupAlgebraElement& f) const {
  GroupAlgebraElement g =
      rs().nonreduced && i == n_ ? apply_Tn_nonreduced(f) : apply_Ti(i, f);
  const ParamScalar& ti = np_.t[i];
  g = g - f.scaled(ti - ParamScalar::constant(space_, 1));
  return g.scaled(ti.inverse());
}

GroupAlgebraElement HeckeContext::apply_T0(const GroupAlgebraElement& f) const {
  GroupAlgebraElement g = f;
  for (int j : rtheta_word_) g = apply_Tinv(j, g);
  g = g.shifted(lattice().mu0_coords);
  return g.scaled(T0_scale_);
}

GroupAlgebraElement HeckeContext::apply_node(int node, const GroupAlgebraElement& f) const {
  if (node == 0) return apply_T0(f);
  if (rs().nonreduced && node == n_) return apply_Tn_nonreduced(f);
  return apply_Ti(node, f);
}

GroupAlgebraElement HeckeContext::apply_word(const std::vector<int>& word,
                                             const GroupAlgebraElement& f) const {
  GroupAlgebraElement g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_node(*it, g);
  return g;
}

GroupAlgebraElement HeckeContext::apply_Tw(const WeylElement& w,
                                           const GroupAlgebraElement& f) const {
  auto rw = W_->reduced_word(w);
  if (rw.omega != 0)
    throw ConstructionError("T_w is only applied for w in the affine Weyl group (no Omega part)");
  return apply_word(rw.letters, f);
}

ParamScalar HeckeContext::xi_word(const std::vector<int>& word) const {
  ParamScalar p = ParamScalar::constant(space_, 1);
  for (int j : word) p = p * np_.xi[j];
  return p;
}

ParamScalar HeckeContext::tau_word(const std::vector<int>& word) const {
  ParamScalar p = ParamScalar::constant(space_, 1);
  for (int j : word) p = p * np_.t[j];
  return p;
}

void HeckeContext::corrupt_T0_for_tests() {
  T0_scale_ = T0_scale_ * ParamScalar::halfpow(space_, 0, 1);
}

// ---------------------------------------------------------------------------

std::vector<IVec> coord_box(int rank, int radius) {
  std::vector<IVec> out;
  IVec v(rank, -radius);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < rank) {
      if (++v[i] <= radius) break;
      v[i] = -radius;
      ++i;
    }
    if (i == rank) break;
  }
  return out;
}

RelationReport check_quadratic(const HeckeContext& ctx, int node, int box_radius) {
  for (const IVec& lam : coord_box(ctx.weyl().rank(), box_radius)) {
    GroupAlgebraElement f = ctx.basis(lam);
    GroupAlgebraElement tf = ctx.apply_node(node, f);
    GroupAlgebraElement lhs = ctx.apply_node(node, tf);
    GroupAlgebraElement rhs =
        tf.scaled(ctx.t_node(node) - ParamScalar::constant(ctx.space(), 1)) +
        f.scaled(ctx.t_node(node));
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "quadratic relation fails at node " << node << " on e^" << f.str();
      return {false, os.str()};
    }
  }
  return {true, ""};
}

RelationReport check_braid(const HeckeContext& ctx, int a, int b, int box_radius) {
  const RootSystem& rs = ctx.rs();
  AffineRoot ra = affine_simple(rs, a), rbb = affine_simple(rs, b);
  Rational pab = rs.pair(rs.roots[ra.root], rbb.root);
  Rational pba = rs.pair(rs.roots[rbb.root], ra.root);
  Rational prod = pab * pba;
  int m;
  if (prod == 0)
    m = 2;
  else if (prod == 1)
    m = 3;
  else if (prod == 2)
    m = 4;
  else if (prod == 3)
    m = 6;
  else
    return {true, "m(a,b) infinite: no braid relation"};

  for (const IVec& lam : coord_box(ctx.weyl().rank(), box_radius)) {
    GroupAlgebraElement f1 = ctx.basis(lam), f2 = f1;
    for (int k = 0; k < m; ++k) {
      f1 = ctx.apply_node(k % 2 == 0 ? a : b, f1);
      f2 = ctx.apply_node(k % 2 == 0 ? b : a, f2);
    }
    if (!(f1 == f2)) {
      std::ostringstream os;
      os << "braid relation (m=" << m << ") fails for nodes " << a << "," << b;
      return {false, os.str()};
    }
  }
  return {true, ""};
}

RelationReport check_bernstein_lusztig(const HeckeContext& ctx, int i, const IVec& lambda,
                                       const IVec& mu) {
  const Lattice& lat = ctx.lattice();
  const int n = ctx.weyl().rank();
  long long m = lat.pair(lambda, i - 1);
  IVec rlam = lambda;
  for (int k = 0; k < n; ++k) rlam[k] -= m * lat.simple_coords[i - 1][k];

  GroupAlgebraElement em = ctx.basis(mu);
  GroupAlgebraElement lhs =
      ctx.apply_node(i, ctx.apply_X(lambda, em)) - ctx.apply_X(rlam, ctx.apply_node(i, em));

  GroupAlgebraElement diff = ctx.basis(lambda) - ctx.basis(rlam);
  GroupAlgebraElement rhs(nullptr, nullptr);
  if (ctx.rs().nonreduced && i == n) {
    GroupAlgebraElement frac = string_quotient(diff, i, 2);
    ParamScalar tn = ctx.t_node(i);
    auto halve = [&](const ParamScalar& p) {
      auto [e, c] = *p.terms().begin();
      ParamScalar::Exp h(e.size());
      for (size_t k = 0; k < e.size(); ++k) h[k] = e[k] / 2;
      return ParamScalar::monomial(ctx.space(), h, c);
    };
    ParamScalar extra = halve(tn) * (halve(ctx.t03()) - halve(ctx.t03()).inverse());
    IVec neg_alpha(n);
    for (int k = 0; k < n; ++k) neg_alpha[k] = -lat.simple_coords[i - 1][k];
    rhs = frac.scaled(tn - ParamScalar::constant(ctx.space(), 1)) +
          frac.shifted(neg_alpha).scaled(extra);
  } else {
    GroupAlgebraElement frac = string_quotient(diff, i, 1);
    rhs = frac.scaled(ctx.t_node(i) - ParamScalar::constant(ctx.space(), 1));
  }
  rhs = rhs * em;
  if (!(lhs == rhs)) {
    std::ostringstream os;
    os << "Bernstein-Lusztig cross relation fails at i=" << i;
    return {false, os.str()};
  }
  return {true, ""};
}

}  // namespace macsat
