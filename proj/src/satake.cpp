#include "macsat/satake.hpp"

#include <sstream>

namespace macsat {

SatakeData SatakeData::split(int nodes, std::optional<Rational> tau) {
  SatakeData d;
  d.tau = std::move(tau);
  d.d.assign(nodes, 1);
  d.d2.assign(nodes, 0);
  return d;
}

void validate_satake_data(const RootSystem& rs, const OrbitTable& orbits, const SatakeData& data) {
  const int n = rs.rank;
  if ((int)data.d.size() != n + 1 || (int)data.d2.size() != n + 1)
    throw ConstructionError("SatakeData needs d(a_i), d(2a_i) for nodes 0..n");
  for (int i = 0; i <= n; ++i) {
    if (data.d[i] < 1) throw ConstructionError("d(a_i) must be >= 1");
    if (data.d2[i] < 0) throw ConstructionError("d(2a_i) must be >= 0");
    bool divisible_node = rs.nonreduced && (i == 0 || i == n);
    if (!divisible_node && data.d2[i] != 0)
      throw ConstructionError("d(2a_i) must vanish when 2a_i is not an affine root");
  }
  // d must be constant on W-orbits of affine simple roots (tau(w) well-defined)
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (orbits.orbit_id(affine_simple(rs, i)) != orbits.orbit_id(affine_simple(rs, j))) continue;
      if (data.d[i] != data.d[j] || data.d2[i] != data.d2[j])
        throw ConstructionError("d must be constant on W-orbits of the affine simple roots");
    }
  if (data.tau && *data.tau < 2 && *data.tau != 1)
    throw ConstructionError("numeric residue cardinality must be >= 2 (or the formal value 1)");
}

SatakeEngine::SatakeEngine(const WeylGroup& W, const OrbitTable& orbits, const SatakeData& data)
    : W_(&W), orbits_(&orbits), data_(data), ctx_(W, orbits, data.d, data.d2) {
  validate_satake_data(W.rs(), orbits, data);
}

long long SatakeEngine::tau_halfexp(const WeylElement& w) const {
  auto rw = W_->reduced_word(w);
  long long h = 0;
  for (int j : rw.letters) h += 2LL * data_.d_node(j);
  return h;
}

ParamScalar SatakeEngine::tau_of(const WeylElement& w) const {
  return ParamScalar::halfpow(tau_space(), 0, tau_halfexp(w));
}

long long SatakeEngine::deltaP_halfexp(const IVec& lambda) const {
  const int n = W_->rank();
  // lambda = lam1 - lam2 with both dominant: shift by N * 2rho (2rho in Q <= Lambda)
  long long worst = 0;
  for (int i = 0; i < n; ++i) worst = std::min(worst, ctx_.lattice().pair(lambda, i));
  long long N = (-worst + 1) / 2 + 1;
  IVec two_rho(n, 0);
  const RootSystem& rs = W_->rs();
  QVec acc(rs.ambient, Rational(0));
  for (int i = 0; i < (int)rs.roots.size(); ++i)
    if (rs.positive[i] && !(rs.nonreduced && rs.len2(i) == 4)) acc = acc + rs.roots[i];
  auto c = ctx_.lattice().coords_of(acc);
  if (!c) throw LatticeError("2rho not in Lambda");
  two_rho = *c;
  IVec lam2(n), lam1(n);
  for (int i = 0; i < n; ++i) {
    lam2[i] = N * two_rho[i];
    lam1[i] = lambda[i] + lam2[i];
  }
  if (!W_->is_dominant(lam1) || !W_->is_dominant(lam2))
    throw ConstructionError("dominant decomposition failed");
  return tau_halfexp(W_->translation(lam1)) - tau_halfexp(W_->translation(lam2));
}

ParamScalar SatakeEngine::deltaP(const IVec& lambda) const {
  return ParamScalar::halfpow(tau_space(), 0, deltaP_halfexp(lambda));
}

ParamScalar SatakeEngine::deltaP_half_inverse(const IVec& lambda) const {
  long long h = deltaP_halfexp(lambda);
  if (h % 2 != 0) throw ConstructionError("delta_P has a non-integral tau power");
  return ParamScalar::halfpow(tau_space(), 0, -h / 2);
}

ParamScalar SatakeEngine::vol_ItlamK(const IVec& lambda) const {
  ParamScalar v = ParamScalar::zero(tau_space());
  WeylElement tl = W_->translation(lambda);
  for (const auto& w : W_->finite_elements())
    v += tau_of(W_->mul(tl, w));
  return v;
}

ParamScalar SatakeEngine::specialize_params(const ParamScalar& f) const {
  const OrbitTable& orb = *orbits_;
  std::vector<int> image_name(orb.nparams(), 0);
  std::vector<int> image_half(orb.nparams(), 0);
  for (int p = 0; p < orb.nparams(); ++p) {
    const ParamInfo& info = orb.params[p];
    switch (info.kind) {
      case ParamInfo::Kind::T01: image_half[p] = data_.dstar_node(W_->rank()); break;
      case ParamInfo::Kind::T02: image_half[p] = data_.dstar_node(0); break;
      case ParamInfo::Kind::T03: image_half[p] = data_.d_node(0); break;
      case ParamInfo::Kind::TN:
      case ParamInfo::Kind::TMID:
      case ParamInfo::Kind::RCLASS: image_half[p] = data_.d_node(info.rep_node); break;
    }
  }
  return f.substitute(tau_space(), image_name, image_half);
}

GroupAlgebraElement SatakeEngine::specialize_params(const GroupAlgebraElement& f) const {
  GroupAlgebraElement out(&ctx_.lattice(), tau_space());
  for (const auto& [w, c] : f.terms()) out.add_term(w, specialize_params(c));
  return out;
}

long long SatakeEngine::j_tau_halfexp(const IVec& lambda) const {
  const int n = W_->rank();
  auto od = W_->orbit_data(lambda);
  // xi part: letter 0 -> (tau_n^* tau_0)^{1/2}, letter i -> tau_i
  Rational h = 0;
  for (int j : od.w_lambda_word) {
    if (j == 0)
      h += Rational(data_.dstar_node(n) + data_.d_node(0));
    else
      h += Rational(2 * data_.d_node(j));
  }
  // t^(lambda,lambda_bar) part with typed targets
  const Lattice& lat = ctx_.lattice();
  for (int i = 1; i < n; ++i)
    h += 2 * Rational(data_.d_node(i)) * lat.coweight_pair(od.lambda_minus, i - 1);
  Rational en = lat.coweight_pair(od.lambda_minus, n - 1);
  h += en * Rational(data_.dstar_node(n) + data_.d_node(n));
  if (denominator(h) != 1) throw ConstructionError("j_lambda(tau) has a non half-integral power");
  return numerator(h).convert_to<long long>();
}

ParamScalar SatakeEngine::j_tau(const IVec& lambda) const {
  return ParamScalar::halfpow(tau_space(), 0, j_tau_halfexp(lambda));
}

GroupAlgebraElement SatakeEngine::satake_E(const IVec& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
  }
  GroupAlgebraElement e = compute(lambda);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(lambda, e);
  return e;
}

GroupAlgebraElement SatakeEngine::compute(const IVec& lambda) const {
  auto od = W_->orbit_data(lambda);
  if (od.w_lambda_word.empty())
    return ctx_.basis(lambda).scaled(deltaP_half_inverse(lambda));
  int i1 = od.w_lambda_word.front();
  IVec prev = W_->affine_act_node(i1, lambda);
  return ctx_.apply_node(i1, satake_E(prev));
}

void SatakeEngine::clear_cache() const {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.clear();
}

// ---------------------------------------------------------------------------

UnramifiedCharacter make_exact_character(std::vector<GaussianRational> values) {
  for (const auto& v : values)
    if (v.is_zero()) throw std::domain_error("unramified character value must be nonzero");
  UnramifiedCharacter chi;
  chi.exact = std::move(values);
  return chi;
}

UnramifiedCharacter make_float_character(std::vector<std::complex<double>> values) {
  for (const auto& v : values)
    if (v == std::complex<double>(0.0, 0.0))
      throw std::domain_error("unramified character value must be nonzero");
  UnramifiedCharacter chi;
  chi.floats = std::move(values);
  return chi;
}

namespace {

GaussianRational gauss_pow(const GaussianRational& base, long long e) {
  GaussianRational b = e >= 0 ? base : base.inverse();
  long long k = e >= 0 ? e : -e;
  GaussianRational r{Rational(1)};
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::complex<double> cplx_pow(const std::complex<double>& base, long long e) {
  std::complex<double> b = e >= 0 ? base : 1.0 / base;
  long long k = e >= 0 ? e : -e;
  std::complex<double> r{1.0, 0.0};
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace

MatrixCoefficient matrix_coefficient(const IVec& lambda, const UnramifiedCharacter& chi,
                                     const SatakeEngine& satake, const MacdonaldEngine& generic) {
  const SatakeData& data = satake.data();
  if (!data.tau) throw std::domain_error("matrix coefficients need a numeric residue cardinality");
  if (chi.is_exact() == !chi.floats.empty())
    throw std::domain_error("character must be exactly one of exact-rational or float");
  Rational tau = *data.tau;
  const int n = (int)lambda.size();

  GroupAlgebraElement Et = satake.specialize_params(generic.E(lambda));
  long long jh = satake.j_tau_halfexp(lambda);
  ParamScalar vol = satake.vol_ItlamK(lambda);

  auto eval_tau_exact = [&](const ParamScalar& p) {
    TauQuad v(tau);
    for (const auto& [e, c] : p.terms())
      v = v + TauQuad::tau_halfpow(tau, e[0]) * TauQuad{GaussianRational(c), GaussianRational(Rational(0)), tau};
    return v;
  };
  auto eval_tau_float = [&](const ParamScalar& p) {
    std::complex<double> v = 0.0;
    double st = std::sqrt(to_double(tau));
    for (const auto& [e, c] : p.terms()) v += to_double(c) * std::pow(st, (double)e[0]);
    return v;
  };

  MatrixCoefficient out;
  if (chi.is_exact()) {
    if ((int)chi.exact.size() != n) throw std::domain_error("character has wrong rank");
    TauQuad sum(tau);
    for (const auto& [w, c] : Et.terms()) {
      GaussianRational ch{Rational(1)};
      for (int j = 0; j < n; ++j) ch = ch * gauss_pow(chi.exact[j], -w[j]);  // chi^{-1}(e^mu)
      sum = sum + eval_tau_exact(c) * TauQuad{ch, GaussianRational(Rational(0)), tau};
    }
    TauQuad jv = TauQuad::tau_halfpow(tau, jh);
    TauQuad volv = eval_tau_exact(vol);
    out.exact = jv * sum * volv.inverse();
    out.value = out.exact->to_complex();
    return out;
  }
  if ((int)chi.floats.size() != n) throw std::domain_error("character has wrong rank");
  std::complex<double> sum = 0.0;
  for (const auto& [w, c] : Et.terms()) {
    std::complex<double> ch{1.0, 0.0};
    for (int j = 0; j < n; ++j) ch *= cplx_pow(chi.floats[j], -w[j]);
    sum += eval_tau_float(c) * ch;
  }
  double st = std::sqrt(to_double(tau));
  out.value = std::pow(st, (double)jh) * sum / eval_tau_float(vol);
  return out;
}

}  // namespace macsat
