#include "macsat/macdonald.hpp"

#include <sstream>

namespace macsat {

ParamScalar MacdonaldEngine::xi(const std::vector<int>& word) const {
  return ctx_->xi_word(word);
}

ParamScalar MacdonaldEngine::xi(const WeylElement& w) const {
  auto rw = ctx_->weyl().reduced_word(w);
  if (rw.omega != 0) throw ConstructionError("xi is defined on the affine Weyl group");
  return xi(rw.letters);
}

ParamScalar MacdonaldEngine::t_power(const IVec& lambda) const {
  const WeylGroup& W = ctx_->weyl();
  const Lattice& lat = ctx_->lattice();
  const OrbitTable& orb = ctx_->orbits();
  const int n = W.rank();
  IVec lm = W.orbit_data(lambda).lambda_minus;

  std::vector<Rational> exp(ctx_->space()->names.size(), Rational(0));  // full powers
  for (int i = 1; i < n; ++i) exp[orb.node_param[i]] += lat.coweight_pair(lm, i - 1);
  Rational en = lat.coweight_pair(lm, n - 1);
  int p_tn = orb.node_param[n];
  int p_tnstar = ctx_->rs().nonreduced ? orb.p_t01 : p_tn;
  exp[p_tn] += en / 2;
  exp[p_tnstar] += en / 2;

  ParamScalar::Exp halfexp(exp.size());
  for (size_t k = 0; k < exp.size(); ++k) {
    Rational h = 2 * exp[k];
    if (denominator(h) != 1)
      throw ConstructionError("non-integral doubled exponent in t^(lambda,lambda_bar)");
    halfexp[k] = numerator(h).convert_to<int>();
  }
  return ParamScalar::monomial(ctx_->space(), halfexp);
}

NormalizationFactor MacdonaldEngine::j_factor(const IVec& lambda) const {
  NormalizationFactor nf;
  auto od = ctx_->weyl().orbit_data(lambda);
  nf.xi_part = xi(od.w_lambda_word);
  nf.t_part = t_power(lambda);
  nf.j = nf.xi_part * nf.t_part;
  if (!nf.j.is_monomial()) throw ConstructionError("j_lambda is not a monomial");
  return nf;
}

GroupAlgebraElement MacdonaldEngine::E(const IVec& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return it->second;
  }
  GroupAlgebraElement e = compute_E(lambda);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(lambda, e);
  return e;
}

GroupAlgebraElement MacdonaldEngine::compute_E(const IVec& lambda) const {
  const WeylGroup& W = ctx_->weyl();
  auto od = W.orbit_data(lambda);
  if (od.w_lambda_word.empty()) return ctx_->basis(lambda);  // minuscule: E_nu = e^nu

  int i1 = od.w_lambda_word.front();
  IVec prev = W.affine_act_node(i1, lambda);  // r_{i1} lambda, one step down
  GroupAlgebraElement Eprev = E(prev);
  ParamScalar jprev = j_factor(prev).j;
  ParamScalar jcur = j_factor(lambda).j;
  GroupAlgebraElement g = ctx_->apply_node(i1, Eprev.scaled(jprev));
  return g.scaled(jcur.inverse());
}

void MacdonaldEngine::clear_cache() const {
  std::lock_guard<std::mutex> lock(mu_);
  cache_.clear();
}

GroupAlgebraElement MacdonaldEngine::isobaric_pi(int i, const GroupAlgebraElement& f) const {
  const WeylGroup& W = ctx_->weyl();
  const Lattice& lat = ctx_->lattice();
  const int n = W.rank();
  IVec neg_alpha(n);
  for (int k = 0; k < n; ++k) neg_alpha[k] = -lat.simple_coords[i - 1][k];

  GroupAlgebraElement rf = ctx_->zero();
  for (const auto& [w, c] : f.terms()) {
    IVec rw = w;
    long long m = lat.pair(w, i - 1);
    for (int k = 0; k < n; ++k) rw[k] -= m * lat.simple_coords[i - 1][k];
    rf.add_term(rw, c);
  }
  GroupAlgebraElement num = f - rf.shifted(neg_alpha);
  return string_quotient(num, i, 1);
}

GroupAlgebraElement MacdonaldEngine::demazure_limit(const IVec& lambda) const {
  IVec dominant;
  std::vector<int> word = ctx_->weyl().word_from_dominant(lambda, &dominant);
  GroupAlgebraElement f = ctx_->basis(dominant);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = isobaric_pi(*it, f);
  return f;
}

GroupAlgebraElement MacdonaldEngine::limit_t_infinity(const GroupAlgebraElement& f,
                                                      const IVec& lead) const {
  ParamScalar lc = f.coeff(lead);
  if (lc.is_zero()) throw LimitError("leading weight has zero coefficient");
  if (!lc.is_monomial()) throw LimitError("leading coefficient is not invertible");
  GroupAlgebraElement g = f.scaled(lc.inverse());

  GroupAlgebraElement out = ctx_->zero();
  for (const auto& [w, c] : g.terms()) {
    int top = c.max_total_halfdeg();
    if (top > 0) {
      std::ostringstream os;
      os << "t->infinity limit does not exist: coefficient " << c.str() << " at weight ";
      for (size_t k = 0; k < w.size(); ++k) os << (k ? "," : "[") << w[k];
      os << "] has positive degree";
      throw LimitError(os.str());
    }
    ParamScalar keep = c.total_halfdeg_part(0);
    if (!keep.is_zero())
      out.add_term(w, ParamScalar::constant(ctx_->space(), keep.eval_all_one()));
  }
  return out;
}

std::map<IVec, Rational> MacdonaldEngine::collapse_all_one(const GroupAlgebraElement& f) const {
  std::map<IVec, Rational> out;
  for (const auto& [w, c] : f.terms()) {
    Rational v = c.eval_all_one();
    if (v != 0) out[w] = v;
  }
  return out;
}

}  // namespace macsat
