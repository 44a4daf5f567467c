// q->infinity nonsymmetric Macdonald polynomials: the normalization factors
// xi(w), t^(lambda,lambda_bar), j_lambda, the T_{w_lambda} recursion, and the
// two independent oracles (t=1 collapse and the t->infinity Demazure limit).
#pragma once

#include "macsat/hecke.hpp"

namespace macsat {

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalizationFactor {
  ParamScalar j;        // invertible monomial
  ParamScalar xi_part;  // xi(w_lambda)
  ParamScalar t_part;   // t^(lambda, lambda_bar)
};

class MacdonaldEngine {
 public:
  explicit MacdonaldEngine(const HeckeContext& ctx) : ctx_(&ctx) {}

  const HeckeContext& ctx() const { return *ctx_; }

  ParamScalar xi(const WeylElement& w) const;
  ParamScalar xi(const std::vector<int>& word) const;
  // t^(lambda,lambda_bar) = (t_n^* t_n)^{(lambda_-,lambda_n^vee)/2} prod_{i<n} t_i^{(lambda_-,lambda_i^vee)}
  ParamScalar t_power(const IVec& lambda) const;
  NormalizationFactor j_factor(const IVec& lambda) const;

  // E_lambda by the recursion T_{w_lambda} j_{lambda~} e^{lambda~} = j_lambda E_lambda.
  // Cached per lambda; prefix reuse through the recursive peeling of the
  // greedy word.
  GroupAlgebraElement E(const IVec& lambda) const;

  // independent Demazure oracle: finite isobaric operators along the minimal
  // word from the dominant orbit representative
  GroupAlgebraElement demazure_limit(const IVec& lambda) const;
  GroupAlgebraElement isobaric_pi(int i, const GroupAlgebraElement& f) const;  // 1<=i<=n

  // coefficientwise t->infinity limit after normalizing the e^{lead} coefficient to 1
  GroupAlgebraElement limit_t_infinity(const GroupAlgebraElement& f, const IVec& lead) const;
  // all parameters -> 1
  std::map<IVec, Rational> collapse_all_one(const GroupAlgebraElement& f) const;

  void clear_cache() const;

 private:
  const HeckeContext* ctx_;
  mutable std::mutex mu_;
  mutable std::map<IVec, GroupAlgebraElement> cache_;

  GroupAlgebraElement compute_E(const IVec& lambda) const;
};

}  // namespace macsat
