// The specialized (tau) side: tau(w) volumes, delta_P, the parameter
// specialization, the Satake basis via the specialized recursion, the
// cross-path identity check, and unramified matrix coefficients.
#pragma once

#include <complex>
#include <optional>

#include "macsat/macdonald.hpp"

namespace macsat {

struct SatakeData {
  std::optional<Rational> tau;  // residue cardinality; empty = formal
  std::vector<int> d;   // d(a_i), i = 0..n, each >= 1
  std::vector<int> d2;  // d(2a_i), 0 unless 2a_i is an affine root

  static SatakeData split(int nodes, std::optional<Rational> tau = std::nullopt);
  int d_node(int i) const { return d[i] + d2[i]; }
  int dstar_node(int i) const { return d[i] - d2[i]; }
};

// Validates against the root system (divisible nodes, orbit constancy).
void validate_satake_data(const RootSystem& rs, const OrbitTable& orbits, const SatakeData& data);

class SatakeEngine {
 public:
  SatakeEngine(const WeylGroup& W, const OrbitTable& orbits, const SatakeData& data);

  const HeckeContext& ctx() const { return ctx_; }
  const SatakeData& data() const { return data_; }
  const WeylGroup& weyl() const { return *W_; }

  // tau(w) = prod tau_{i_j} over a reduced word; returned as halfexp of tau
  long long tau_halfexp(const WeylElement& w) const;
  ParamScalar tau_of(const WeylElement& w) const;

  // delta_P(t_lambda), extended from dominants as a group homomorphism;
  // returned as the halfexp of tau (delta_P itself has integral tau-powers)
  long long deltaP_halfexp(const IVec& lambda) const;
  ParamScalar deltaP(const IVec& lambda) const;
  ParamScalar deltaP_half_inverse(const IVec& lambda) const;  // delta_P^{-1/2}(t_lambda)

  // vol(I t_lambda K) = sum_{w in W_ring} tau(t_lambda w); vol(K t_{-lambda} I) equals it
  ParamScalar vol_ItlamK(const IVec& lambda) const;

  // exact substitution of generic parameters into Q[tau^{+-1/2}]
  ParamScalar specialize_params(const ParamScalar& f) const;
  GroupAlgebraElement specialize_params(const GroupAlgebraElement& f) const;
  // j_lambda evaluated through the typed specialization of its defining formula
  long long j_tau_halfexp(const IVec& lambda) const;
  ParamScalar j_tau(const IVec& lambda) const;

  // the Satake basis element, by the specialized operator recursion
  GroupAlgebraElement satake_E(const IVec& lambda) const;
  void clear_cache() const;

 private:
  const WeylGroup* W_;
  const OrbitTable* orbits_;
  SatakeData data_;
  HeckeContext ctx_;
  mutable std::mutex mu_;
  mutable std::map<IVec, GroupAlgebraElement> cache_;

  GroupAlgebraElement compute(const IVec& lambda) const;
};

// ---------------------------------------------------------------------------
// Unramified characters and matrix coefficients.
struct UnramifiedCharacter {
  // one value per lattice basis vector; exactly one of the two forms is set
  std::vector<GaussianRational> exact;
  std::vector<std::complex<double>> floats;
  bool is_exact() const { return !exact.empty(); }
};

UnramifiedCharacter make_exact_character(std::vector<GaussianRational> values);
UnramifiedCharacter make_float_character(std::vector<std::complex<double>> values);

struct MatrixCoefficient {
  std::optional<TauQuad> exact;  // set iff the character is exact
  std::complex<double> value;    // float evaluation (always set)
};

// E_chi(t_{-lambda}) = j_lambda(tau)/vol(K t_{-lambda} I) * chi^{-1}(E_lambda(tau)).
// Requires numeric tau in data.
MatrixCoefficient matrix_coefficient(const IVec& lambda, const UnramifiedCharacter& chi,
                                     const SatakeEngine& satake, const MacdonaldEngine& generic);

}  // namespace macsat
