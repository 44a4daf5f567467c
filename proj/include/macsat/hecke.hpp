// The polynomial representation of the extended affine Hecke algebra on
// GroupAlgebraElements: T_1..T_n, the nonreduced T_n variant, X_mu, inverses,
// the composite T_0 = xi_tau(t_{mu0})^{1/2} X_{mu0} T_{r_theta}^{-1}, and
// word application.
#pragma once

#include <map>
#include <mutex>

#include "macsat/coeffs.hpp"
#include "macsat/weyl.hpp"

namespace macsat {

// Per-node parameter monomials. Generic contexts bind them to the orbit
// parameters of the OrbitTable; specialized contexts to tau^{d_i}.
struct NodeParams {
  std::vector<ParamScalar> t;   // t[i] = quadratic parameter of node i, 0..n
  ParamScalar t03;              // extra parameter of the nonreduced T_n
  std::vector<ParamScalar> xi;  // xi[i] = xi(T_i); xi[0] = (t01 t03)^{1/2}
};

class HeckeContext {
 public:
  HeckeContext(const WeylGroup& W, const OrbitTable& orbits);               // generic parameters
  HeckeContext(const WeylGroup& W, const OrbitTable& orbits,
               const std::vector<int>& d, const std::vector<int>& d2);      // specialized (tau)

  const WeylGroup& weyl() const { return *W_; }
  const RootSystem& rs() const { return W_->rs(); }
  const Lattice& lattice() const { return W_->lattice(); }
  const OrbitTable& orbits() const { return *orbits_; }
  const ParamSpacePtr& space() const { return space_; }
  bool specialized() const { return specialized_; }

  GroupAlgebraElement zero() const;
  GroupAlgebraElement basis(const IVec& lambda) const;
  GroupAlgebraElement one() const;

  // generators
  GroupAlgebraElement apply_Ti(int i, const GroupAlgebraElement& f) const;  // 1<=i<=n, 2alpha_i not in R
  GroupAlgebraElement apply_Tn_nonreduced(const GroupAlgebraElement& f) const;
  GroupAlgebraElement apply_X(const IVec& mu, const GroupAlgebraElement& f) const;
  GroupAlgebraElement apply_T0(const GroupAlgebraElement& f) const;
  GroupAlgebraElement apply_Tinv(int i, const GroupAlgebraElement& f) const;  // 1<=i<=n
  // T_node for node in 0..n (dispatches to the right generator)
  GroupAlgebraElement apply_node(int node, const GroupAlgebraElement& f) const;

  // T_w along reduced_word(w), w in W (Omega parts excluded)
  GroupAlgebraElement apply_Tw(const WeylElement& w, const GroupAlgebraElement& f) const;
  GroupAlgebraElement apply_word(const std::vector<int>& word, const GroupAlgebraElement& f) const;

  // parameter monomials
  const ParamScalar& t_node(int node) const { return np_.t[node]; }
  const ParamScalar& t03() const { return np_.t03; }
  const ParamScalar& xi_node(int node) const { return np_.xi[node]; }
  ParamScalar xi_word(const std::vector<int>& word) const;       // prod xi over letters
  ParamScalar tau_word(const std::vector<int>& word) const;      // prod t_node over letters
  const ParamScalar& T0_scale() const { return T0_scale_; }      // xi_tau(t_{mu0})^{1/2}
  const std::vector<int>& rtheta_word() const { return rtheta_word_; }

  // specialization data (specialized contexts only)
  const std::vector<int>& d() const { return d_; }
  const std::vector<int>& d2() const { return d2_; }
  int d_node(int i) const { return d_[i] + d2_[i]; }              // tau_i = tau^{d_node}
  int dstar_node(int i) const { return d_[i] - d2_[i]; }          // tau_i^*

  // test hook: multiply the T_0 normalization by an extra t-power (negative control)
  void corrupt_T0_for_tests();

 private:
  const WeylGroup* W_;
  const OrbitTable* orbits_;
  ParamSpacePtr space_;
  bool specialized_ = false;
  std::vector<int> d_, d2_;
  NodeParams np_;
  std::vector<int> rtheta_word_;
  ParamScalar T0_scale_;
  int n_ = 0;

  void init_common();
};

// Randomized relation checkers (exact; used by cmd_verify and the test suites).
struct RelationReport {
  bool ok = true;
  std::string detail;
};
RelationReport check_quadratic(const HeckeContext& ctx, int node, int box_radius);
RelationReport check_braid(const HeckeContext& ctx, int node_a, int node_b, int box_radius);
RelationReport check_bernstein_lusztig(const HeckeContext& ctx, int i, const IVec& lambda,
                                       const IVec& mu);

// All lattice points with |coords| <= radius (the operator spanning set).
std::vector<IVec> coord_box(int rank, int radius);

}  // namespace macsat
