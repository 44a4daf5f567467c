// Extended affine Weyl group W^e = W_ring x| Lambda: canonical (translation,
// finite part) forms, the level-zero affine action, hyperplane-count length,
// greedy reduced words, Omega, minuscule elements and w_lambda data.
#pragma once

#include <vector>

#include "macsat/rootdata.hpp"

namespace macsat {

using IntMat = std::vector<std::vector<long long>>;  // row-major, acts on Lambda coords

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IVec mat_apply(const IntMat& m, const IVec& v);
QVec mat_apply(const IntMat& m, const QVec& v);

// w = t_mu * w_fin, translations on the left. Immutable value type.
struct WeylElement {
  IVec mu;
  IntMat fin;

  bool operator==(const WeylElement& o) const { return mu == o.mu && fin == o.fin; }
  bool operator<(const WeylElement& o) const { return mu != o.mu ? mu < o.mu : fin < o.fin; }
  bool is_identity() const;
  bool is_translation() const;
};

// Group structure over a fixed lattice.
class WeylGroup {
 public:
  WeylGroup(const RootSystem& rs, const Lattice& lat);

  const RootSystem& rs() const { return *rs_; }
  const Lattice& lattice() const { return *lat_; }
  int rank() const { return rs_->rank; }

  WeylElement identity() const;
  WeylElement translation(const IVec& mu) const;
  WeylElement simple(int node) const;  // node in 0..n; node 0 is the affine reflection
  WeylElement finite_reflection(int i) const { return simple_fin_[i]; }  // i in 1..n
  WeylElement mul(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  WeylElement from_word(const std::vector<int>& word) const;  // r_{w[0]} ... r_{w.back()}

  // level-zero affine action on Lambda-coordinates (rational points allowed)
  QVec affine_act(const WeylElement& w, const QVec& x) const;
  IVec affine_act(const WeylElement& w, const IVec& x) const;
  QVec affine_act_node(int node, const QVec& x) const;
  IVec affine_act_node(int node, const IVec& x) const;
  // linear action of the finite part
  IVec linear_act(const WeylElement& w, const IVec& x) const;

  // level-zero action on affine roots
  AffineRoot act_affine_root(const WeylElement& w, const AffineRoot& a) const;

  // number of affine hyperplane families separating the fundamental alcove from its image
  long long length(const WeylElement& w) const;
  // w(alpha_node) is a negative affine root  <=>  ell(w r_node) < ell(w)
  bool right_descent(const WeylElement& w, int node) const;

  struct ReducedWord {
    int omega = 0;  // index into omega() list
    std::vector<int> letters;
  };
  ReducedWord reduced_word(const WeylElement& w) const;
  std::string format_word(const ReducedWord& rw) const;  // "w = omega * r3 r0 r1"

  // minuscule elements of Lambda and the length-zero subgroup
  const std::vector<IVec>& minuscule_set() const { return minuscule_; }
  const std::vector<WeylElement>& omega() const { return omega_; }
  int omega_index(const WeylElement& w) const;  // -1 if not in Omega

  struct WeightOrbitData {
    IVec lambda_tilde;
    WeylElement w_lambda;
    std::vector<int> w_lambda_word;  // greedy word, first letter outermost
    IVec lambda_minus;               // antidominant finite-orbit representative
    WeylElement w_ring_lambda;       // minimal finite elt with w^{-1} lambda = lambda_minus
    std::vector<int> w_ring_word;
  };
  WeightOrbitData orbit_data(const IVec& lambda) const;

  // minimal finite word taking the dominant representative of W lambda to lambda
  std::vector<int> word_from_dominant(const IVec& lambda, IVec* dominant_out = nullptr) const;

  bool is_dominant(const IVec& lambda) const;
  bool is_antidominant(const IVec& lambda) const;
  // affine-root value a_node(x) for x in Lambda coords
  Rational alcove_value(int node, const QVec& x) const;

  const QVec& sample_point() const { return sample_; }  // interior of the fundamental alcove

  // all finite Weyl group elements (BFS; guarded against huge groups)
  const std::vector<WeylElement>& finite_elements() const;

  // test-support: Bruhat subword order on W (not exposed to the CLI)
  bool bruhat_leq(const WeylElement& x, const WeylElement& y) const;

 private:
  const RootSystem* rs_;
  const Lattice* lat_;
  std::vector<IntMat> simple_mat_;       // finite reflection matrices on Lambda coords, 1..n
  std::vector<WeylElement> simple_fin_;  // r_i as elements
  WeylElement r0_;
  std::vector<AffineRoot> node_root_;    // affine simple roots by node
  QVec sample_;
  std::vector<IVec> minuscule_;
  std::vector<WeylElement> omega_;
  mutable std::vector<WeylElement> finite_cache_;

  std::map<IVec, int> root_coord_index_;  // Lambda coords of a root -> root index
  long long root_index_of_coords(const IVec& c) const;
};

}  // namespace macsat
