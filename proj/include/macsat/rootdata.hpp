// Finite root systems (A-G, nonreduced BC), their affine extensions, the
// normalized inner product, weight/root lattices and the orbit/parameter table.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macsat/numbers.hpp"

namespace macsat {

enum class RootType { A, B, C, D, E, F, G, BC };

RootType parse_root_type(const std::string& s);
std::string root_type_name(RootType t);

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Roots are realized in an orthogonal ambient space with exact rational
// coordinates; inner(x,y) = scale * dot(x,y) with scale chosen so short roots
// have squared length 2 in reduced systems and lengths {1,2,4} in BC.
struct RootSystem {
  RootType type;
  int rank = 0;
  bool nonreduced = false;
  int c0 = 1;    // alpha_0 = c0^{-1} (delta - theta)
  int lace = 1;  // r = max lace count (reduced); 1 for BC (unused there)
  int ambient = 0;
  Rational scale = 1;

  std::vector<QVec> roots;     // every root exactly once, realization coords
  std::vector<int> neg_idx;    // index of -roots[i]
  std::vector<char> positive;  // roots[i] in R^+ ?
  std::vector<int> simple;     // simple[i] = index of alpha_{i+1}
  int theta = -1;              // index of theta

  std::vector<QVec> fund_weight;    // lambda_i
  std::vector<QVec> fund_coweight;  // lambda_i^vee
  std::vector<std::vector<long long>> cartan;  // cartan[j][i] = <alpha_j, alpha_i^vee>

  Rational inner(const QVec& x, const QVec& y) const { return scale * dot(x, y); }
  Rational len2(int idx) const { return inner(roots[idx], roots[idx]); }
  QVec coroot(int idx) const;                      // 2a/(a,a)
  Rational pair(const QVec& x, int idx) const;     // <x, alpha^vee> for alpha = roots[idx]
  int root_index(const QVec& v) const;             // -1 if not a root
  int reflect_root(int a, int b) const;            // index of r_{roots[b]}(roots[a])
  int n_positive() const;

  // alpha_0 finite part: -theta (reduced) or -theta/2 (nonreduced); always a root index.
  int alpha0_finite() const;
};

RootSystem build_root_system(RootType type, int rank);
inline RootSystem build_root_system(const std::string& type, int rank) {
  return build_root_system(parse_root_type(type), rank);
}

// ---------------------------------------------------------------------------
// Affine roots: finite root + (shift2/2) delta. Shifts are stored doubled so
// the nonreduced half-integral band stays integral.
struct AffineRoot {
  int root;
  long long shift2;
  bool operator==(const AffineRoot& o) const { return root == o.root && shift2 == o.shift2; }
  bool operator<(const AffineRoot& o) const {
    return root != o.root ? root < o.root : shift2 < o.shift2;
  }
};

// Minimal positive shift2 step of the delta-band through roots[idx].
long long band_step2(const RootSystem& rs, int idx);
// Is root+(shift2/2)delta an affine root?
bool in_affine(const RootSystem& rs, int idx, long long shift2);
bool affine_positive(const RootSystem& rs, const AffineRoot& a);
// a/2 is again an affine root (long bands of BC); such roots share their wall.
bool affine_divisible(const RootSystem& rs, const AffineRoot& a);
AffineRoot affine_alpha0(const RootSystem& rs);
AffineRoot affine_simple(const RootSystem& rs, int node);  // node in 0..n

// All affine roots with |shift| <= bound.
std::vector<AffineRoot> build_affine_roots(const RootSystem& rs, const Rational& bound);

// Vectors in h* + R delta + R Lambda_0; (delta,Lambda_0)=1, both isotropic.
struct ExtVec {
  QVec fin;
  Rational del = 0, lam0 = 0;
};
Rational inner(const RootSystem& rs, const ExtVec& x, const ExtVec& y);
ExtVec affine_to_ext(const RootSystem& rs, const AffineRoot& a);

// ---------------------------------------------------------------------------
// Level-zero W-orbits on the affine roots (BFS closure with delta-periodicity)
// plus the parameter binding of the orbit classes.
//
// The raw orbit partition is recorded as computed. Parameters are bound per
// root length for reduced types (the A~1-family splits raw orbits by shift
// parity; the single per-length parameter is what the operator formulas use)
// and per raw orbit for nonreduced types (the five classes t01,t02,t03,tn,t1).
struct ParamInfo {
  std::string name;
  enum class Kind { T01, T02, T03, TN, TMID, RCLASS } kind;
  int rep_node = -1;  // a finite simple node of this class (RCLASS/TN/TMID)
};

struct OrbitTable {
  const RootSystem* rs = nullptr;
  std::vector<long long> period2;  // per root index: delta-period of its fiber (doubled)
  std::map<std::pair<int, long long>, int> orbit_key;  // (root, shift2 mod period2) -> orbit id
  int num_orbits = 0;
  std::vector<AffineRoot> orbit_rep;

  std::vector<ParamInfo> params;
  std::vector<int> orbit_param;  // orbit id -> param id
  int p_t01 = -1, p_t02 = -1, p_t03 = -1;  // alias targets
  std::vector<int> node_param;  // quadratic parameter of node i (0..n); node_param[0]==p_t03

  int orbit_id(const AffineRoot& a) const;
  int param_of_orbit(int orbit) const { return orbit_param[orbit]; }
  int nparams() const { return (int)params.size(); }
};

OrbitTable orbit_table(const RootSystem& rs);

// ---------------------------------------------------------------------------
// Lattices Q <= Lambda <= P. Lattice elements are integer vectors in the basis;
// this is the canonical weight key everywhere downstream.
struct Lattice {
  enum class Kind { P, Q, Custom } kind = Kind::P;
  const RootSystem* rs = nullptr;
  std::vector<QVec> basis;  // realization coords of b_1..b_n
  std::vector<std::vector<long long>> basis_fund;  // rows: basis vectors in fundamental-weight coords

  std::vector<IVec> simple_coords;  // alpha_i in Lambda coords
  IVec theta_coords, mu0_coords;    // theta, mu0 = c0^{-1} theta
  std::vector<std::vector<long long>> pair_row;  // pair_row[i][j] = <b_j, alpha_{i+1}^vee>
  std::vector<long long> theta_pair_row;         // <b_j, theta^vee>
  std::vector<std::vector<Rational>> gram;       // (b_j, b_k)
  std::vector<std::vector<Rational>> coweight_row;  // coweight_row[i][j] = (b_j, lambda_{i+1}^vee)

  std::string name() const;
  QVec realize(const QVec& coords) const;
  QVec realize(const IVec& coords) const { return realize(to_qvec(coords)); }
  // Solve for integer coordinates of a realization vector; nullopt if not in Lambda.
  std::optional<IVec> coords_of(const QVec& realization) const;

  long long pair(const IVec& c, int i) const;     // <x, alpha_{i+1}^vee>
  Rational pair_q(const QVec& c, int i) const;
  long long pair_theta(const IVec& c) const;
  Rational pair_theta_q(const QVec& c) const;
  Rational inner_coords(const QVec& a, const QVec& b) const;  // via gram
  Rational coweight_pair(const IVec& c, int i) const;  // (x, lambda_{i+1}^vee)
};

Lattice make_lattice(const RootSystem& rs, const std::string& selector);
Lattice make_lattice_P(const RootSystem& rs);
Lattice make_lattice_Q(const RootSystem& rs);
Lattice make_lattice_custom(const RootSystem& rs,
                            const std::vector<std::vector<long long>>& rows_in_fund_coords);

// Exact rational linear solve A x = b (A square nonsingular) and related helpers.
namespace linalg {
std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b);
// Least-structure solve of S c = v where S has full column rank (columns are
// independent vectors in a bigger ambient space); throws if inconsistent.
std::vector<Rational> solve_in_span(const std::vector<QVec>& cols, const QVec& v);
}  // namespace linalg

}  // namespace macsat
