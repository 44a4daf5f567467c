// Exact coefficient arithmetic: Laurent polynomials in formal half-powers of
// named parameters, and the sparse group algebra of Lambda over them.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "macsat/rootdata.hpp"

namespace macsat {

struct IncompatibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shared descriptor of a parameter namespace. Generic contexts use the orbit
// parameters of a root system; the specialized side uses the single name "t".
struct ParamSpace {
  std::vector<std::string> names;
  int index_of(const std::string& n) const;
};
using ParamSpacePtr = std::shared_ptr<const ParamSpace>;

ParamSpacePtr tau_space();  // the one-parameter specialized namespace

// Sparse Laurent polynomial; exponent vectors count HALF-powers per name
// (exponent k encodes t^(k/2)). No zero coefficients are stored.
class ParamScalar {
 public:
  using Exp = std::vector<int>;

  ParamScalar() = default;
  explicit ParamScalar(ParamSpacePtr space) : space_(std::move(space)) {}

  static ParamScalar zero(ParamSpacePtr space) { return ParamScalar(std::move(space)); }
  static ParamScalar constant(ParamSpacePtr space, const Rational& c);
  static ParamScalar monomial(ParamSpacePtr space, const Exp& halfexp, const Rational& c = 1);
  // t_name^(halfexp/2)
  static ParamScalar halfpow(ParamSpacePtr space, int name, int halfexp);

  const ParamSpacePtr& space() const { return space_; }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool operator==(const ParamScalar& o) const;

  ParamScalar operator+(const ParamScalar& o) const;
  ParamScalar operator-(const ParamScalar& o) const;
  ParamScalar operator*(const ParamScalar& o) const;
  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar scaled(const Rational& c) const;
  ParamScalar inverse() const;  // monomials only; throws otherwise

  // substitute t_name^(1/2) -> t'_{image_name}^(image_halfexp[name]/2) into a
  // target namespace (used for specialization and the s-collapse)
  ParamScalar substitute(ParamSpacePtr target, const std::vector<int>& image_name,
                         const std::vector<int>& image_halfexp) const;
  Rational eval_all_one() const;  // every parameter -> 1
  // degree bookkeeping for the t->infinity limit: total half-degree of each term
  int max_total_halfdeg() const;
  ParamScalar total_halfdeg_part(int d) const;
  bool mentions(int name) const;

  std::string str() const;

  void add_term(const Exp& e, const Rational& c);  // in-place accumulate

 private:
  ParamSpacePtr space_;
  std::map<Exp, Rational> terms_;
};

// Sparse element of the group algebra R_{t,Lambda}: weight key (integer
// Lambda coordinates) -> ParamScalar coefficient.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  GroupAlgebraElement(const Lattice* lat, ParamSpacePtr space)
      : lat_(lat), space_(std::move(space)) {}

  static GroupAlgebraElement zero(const Lattice* lat, ParamSpacePtr space);
  static GroupAlgebraElement basis(const Lattice* lat, ParamSpacePtr space, const IVec& lambda);

  const Lattice* lattice() const { return lat_; }
  const ParamSpacePtr& space() const { return space_; }
  const std::map<IVec, ParamScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GroupAlgebraElement& o) const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  GroupAlgebraElement scaled(const ParamScalar& c) const;
  GroupAlgebraElement scaled(const Rational& c) const;
  GroupAlgebraElement shifted(const IVec& mu) const;  // multiplication by e^mu

  ParamScalar coeff(const IVec& lambda) const;
  void add_term(const IVec& lambda, const ParamScalar& c);

  std::string str() const;

 private:
  const Lattice* lat_ = nullptr;
  ParamSpacePtr space_;
  std::map<IVec, ParamScalar> terms_;
  void check_compatible(const GroupAlgebraElement& o) const;
};

// Exact division of f by (1 - e^{-order*alpha_i}), by long division along the
// alpha-strings of each coset. Inexact division reports the offending coset;
// that always signals a convention bug upstream, never user data.
GroupAlgebraElement string_quotient(const GroupAlgebraElement& f, int i, int order);
// Same, dividing by (1 - e^{-step}) for an explicit lattice step with pairing
// functional h (used by the affine Demazure oracle).
GroupAlgebraElement string_quotient_step(const GroupAlgebraElement& f, const IVec& step,
                                         const std::vector<long long>& pair_row);

}  // namespace macsat
