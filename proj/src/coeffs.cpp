#include "macsat/coeffs.hpp"

#include <algorithm>
#include <sstream>

namespace macsat {

int ParamSpace::index_of(const std::string& n) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return (int)i;
  return -1;
}

ParamSpacePtr tau_space() {
  static ParamSpacePtr s = std::make_shared<ParamSpace>(ParamSpace{{"t"}});
  return s;
}

ParamScalar ParamScalar::constant(ParamSpacePtr space, const Rational& c) {
  ParamScalar p(std::move(space));
  if (c != 0) p.terms_[Exp(p.space_->names.size(), 0)] = c;
  return p;
}

ParamScalar ParamScalar::monomial(ParamSpacePtr space, const Exp& halfexp, const Rational& c) {
  ParamScalar p(std::move(space));
  if (c != 0) p.terms_[halfexp] = c;
  return p;
}

ParamScalar ParamScalar::halfpow(ParamSpacePtr space, int name, int halfexp) {
  Exp e(space->names.size(), 0);
  e[name] = halfexp;
  return monomial(std::move(space), e);
}

bool ParamScalar::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool ParamScalar::operator==(const ParamScalar& o) const { return terms_ == o.terms_; }

void ParamScalar::add_term(const Exp& e, const Rational& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
  ParamScalar r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
  ParamScalar r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r(space_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
  ParamScalar r(space_ ? space_ : o.space_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exp e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

ParamScalar ParamScalar::scaled(const Rational& c) const {
  ParamScalar r(space_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
  return r;
}

ParamScalar ParamScalar::inverse() const {
  if (terms_.size() != 1) throw DivisibilityError("inverse of a non-monomial parameter scalar");
  const auto& [e, c] = *terms_.begin();
  Exp ie(e.size());
  for (size_t i = 0; i < e.size(); ++i) ie[i] = -e[i];
  return monomial(space_, ie, Rational(1) / c);
}

ParamScalar ParamScalar::substitute(ParamSpacePtr target, const std::vector<int>& image_name,
                                    const std::vector<int>& image_halfexp) const {
  ParamScalar r(target);
  for (const auto& [e, c] : terms_) {
    Exp img(target->names.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      img[image_name[i]] += e[i] * image_halfexp[i];
    }
    r.add_term(img, c);
  }
  return r;
}

Rational ParamScalar::eval_all_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int ParamScalar::max_total_halfdeg() const {
  int best = INT32_MIN;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

ParamScalar ParamScalar::total_halfdeg_part(int d) const {
  ParamScalar r(space_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.terms_[e] = c;
  }
  return r;
}

bool ParamScalar::mentions(int name) const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e[name] != 0) return true;
  }
  return false;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << space_->names[i];
      if (e[i] != 2) {
        os << "^";
        if (e[i] % 2 == 0)
          os << e[i] / 2;
        else
          os << "(" << e[i] << "/2)";
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

GroupAlgebraElement GroupAlgebraElement::zero(const Lattice* lat, ParamSpacePtr space) {
  return GroupAlgebraElement(lat, std::move(space));
}

GroupAlgebraElement GroupAlgebraElement::basis(const Lattice* lat, ParamSpacePtr space,
                                               const IVec& lambda) {
  GroupAlgebraElement f(lat, space);
  f.terms_[lambda] = ParamScalar::constant(std::move(space), 1);
  return f;
}

void GroupAlgebraElement::check_compatible(const GroupAlgebraElement& o) const {
  if (lat_ != o.lat_ || space_.get() != o.space_.get())
    throw IncompatibilityError("group algebra elements over different contexts");
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return terms_ == o.terms_;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  check_compatible(o);
  GroupAlgebraElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  check_compatible(o);
  GroupAlgebraElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  check_compatible(o);
  GroupAlgebraElement r(lat_, space_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      IVec w = w1;
      for (size_t i = 0; i < w.size(); ++i) w[i] += w2[i];
      r.add_term(w, c1 * c2);
    }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const ParamScalar& c) const {
  GroupAlgebraElement r(lat_, space_);
  if (c.is_zero()) return r;
  for (const auto& [w, coef] : terms_) {
    ParamScalar p = coef * c;
    if (!p.is_zero()) r.terms_[w] = std::move(p);
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& c) const {
  GroupAlgebraElement r(lat_, space_);
  if (c == 0) return r;
  for (const auto& [w, coef] : terms_) r.terms_[w] = coef.scaled(c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::shifted(const IVec& mu) const {
  GroupAlgebraElement r(lat_, space_);
  for (const auto& [w, coef] : terms_) {
    IVec v = w;
    for (size_t i = 0; i < v.size(); ++i) v[i] += mu[i];
    r.terms_[v] = coef;
  }
  return r;
}

ParamScalar GroupAlgebraElement::coeff(const IVec& lambda) const {
  auto it = terms_.find(lambda);
  if (it != terms_.end()) return it->second;
  return ParamScalar::zero(space_);
}

void GroupAlgebraElement::add_term(const IVec& lambda, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_[lambda] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.str() << ")*e[";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

GroupAlgebraElement string_quotient_step(const GroupAlgebraElement& f, const IVec& step,
                                         const std::vector<long long>& pair_row) {
  // divide by (1 - e^{-step}); h increases by h(step) along the string
  long long dh = 0;
  for (size_t j = 0; j < step.size(); ++j) dh += pair_row[j] * step[j];
  if (dh <= 0) throw DivisibilityError("string step with nonpositive height");

  auto height = [&](const IVec& w) {
    long long h = 0;
    for (size_t j = 0; j < w.size(); ++j) h += pair_row[j] * w[j];
    return h;
  };

  // group keys into cosets of Z*step
  std::map<IVec, std::map<long long, ParamScalar>> cosets;
  for (const auto& [w, c] : f.terms()) {
    long long h = height(w);
    long long q = h >= 0 ? h / dh : -((-h + dh - 1) / dh);  // floor division
    IVec rep = w;
    for (size_t j = 0; j < rep.size(); ++j) rep[j] -= q * step[j];
    cosets[rep][h] = c;
  }

  // g[w] = f[w] + g[w + step], swept from the top of each coset; the division
  // is exact iff the carry vanishes after the lowest key
  GroupAlgebraElement g(f.lattice(), f.space());
  for (auto& [rep, fiber] : cosets) {
    ParamScalar carry = ParamScalar::zero(f.space());
    long long h = fiber.rbegin()->first;
    long long hmin = fiber.begin()->first;
    long long q0 = height(rep);
    for (; h >= hmin; h -= dh) {
      auto found = fiber.find(h);
      if (found != fiber.end()) carry += found->second;
      if (carry.is_zero()) continue;
      if (h == hmin) {
        std::ostringstream os;
        os << "inexact string division: nonzero remainder " << carry.str()
           << " on the coset at height " << h;
        throw DivisibilityError(os.str());
      }
      IVec w = rep;
      long long steps = (h - q0) / dh;
      for (size_t j = 0; j < w.size(); ++j) w[j] += steps * step[j];
      g.add_term(w, carry);
    }
  }
  return g;
}

GroupAlgebraElement string_quotient(const GroupAlgebraElement& f, int i, int order) {
  const Lattice* lat = f.lattice();
  IVec step = lat->simple_coords[i - 1];
  for (auto& x : step) x *= order;
  return string_quotient_step(f, step, lat->pair_row[i - 1]);
}

}  // namespace macsat
