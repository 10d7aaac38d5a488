#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yr/rational.hpp"

namespace yr {

// Generator mode t_ij^{(r)} packed as (r,i,j), 1 <= i,j <= 255, r >= 1.
// Numeric order on the packed key is the PBW total order: lexicographic by
// (r, i, j), low modes first.
using GenKey = std::uint32_t;

constexpr GenKey gen_key(int i, int j, int r) {
  return (static_cast<GenKey>(r) << 16) | (static_cast<GenKey>(i) << 8) |
         static_cast<GenKey>(j);
}
constexpr int gen_i(GenKey g) { return static_cast<int>((g >> 8) & 0xff); }
constexpr int gen_j(GenKey g) { return static_cast<int>(g & 0xff); }
constexpr int gen_r(GenKey g) { return static_cast<int>(g >> 16); }

// A PBW word: generator modes, non-decreasing when in normal form.
using Word = std::vector<GenKey>;

inline int word_degree(const Word& w) {
  int d = 0;
  for (GenKey g : w) d += gen_r(g);
  return d;
}

std::string word_str(const Word& w);

using RawTerms = std::vector<std::pair<Word, Rational>>;

// The commutator [t_ij^{(r)}, t_kl^{(s)}] as written terms (not necessarily
// ordered): sum over a = 1..min(r,s) of
//   t_kj^{(a-1)} t_il^{(r+s-a)} - t_kj^{(r+s-a)} t_il^{(a-1)},
// with t^{(0)} read as a Kronecker delta. Every term has degree r+s-1.
const RawTerms& mode_bracket_terms(GenKey a, GenKey b);

// Linear combination of PBW-normal words with nonzero coefficients.
class NCPolynomial {
public:
  NCPolynomial() = default;
  explicit NCPolynomial(const Rational& c) {
    if (!c.is_zero()) t_.emplace(Word{}, c);
  }
  static NCPolynomial generator(int i, int j, int r) {
    NCPolynomial p;
    p.t_.emplace(Word{gen_key(i, j, r)}, Rational(1));
    return p;
  }
  static NCPolynomial from_normal_terms(std::map<Word, Rational> t) {
    NCPolynomial p;
    p.t_ = std::move(t);
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
  }
  Rational scalar_part() const {
    auto it = t_.find(Word{});
    return it == t_.end() ? Rational(0) : it->second;
  }
  size_t term_count() const { return t_.size(); }
  const std::map<Word, Rational>& terms() const { return t_; }

  // Max word degree; precondition: nonzero.
  int filtration_degree() const;
  NCPolynomial top_degree_part() const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& add_scaled(const NCPolynomial& o, const Rational& s);
  NCPolynomial& scale(const Rational& s);

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(const NCPolynomial& a) {
    NCPolynomial r = a;
    return r.scale(Rational(-1));
  }
  friend NCPolynomial operator*(const Rational& s, NCPolynomial a) { return a.scale(s); }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    return nc_mul(a, b);
  }

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) { return !(a == b); }

  friend NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b);

  std::string str() const;

private:
  std::map<Word, Rational> t_;
};

// Straighten an arbitrary linear combination of words into PBW normal form.
// Out-of-order adjacent pairs are swapped, inserting mode_bracket corrections;
// corrections drop filtration degree by one, swaps reduce word inversions, so
// the rewriting terminates.
NCPolynomial pbw_normalize(RawTerms raw);

inline NCPolynomial mode_bracket(GenKey a, GenKey b) {
  return pbw_normalize(mode_bracket_terms(a, b));
}

NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b);

}  // namespace yr
