#include "yr/nc.hpp"

#include <sstream>
#include <unordered_map>

namespace yr {

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << "*";
    os << "t[" << gen_i(w[k]) << "," << gen_j(w[k]) << "," << gen_r(w[k]) << "]";
  }
  return os.str();
}

const RawTerms& mode_bracket_terms(GenKey a, GenKey b) {
  // Per-thread cache keeps the engine safe for concurrent use.
  thread_local std::unordered_map<std::uint64_t, RawTerms> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int i = gen_i(a), j = gen_j(a), r = gen_r(a);
  const int k = gen_i(b), l = gen_j(b), s = gen_r(b);
  RawTerms out;
  const int m = std::min(r, s);
  for (int t = 1; t <= m; ++t) {
    // + t_kj^{(t-1)} t_il^{(r+s-t)}
    if (t == 1) {
      if (k == j) out.emplace_back(Word{gen_key(i, l, r + s - 1)}, Rational(1));
    } else {
      out.emplace_back(Word{gen_key(k, j, t - 1), gen_key(i, l, r + s - t)}, Rational(1));
    }
    // - t_kj^{(r+s-t)} t_il^{(t-1)}
    if (t == 1) {
      if (i == l) out.emplace_back(Word{gen_key(k, j, r + s - 1)}, Rational(-1));
    } else {
      out.emplace_back(Word{gen_key(k, j, r + s - t), gen_key(i, l, t - 1)}, Rational(-1));
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int NCPolynomial::filtration_degree() const {
  if (is_zero()) throw std::domain_error("filtration_degree of zero");
  int d = 0;
  for (const auto& [w, c] : t_) d = std::max(d, word_degree(w));
  return d;
}

NCPolynomial NCPolynomial::top_degree_part() const {
  const int d = filtration_degree();
  std::map<Word, Rational> top;
  for (const auto& [w, c] : t_)
    if (word_degree(w) == d) top.emplace(w, c);
  return from_normal_terms(std::move(top));
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) { return add_scaled(o, Rational(1)); }

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) { return add_scaled(o, Rational(-1)); }

NCPolynomial& NCPolynomial::add_scaled(const NCPolynomial& o, const Rational& s) {
  if (s.is_zero()) return *this;
  for (const auto& [w, c] : o.t_) {
    auto [it, inserted] = t_.try_emplace(w, Rational(0));
    it->second += s * c;
    if (it->second.is_zero()) t_.erase(it);
  }
  return *this;
}

NCPolynomial& NCPolynomial::scale(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

std::string NCPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (!w.empty()) os << "*" << word_str(w);
  }
  return os.str();
}

namespace {

// Worklists bucketed by filtration degree, highest degree first. Bracket
// corrections land one bucket down, so each bucket is touched once.
using Bucket = std::map<Word, Rational>;

inline void bucket_add(Bucket& b, Word&& w, const Rational& c) {
  auto [it, inserted] = b.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) b.erase(it);
  }
}

}  // namespace

NCPolynomial pbw_normalize(RawTerms raw) {
  std::map<int, Bucket> buckets;
  for (auto& [w, c] : raw) {
    if (c.is_zero()) continue;
    bucket_add(buckets[word_degree(w)], std::move(w), c);
  }

  Bucket done;
  while (!buckets.empty()) {
    auto bit = std::prev(buckets.end());
    const int deg = bit->first;
    Bucket& cur = bit->second;
    while (!cur.empty()) {
      auto node = cur.extract(cur.begin());
      const Word& w = node.key();
      const Rational& c = node.mapped();

      size_t p = 0;
      bool sorted = true;
      for (; p + 1 < w.size(); ++p)
        if (w[p] > w[p + 1]) {
          sorted = false;
          break;
        }
      if (sorted) {
        bucket_add(done, std::move(node.key()), c);
        continue;
      }

      for (const auto& [bw, bc] : mode_bracket_terms(w[p], w[p + 1])) {
        Word nw;
        nw.reserve(w.size() - 2 + bw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + p);
        nw.insert(nw.end(), bw.begin(), bw.end());
        nw.insert(nw.end(), w.begin() + p + 2, w.end());
        bucket_add(buckets[deg - 1], std::move(nw), c * bc);
      }
      Word sw = std::move(node.key());
      std::swap(sw[p], sw[p + 1]);
      bucket_add(cur, std::move(sw), c);
    }
    buckets.erase(bit);
  }
  return NCPolynomial::from_normal_terms(std::move(done));
}

NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return NCPolynomial();
  if (a.is_scalar()) {
    NCPolynomial r = b;
    return r.scale(a.scalar_part());
  }
  if (b.is_scalar()) {
    NCPolynomial r = a;
    return r.scale(b.scalar_part());
  }
  RawTerms raw;
  raw.reserve(a.t_.size() * b.t_.size());
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      raw.emplace_back(std::move(w), ca * cb);
    }
  return pbw_normalize(std::move(raw));
}

NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r = nc_mul(a, b);
  r -= nc_mul(b, a);
  return r;
}

}  // namespace yr
