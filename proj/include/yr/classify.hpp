#pragma once

#include <optional>
#include <string>

#include "yr/ratfunc.hpp"
#include "yr/reflection.hpp"

namespace yr {

// mu-tilde_i(u) = (2u-n+i) mu_i(u) + mu_{i+1}(u) + ... + mu_n(u), with the
// i = n reading mu-tilde_n = 2u mu_n.
std::vector<RationalFunction> mu_tilde(const std::vector<RationalFunction>& mu,
                                       const Signature& sig);

struct VermaReport {
  bool ok = false;
  int bad_index = 0;          // 1-based index of the first violated condition
  std::string condition;      // "unitarity" (index n) or "interlacing" (index i < n)
};

// Existence of the Verma module: mu_n(u) mu_n(-u) = 1 and the mu-tilde
// interlacing conditions, as exact rational-function identities.
VermaReport verma_exists(const std::vector<RationalFunction>& mu, const Signature& sig);

// The unique monic P with P(u+1)/P(u) = r and deg P <= max_deg, if any.
std::optional<Polynomial> drinfeld_solve(const RationalFunction& r, int max_deg);

struct DrinfeldData {
  std::vector<Polynomial> polys;  // P_1..P_{n-1}, monic
  std::optional<Rational> gamma;  // present iff l > 0
};

enum class ClassifyStatus {
  FiniteDimensional,
  VermaViolation,
  NotFiniteDimensional,
  UndecidedAtBound,
};

struct ClassifyResult {
  ClassifyStatus status = ClassifyStatus::NotFiniteDimensional;
  DrinfeldData data;
  VermaReport verma;
  int failed_index = 0;  // 1-based ratio index on failure
  std::string detail;
};

ClassifyResult classify_finite_dim(const std::vector<RationalFunction>& mu,
                                   const Signature& sig, int max_deg);

// P(u) = (-1)^{deg Q} Q(u) Q(-u+n-i+1), exactly.
bool symmetric_factor_check(const Polynomial& p, const Polynomial& q, int i, int n);

// The symmetry P(-u+n-i+1) = P(u) required of every Drinfeld polynomial.
bool drinfeld_symmetry_holds(const Polynomial& p, int i, int n);

}  // namespace yr
