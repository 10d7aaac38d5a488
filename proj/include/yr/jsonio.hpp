#pragma once

#include <json.hpp>

#include "yr/classify.hpp"
#include "yr/repmod.hpp"
#include "yr/series.hpp"

namespace yr {

using nlohmann::json;

// Rational <-> "p" / "p/q".
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// Polynomial <-> ascending coefficient array.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// RationalFunction <-> {num, den}.
json to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const json& j);

// NCMonomial as [[i,j,r],...]; NCPolynomial as [{coeff, monomial}...] sorted
// by monomial.
json word_to_json(const Word& w);
json to_json(const NCPolynomial& p);

// TruncatedSeries as {order, coeffs}; MatrixSeries as row-major nested
// arrays.
json to_json(const TruncatedSeries& s);
json to_json(const MatrixSeries& m);

struct WeightsFile {
  int n = 0;
  int l = 0;
  std::vector<RationalFunction> mu;
};
WeightsFile weights_from_json(const json& j);
json to_json(const WeightsFile& w);

json to_json(const DrinfeldData& d);

}  // namespace yr
