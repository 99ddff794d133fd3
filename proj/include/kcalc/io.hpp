#pragma once

#include <string>

#include "json.hpp"
#include "kcalc/charclass.hpp"
#include "kcalc/clutching.hpp"
#include "kcalc/error.hpp"
#include "kcalc/exact.hpp"
#include "kcalc/grothendieck.hpp"
#include "kcalc/ktables.hpp"
#include "kcalc/symfun.hpp"
#include "kcalc/toeplitz.hpp"
#include "kcalc/whitehead.hpp"

// JSON forms of every input and result type. Exact numbers travel as
// decimal strings ("3", "-7/4"); complex numbers as {re, im} or [re, im].
// Malformed input raises DomainError("invalid_json").

namespace kcalc {

using nlohmann::json;

json load_json_file(const std::string& path);

std::string rational_to_string(const Rational& x);
Rational rational_from_json(const json& j);

// nlohmann's ADL hooks.
void to_json(json& j, const Ring& r);
// Ring has no default state, so it is read explicitly.
Ring ring_from_json(const json& j);
void to_json(json& j, const Matrix& m);
void from_json(const json& j, Matrix& m);
void to_json(json& j, const AbelianGroup& g);
void from_json(const json& j, AbelianGroup& g);
void to_json(json& j, const MonoidPresentation& m);
void from_json(const json& j, MonoidPresentation& m);
void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);
void to_json(json& j, const SymPoly& p);
void from_json(const json& j, SymPoly& p);
void to_json(json& j, const VirtualSplitBundle& v);
void from_json(const json& j, VirtualSplitBundle& v);
void to_json(json& j, const GradedClass& c);
void from_json(const json& j, GradedClass& c);
void to_json(json& j, const LaurentSymbol& f);
void from_json(const json& j, LaurentSymbol& f);
void to_json(json& j, const MatrixSymbol& f);
void from_json(const json& j, MatrixSymbol& f);
void to_json(json& j, const CocycleData& d);
void from_json(const json& j, CocycleData& d);

void to_json(json& j, const ArgumentPrincipleResult& r);
void from_json(const json& j, ArgumentPrincipleResult& r);
void to_json(json& j, const IndexResult& r);
void from_json(const json& j, IndexResult& r);
void to_json(json& j, const StructuredIndexResult& r);
void from_json(const json& j, StructuredIndexResult& r);
void to_json(json& j, const CocycleReport& r);
void from_json(const json& j, CocycleReport& r);
void to_json(json& j, const ClutchingClass& c);
void from_json(const json& j, ClutchingClass& c);
void to_json(json& j, const HopfReport& r);
void from_json(const json& j, HopfReport& r);
void to_json(json& j, const Transvection& t);
void from_json(const json& j, Transvection& t);
void to_json(json& j, const FactorizationResult& r);
void from_json(const json& j, FactorizationResult& r);
void to_json(json& j, const SteinbergReport& r);
void from_json(const json& j, SteinbergReport& r);
void to_json(json& j, const K1Result& r);
void from_json(const json& j, K1Result& r);

// Parses either a scalar symbol {"coeffs": ...} (as a 1 x 1 grid) or a
// matrix symbol {"matrix": [[symbol, ...], ...]}.
MatrixSymbol any_symbol_from_json(const json& j);

// Reads a T from JSON, converting parse failures into DomainError.
template <class T>
T parse_as(const json& j) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw DomainError("invalid_json", e.what());
  }
}

}  // namespace kcalc
