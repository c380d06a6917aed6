#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gwb/config/presentation.hpp"
#include "gwb/ede/series.hpp"
#include "gwb/geometry/gsubvariety.hpp"
#include "gwb/numeric/bigfloat.hpp"
#include "gwb/witness/witness.hpp"

namespace gwb::io {

using json = nlohmann::json;
using algebra::GaussRat;
using algebra::IntMat;
using algebra::Polynomial;
using algebra::Rat;
using algebra::RatRow;

/// Violations collected while walking a document; each is "<json path>: <message>".
class Diagnostics {
 public:
  void add(const std::string& path, const std::string& message) { list_.push_back(path + ": " + message); }
  bool ok() const { return list_.empty(); }
  const std::vector<std::string>& violations() const { return list_; }
  /// Throws ParseError listing every violation.
  void raise_if_any(const std::string& what) const;

 private:
  std::vector<std::string> list_;
};

/// Reads and parses a JSON file; syntax errors become ParseError with line and
/// column.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text, const std::string& origin);
std::string read_file(const std::string& path);
/// Canonical text: two-space indentation, sorted keys, trailing newline.
std::string canonical_dump(const json& j);
std::string sha256_hex(const std::string& bytes);

json to_json(const Rat& q);
json to_json(const GaussRat& g);
json to_json(const IntMat& m);
json to_json(const Polynomial& p, const std::vector<std::string>& names);
json to_json(const config::HSpec& h);
json to_json(const ede::Series& s);

Rat rat_from_json(const json& j, Diagnostics& d, const std::string& path);
GaussRat gaussrat_from_json(const json& j, Diagnostics& d, const std::string& path);
IntMat intmat_from_json(const json& j, Diagnostics& d, const std::string& path);
/// Object form {"vars", "terms"} or infix text over `names`.
Polynomial polynomial_from_json(const json& j, const std::vector<std::string>& names, Diagnostics& d,
                                const std::string& path);
config::HSpec hspec_from_json(const json& j, Diagnostics& d, const std::string& path);
ede::Series series_from_json(const json& j, Diagnostics& d, const std::string& path);

/// Decimal-string complex numbers ["re", "im"] (a lone string is real).
numeric::BigComplex complex_from_json(const json& j, Diagnostics& d, const std::string& path);
json complex_to_json(const numeric::BigComplex& z, int digits);
/// Doubles round-trip exactly through 17 significant digits.
json complex_to_json(const numeric::cd& z);
numeric::cd cd_from_json(const json& j, Diagnostics& d, const std::string& path);

struct VarietyDoc {
  std::size_t n = 0;
  std::vector<Polynomial> ideal;
  bool irreducible = true;

  geometry::GSubvariety build() const;
  static VarietyDoc of(const geometry::GSubvariety& v);
};
json to_json(const VarietyDoc& v);
VarietyDoc variety_from_json(const json& j, Diagnostics& d);

json to_json(const config::GammaPresentation& p);
/// Declarations are lists of [generator index, [num, den]] pairs; a single
/// pair is accepted too.
RatRow gamma_point_from_json(const json& j, std::size_t k, Diagnostics& d, const std::string& path);
json gamma_point_to_json(const RatRow& row);
/// Document checks only; building the presentation may still fail.
struct PresentationDoc {
  std::vector<std::string> labels;
  std::vector<bool> constant;
  std::vector<Polynomial> relations;
  std::vector<RatRow> gamma;
  config::HSpec blur;
  long denominator_bound = 1;

  config::GammaPresentation build() const;
};
PresentationDoc presentation_from_json(const json& j, Diagnostics& d);

json to_json(const witness::WitnessReport& r);
witness::WitnessReport witness_report_from_json(const json& j, Diagnostics& d);

/// Kind of a document guessed from its keys: "variety", "presentation",
/// "series", "diffpoint", "ede-points", "numbers", "witness", "report" or "".
std::string detect_kind(const json& j);
/// Schema violations of a document of the given kind.
std::vector<std::string> validate(const json& j, const std::string& kind);

}  // namespace gwb::io
