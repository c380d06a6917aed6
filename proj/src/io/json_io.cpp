#include "gwb/io/json_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "gwb/algebra/parse.hpp"
#include "gwb/error.hpp"

namespace gwb::io {

void Diagnostics::raise_if_any(const std::string& what) const {
  if (ok()) return;
  std::string msg = what;
  for (const auto& v : list_) msg += "\n  " + v;
  throw Error(ErrorCode::ParseError, msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError, origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                           ": malformed JSON");
  }
}

json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InvalidArgument, "SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

// Scalars ------------------------------------------------------------------

json to_json(const Rat& q) { return algebra::to_string(q); }

json to_json(const GaussRat& g) { return json::array({algebra::to_string(g.re()), algebra::to_string(g.im())}); }

json to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m(r, c);
      if (v.fits_slong_p()) row.push_back(v.get_si());
      else row.push_back(v.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

Rat rat_from_json(const json& j, Diagnostics& d, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return algebra::parse_rat(j.get<std::string>());
  } catch (const Error&) {
  }
  d.add(path, "exact rational required (integer or \"a/b\" string), got " + j.dump());
  return 0;
}

GaussRat gaussrat_from_json(const json& j, Diagnostics& d, const std::string& path) {
  if (j.is_array() && j.size() == 2) return {rat_from_json(j[0], d, path + "[0]"), rat_from_json(j[1], d, path + "[1]")};
  if (j.is_string() || j.is_number_integer()) return rat_from_json(j, d, path);
  d.add(path, "Gaussian rational must be [\"re\", \"im\"]");
  return 0;
}

namespace {

// Signed integers built in memory count too.
bool natural(const json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long>() >= 0); }

algebra::Integer integer_from_json(const json& j, Diagnostics& d, const std::string& path) {
  if (j.is_number_integer()) return algebra::Integer(j.get<long>());
  if (j.is_string()) {
    algebra::Integer z;
    const auto s = j.get<std::string>();
    if (!s.empty() && s.find_first_not_of("+-0123456789") == std::string::npos && z.set_str(s, 10) == 0) return z;
  }
  d.add(path, "integer required, got " + j.dump());
  return 0;
}

}  // namespace

IntMat intmat_from_json(const json& j, Diagnostics& d, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    d.add(path, "matrix must be a non-empty array of rows");
    return {};
  }
  std::vector<std::vector<algebra::Integer>> rows;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto p = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) {
      d.add(p, "row must be an array");
      continue;
    }
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) d.add(p, "ragged matrix");
    std::vector<algebra::Integer> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(integer_from_json(j[r][c], d, p + "[" + std::to_string(c) + "]"));
    row.resize(cols, 0);
    rows.push_back(std::move(row));
  }
  return IntMat::from_rows(rows, cols);
}

// Polynomials -------------------------------------------------------------

json to_json(const Polynomial& p, const std::vector<std::string>& names) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::object();
    for (std::size_t v = 0; v < t.monomial.nvars(); ++v)
      if (t.monomial[v] > 0) exps[names[v]] = t.monomial[v];
    terms.push_back({{"coef", to_json(t.coef)}, {"exps", exps}});
  }
  return {{"vars", names}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j, const std::vector<std::string>& names, Diagnostics& d,
                                const std::string& path) {
  const std::size_t nv = names.size();
  if (j.is_string()) {
    try {
      return algebra::parse_polynomial(j.get<std::string>(), names);
    } catch (const Error& e) {
      d.add(path, e.what());
      return Polynomial(nv);
    }
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    d.add(path, "polynomial must be infix text or {\"vars\", \"terms\"}");
    return Polynomial(nv);
  }
  std::vector<std::string> vars = names;
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) {
      d.add(path + ".vars", "must be an array of names");
    } else {
      vars.clear();
      for (const auto& v : j["vars"]) {
        if (!v.is_string()) {
          d.add(path + ".vars", "names must be strings");
          continue;
        }
        auto name = v.get<std::string>();
        if (std::find(names.begin(), names.end(), name) == names.end())
          d.add(path + ".vars", "unknown variable \"" + name + "\"");
        vars.push_back(name);
      }
    }
  }
  std::vector<algebra::Term> terms;
  const auto& ts = j["terms"];
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto p = path + ".terms[" + std::to_string(k) + "]";
    const auto& t = ts[k];
    if (!t.is_object() || !t.contains("coef")) {
      d.add(p, "term needs \"coef\"");
      continue;
    }
    GaussRat c = gaussrat_from_json(t["coef"], d, p + ".coef");
    std::vector<int> e(nv, 0);
    if (t.contains("exps")) {
      if (!t["exps"].is_object()) {
        d.add(p + ".exps", "must map variable names to exponents");
      } else {
        for (const auto& [name, val] : t["exps"].items()) {
          auto it = std::find(names.begin(), names.end(), name);
          if (std::find(vars.begin(), vars.end(), name) == vars.end() || it == names.end()) {
            d.add(p + ".exps", "variable \"" + name + "\" not declared");
            continue;
          }
          if (!val.is_number_integer() || val.get<long>() < 0 || val.get<long>() > 100000) {
            d.add(p + ".exps." + name, "exponent must be a non-negative integer");
            continue;
          }
          e[static_cast<std::size_t>(it - names.begin())] += static_cast<int>(val.get<long>());
        }
      }
    }
    terms.push_back({algebra::Monomial(e), c});
  }
  return Polynomial::from_terms(nv, std::move(terms));
}

// Blur specs and series ------------------------------------------------------

json to_json(const config::HSpec& h) {
  json j = {{"kind", config::to_string(h.kind)}};
  if (h.kind == config::HSpec::Kind::LatticeExp) j["basis"] = h.basis;
  if (h.kind == config::HSpec::Kind::ConstantsField) j["tag"] = h.tag;
  return j;
}

config::HSpec hspec_from_json(const json& j, Diagnostics& d, const std::string& path) {
  config::HSpec h;
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    d.add(path, "blur spec needs a \"kind\"");
    return h;
  }
  auto kind = j["kind"].get<std::string>();
  if (kind == "Trivial") {
    h.kind = config::HSpec::Kind::Trivial;
  } else if (kind == "LatticeExp") {
    h.kind = config::HSpec::Kind::LatticeExp;
    if (!j.contains("basis") || !j["basis"].is_array()) {
      d.add(path + ".basis", "LatticeExp needs a basis of labels");
    } else {
      for (const auto& b : j["basis"]) {
        if (b.is_string()) h.basis.push_back(b.get<std::string>());
        else d.add(path + ".basis", "labels must be strings");
      }
    }
  } else if (kind == "ConstantsField") {
    h.kind = config::HSpec::Kind::ConstantsField;
    if (j.contains("tag") && j["tag"].is_string()) h.tag = j["tag"].get<std::string>();
    else d.add(path + ".tag", "ConstantsField needs a tag");
  } else {
    d.add(path + ".kind", "unknown kind \"" + kind + "\"");
  }
  return h;
}

json to_json(const ede::Series& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"N", s.order()}, {"coeffs", coeffs}};
}

ede::Series series_from_json(const json& j, Diagnostics& d, const std::string& path) {
  if (!j.is_object() || !j.contains("N") || !natural(j["N"]) || !j.contains("coeffs") ||
      !j["coeffs"].is_array()) {
    d.add(path, "series must be {\"N\": order, \"coeffs\": [...]}");
    return ede::Series(0);
  }
  const auto n = j["N"].get<std::size_t>();
  const auto& cs = j["coeffs"];
  if (cs.size() != n + 1) d.add(path + ".coeffs", "expected N + 1 = " + std::to_string(n + 1) + " coefficients");
  std::vector<GaussRat> coeffs(n + 1);
  for (std::size_t k = 0; k < std::min(cs.size(), n + 1); ++k)
    coeffs[k] = gaussrat_from_json(cs[k], d, path + ".coeffs[" + std::to_string(k) + "]");
  return ede::Series(std::move(coeffs));
}

// Complex numbers ------------------------------------------------------------

numeric::BigComplex complex_from_json(const json& j, Diagnostics& d, const std::string& path) {
  try {
    if (j.is_string()) return numeric::parse_complex(j.get<std::string>(), "0");
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
      return numeric::parse_complex(j[0].get<std::string>(), j[1].get<std::string>());
  } catch (const Error&) {
  }
  d.add(path, "complex number must be [\"re\", \"im\"] decimal strings");
  return {};
}

json complex_to_json(const numeric::BigComplex& z, int digits) {
  return json::array({numeric::format(z.re, digits), numeric::format(z.im, digits)});
}

namespace {

std::string double_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json complex_to_json(const numeric::cd& z) { return json::array({double_text(z.real()), double_text(z.imag())}); }

numeric::cd cd_from_json(const json& j, Diagnostics& d, const std::string& path) {
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
    try {
      std::size_t a = 0, b = 0;
      auto re = j[0].get<std::string>(), im = j[1].get<std::string>();
      double r = std::stod(re, &a), i = std::stod(im, &b);
      if (a == re.size() && b == im.size()) return {r, i};
    } catch (const std::exception&) {
    }
  }
  d.add(path, "complex number must be [\"re\", \"im\"] decimal strings");
  return {};
}

// Varieties -------------------------------------------------------------------

geometry::GSubvariety VarietyDoc::build() const { return geometry::GSubvariety(n, ideal, irreducible); }

VarietyDoc VarietyDoc::of(const geometry::GSubvariety& v) { return {v.n(), v.groebner(), v.irreducible()}; }

json to_json(const VarietyDoc& v) {
  auto names = geometry::GSubvariety::coordinate_names(v.n);
  json ideal = json::array();
  for (const auto& p : v.ideal) ideal.push_back(to_json(p, names));
  return {{"n", v.n}, {"ideal", ideal}, {"irreducible", v.irreducible}};
}

VarietyDoc variety_from_json(const json& j, Diagnostics& d) {
  VarietyDoc v;
  if (!j.is_object()) {
    d.add("$", "variety must be an object");
    return v;
  }
  if (!j.contains("n") || !natural(j["n"]) || j["n"].get<std::size_t>() == 0) {
    d.add("$.n", "n must be a positive integer");
    return v;
  }
  v.n = j["n"].get<std::size_t>();
  if (j.contains("irreducible")) {
    if (j["irreducible"].is_boolean()) v.irreducible = j["irreducible"].get<bool>();
    else d.add("$.irreducible", "must be a boolean");
  }
  if (!j.contains("ideal") || !j["ideal"].is_array()) {
    d.add("$.ideal", "ideal must be an array of polynomials");
    return v;
  }
  auto names = geometry::GSubvariety::coordinate_names(v.n);
  for (std::size_t k = 0; k < j["ideal"].size(); ++k)
    v.ideal.push_back(polynomial_from_json(j["ideal"][k], names, d, "$.ideal[" + std::to_string(k) + "]"));
  for (const auto& [key, val] : j.items())
    if (key != "n" && key != "ideal" && key != "irreducible") d.add("$." + key, "unknown field");
  return v;
}

// Presentations ---------------------------------------------------------------

json gamma_point_to_json(const RatRow& row) {
  json pairs = json::array();
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (sgn(row[k]) == 0) continue;
    json num = row[k].get_num().fits_slong_p() ? json(row[k].get_num().get_si()) : json(row[k].get_num().get_str());
    json den = row[k].get_den().fits_slong_p() ? json(row[k].get_den().get_si()) : json(row[k].get_den().get_str());
    pairs.push_back(json::array({k, json::array({num, den})}));
  }
  return pairs;
}

RatRow gamma_point_from_json(const json& j, std::size_t k, Diagnostics& d, const std::string& path) {
  RatRow row(k, Rat(0));
  auto is_pair = [](const json& p) { return p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_array(); };
  std::vector<json> pairs;
  if (is_pair(j)) pairs.push_back(j);
  else if (j.is_array()) pairs.assign(j.begin(), j.end());
  else d.add(path, "Gamma-point must be a list of [index, [num, den]] pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    const auto& pr = pairs[i];
    if (!is_pair(pr) || pr[1].size() != 2) {
      d.add(p, "expected [index, [num, den]]");
      continue;
    }
    if (!natural(pr[0]) || pr[0].get<std::size_t>() >= k) {
      d.add(p, "index does not name a generator");
      continue;
    }
    auto num = integer_from_json(pr[1][0], d, p + "[1][0]");
    auto den = integer_from_json(pr[1][1], d, p + "[1][1]");
    if (sgn(den) == 0) {
      d.add(p, "zero denominator");
      continue;
    }
    Rat q(num, den);
    q.canonicalize();
    row[pr[0].get<std::size_t>()] += q;
  }
  return row;
}

config::GammaPresentation PresentationDoc::build() const {
  return config::GammaPresentation(labels, constant, relations, gamma, blur, denominator_bound);
}

json to_json(const config::GammaPresentation& p) {
  json constants = json::array();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p.constant()[k]) constants.push_back(p.labels()[k]);
  auto names = p.coordinate_names();
  json rel = json::array();
  for (const auto& r : p.relations()) rel.push_back(to_json(r, names));
  json gamma = json::array();
  for (const auto& g : p.gamma()) gamma.push_back(gamma_point_to_json(g));
  return {{"generators", p.labels()}, {"constants", constants}, {"relations", rel},
          {"gamma", gamma},           {"blur", to_json(p.blur())}, {"denominator_bound", p.denominator_bound()}};
}

PresentationDoc presentation_from_json(const json& j, Diagnostics& d) {
  PresentationDoc p;
  if (!j.is_object()) {
    d.add("$", "presentation must be an object");
    return p;
  }
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    d.add("$.generators", "need a non-empty list of generator labels");
    return p;
  }
  for (const auto& g : j["generators"]) {
    if (g.is_string()) p.labels.push_back(g.get<std::string>());
    else d.add("$.generators", "labels must be strings");
  }
  const std::size_t k = p.labels.size();
  p.constant.assign(k, false);
  if (j.contains("constants")) {
    if (!j["constants"].is_array()) d.add("$.constants", "must be a list of generator labels");
    else
      for (const auto& c : j["constants"]) {
        auto it = c.is_string() ? std::find(p.labels.begin(), p.labels.end(), c.get<std::string>()) : p.labels.end();
        if (it == p.labels.end()) d.add("$.constants", "unknown generator " + c.dump());
        else p.constant[static_cast<std::size_t>(it - p.labels.begin())] = true;
      }
  }
  auto names = config::GammaPresentation::coordinate_names(p.labels);
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) d.add("$.relations", "must be a list of polynomials");
    else
      for (std::size_t i = 0; i < j["relations"].size(); ++i)
        p.relations.push_back(polynomial_from_json(j["relations"][i], names, d, "$.relations[" + std::to_string(i) + "]"));
  }
  if (j.contains("gamma")) {
    if (!j["gamma"].is_array()) d.add("$.gamma", "must be a list of declared Gamma-points");
    else
      for (std::size_t i = 0; i < j["gamma"].size(); ++i)
        p.gamma.push_back(gamma_point_from_json(j["gamma"][i], k, d, "$.gamma[" + std::to_string(i) + "]"));
  }
  if (j.contains("blur")) p.blur = hspec_from_json(j["blur"], d, "$.blur");
  if (j.contains("denominator_bound")) {
    if (j["denominator_bound"].is_number_integer() && j["denominator_bound"].get<long>() >= 1)
      p.denominator_bound = j["denominator_bound"].get<long>();
    else
      d.add("$.denominator_bound", "must be a positive integer");
  }
  static const std::set<std::string> known = {"generators", "constants", "relations", "gamma", "blur", "denominator_bound"};
  for (const auto& [key, val] : j.items())
    if (!known.count(key)) d.add("$." + key, "unknown field");
  return p;
}

// Witness reports ------------------------------------------------------------

json to_json(const witness::WitnessReport& r) {
  json xs = json::array(), ys = json::array(), hs = json::array(), log = json::array();
  for (auto z : r.point.x) xs.push_back(complex_to_json(z));
  for (auto z : r.point.y) ys.push_back(complex_to_json(z));
  for (const auto& [p, q] : r.h_exponents) hs.push_back(json::array({to_json(p), to_json(q)}));
  for (const auto& l : r.log) log.push_back(l);
  return {{"point", {{"x", xs}, {"y", ys}, {"digits", 17}}},
          {"h_exponents", hs},
          {"residual_variety", r.residual_variety},
          {"residual_gamma", r.residual_gamma},
          {"jacobian_condition", r.jacobian_condition},
          {"iterations", r.iterations},
          {"seed", r.seed},
          {"restart", r.restart},
          {"tol", r.tol},
          {"qmax", r.qmax},
          {"log", log}};
}

witness::WitnessReport witness_report_from_json(const json& j, Diagnostics& d) {
  witness::WitnessReport r;
  if (!j.is_object() || !j.contains("point") || !j.contains("h_exponents")) {
    d.add("$", "witness report needs \"point\" and \"h_exponents\"");
    return r;
  }
  const auto& pt = j["point"];
  for (const char* axis : {"x", "y"}) {
    if (!pt.contains(axis) || !pt[axis].is_array()) {
      d.add(std::string("$.point.") + axis, "must be a list of complex numbers");
      continue;
    }
    auto& dst = axis[0] == 'x' ? r.point.x : r.point.y;
    for (std::size_t i = 0; i < pt[axis].size(); ++i)
      dst.push_back(cd_from_json(pt[axis][i], d, std::string("$.point.") + axis + "[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < j["h_exponents"].size(); ++i) {
    const auto& h = j["h_exponents"][i];
    const auto p = "$.h_exponents[" + std::to_string(i) + "]";
    if (!h.is_array() || h.size() != 2) {
      d.add(p, "expected [\"p/q\", \"r/s\"]");
      continue;
    }
    r.h_exponents.emplace_back(rat_from_json(h[0], d, p + "[0]"), rat_from_json(h[1], d, p + "[1]"));
  }
  auto number = [&](const char* key, double& out) {
    if (j.contains(key) && j[key].is_number()) out = j[key].get<double>();
    else d.add(std::string("$.") + key, "number required");
  };
  number("residual_variety", r.residual_variety);
  number("residual_gamma", r.residual_gamma);
  number("jacobian_condition", r.jacobian_condition);
  number("tol", r.tol);
  if (j.contains("qmax") && j["qmax"].is_number_integer()) r.qmax = j["qmax"].get<long>();
  else d.add("$.qmax", "integer required");
  if (j.contains("iterations") && j["iterations"].is_number_integer()) r.iterations = j["iterations"].get<int>();
  if (j.contains("seed") && natural(j["seed"])) r.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("restart") && j["restart"].is_number_integer()) r.restart = j["restart"].get<int>();
  return r;
}

// Kinds and validation -------------------------------------------------------

std::string detect_kind(const json& j) {
  if (!j.is_object()) return "";
  if (j.contains("verb") && j.contains("verdict")) return "report";
  if (j.contains("ideal")) return "variety";
  if (j.contains("generators")) return "presentation";
  if (j.contains("coeffs")) return "series";
  if (j.contains("points")) return "ede-points";
  if (j.contains("h_exponents")) return "witness";
  if (j.contains("x") && j["x"].is_object()) return "diffpoint";
  if (j.contains("x") && j.contains("y")) return "axs-input";
  if (j.contains("values")) return "relation-input";
  if (j.contains("z")) return "decompose-input";
  return "";
}

namespace {

void complex_list(const json& j, const std::string& key, Diagnostics& d, bool required) {
  if (!j.contains(key)) {
    if (required) d.add("$." + key, "missing");
    return;
  }
  if (!j[key].is_array()) {
    d.add("$." + key, "must be a list of complex numbers");
    return;
  }
  for (std::size_t i = 0; i < j[key].size(); ++i) complex_from_json(j[key][i], d, "$." + key + "[" + std::to_string(i) + "]");
}

}  // namespace

std::vector<std::string> validate(const json& j, const std::string& kind) {
  Diagnostics d;
  if (!j.is_object()) {
    d.add("$", "document must be a JSON object");
    return d.violations();
  }
  if (kind == "variety") {
    auto v = variety_from_json(j, d);
    if (d.ok()) {
      try {
        v.build();
      } catch (const Error& e) {
        d.add("$.ideal", e.what());
      }
    }
  } else if (kind == "presentation") {
    auto p = presentation_from_json(j, d);
    if (d.ok()) {
      try {
        p.build();
      } catch (const Error& e) {
        d.add("$", e.what());
      }
    }
  } else if (kind == "series") {
    series_from_json(j, d, "$");
  } else if (kind == "diffpoint") {
    series_from_json(j.value("x", json()), d, "$.x");
    series_from_json(j.value("y", json()), d, "$.y");
  } else if (kind == "ede-points") {
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty()) d.add("$.points", "need a non-empty list of points");
    else
      for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const auto& p = j["points"][i];
        const auto path = "$.points[" + std::to_string(i) + "]";
        series_from_json(p.value("x", json()), d, path + ".x");
        series_from_json(p.value("y", json()), d, path + ".y");
      }
  } else if (kind == "witness") {
    witness_report_from_json(j, d);
  } else if (kind == "axs-input") {
    complex_list(j, "x", d, true);
    complex_list(j, "y", d, true);
    complex_list(j, "c_basis", d, false);
    if (d.ok() && j["x"].size() != j["y"].size())
      d.add("$", "x and y differ in length");
  } else if (kind == "relation-input") {
    complex_list(j, "values", d, true);
    complex_list(j, "basis", d, false);
  } else if (kind == "decompose-input") {
    complex_from_json(j.value("z", json()), d, "$.z");
  } else if (kind == "report") {
    if (!j.contains("verb") || !j["verb"].is_string()) d.add("$.verb", "must be a string");
  } else {
    d.add("$", "unrecognized document kind");
  }
  return d.violations();
}

}  // namespace gwb::io
