#include <algorithm>
#include <sstream>

#include "gwb/config/gamma.hpp"
#include "gwb/ede/series.hpp"
#include "gwb/error.hpp"
#include "gwb/geometry/freeness.hpp"
#include "gwb/geometry/rotundity.hpp"
#include "gwb/io/json_io.hpp"
#include "gwb/relations/relations.hpp"
#include "gwb/witness/witness.hpp"
#include "verbs.hpp"

namespace gwb::cli {

namespace {

using Type = OptionSpec::Type;
using algebra::Integer;
using algebra::IntMat;
using algebra::RatRow;
using numeric::BigComplex;
using numeric::Real;

long opt_int(const Context& c, const char* name) { return c.options.at(name).get<long>(); }
double opt_real(const Context& c, const char* name) { return c.options.at(name).get<double>(); }
std::string opt_text(const Context& c, const char* name) { return c.options.at(name).get<std::string>(); }
bool opt_flag(const Context& c, const char* name) { return c.options.at(name).get<bool>(); }

json option_json(const Context& c, const char* name) {
  return io::parse_json_text(opt_text(c, name), std::string("--") + name);
}

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.fits_slong_p() ? json(z.get_si()) : json(z.get_str()));
  return out;
}

std::string real_text(const Real& r) { return numeric::format(r, 6); }

geometry::GSubvariety variety_input(const Context& c, std::size_t i) {
  io::Diagnostics d;
  auto doc = io::variety_from_json(c.documents.at(i), d);
  d.raise_if_any(c.paths.at(i) + ": invalid variety");
  return doc.build();
}

config::GammaPresentation presentation_input(const Context& c, std::size_t i) {
  io::Diagnostics d;
  auto doc = io::presentation_from_json(c.documents.at(i), d);
  d.raise_if_any(c.paths.at(i) + ": invalid presentation");
  return doc.build();
}

IntMat matrix_option(const Context& c, std::size_t n) {
  io::Diagnostics d;
  IntMat m = io::intmat_from_json(option_json(c, "matrix"), d, "--matrix");
  d.raise_if_any("invalid --matrix");
  if (m.cols() != n) throw Error(ErrorCode::InvalidArgument, "--matrix needs " + std::to_string(n) + " columns");
  return m;
}

std::vector<std::size_t> labels_option(const Context& c, const config::GammaPresentation& p) {
  std::vector<std::size_t> out;
  std::stringstream s(opt_text(c, "a"));
  std::string label;
  while (std::getline(s, label, ',')) {
    if (label.empty()) continue;
    auto k = p.index_of(label);
    if (!k) throw Error(ErrorCode::InvalidArgument, "unknown generator \"" + label + "\" in --a");
    out.push_back(*k);
  }
  return out;
}

std::vector<RatRow> points_option(const Context& c, const char* name, std::size_t k) {
  json j = option_json(c, name);
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, std::string("--") + name + " must be a list of Gamma-points");
  io::Diagnostics d;
  std::vector<RatRow> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(io::gamma_point_from_json(j[i], k, d, std::string("--") + name + "[" + std::to_string(i) + "]"));
  d.raise_if_any("invalid Gamma-points");
  return out;
}

config::HSpec hspec_option(const Context& c) {
  const std::string text = opt_text(c, "H");
  if (text == "lattice") return {config::HSpec::Kind::LatticeExp, {"1", "2*pi*i"}, ""};
  if (text == "trivial") return {};
  if (text == "gm(C)" || text == "gm(F)") return {config::HSpec::Kind::ConstantsField, {}, text};
  io::Diagnostics d;
  auto h = io::hspec_from_json(io::parse_json_text(text, "--H"), d, "--H");
  d.raise_if_any("invalid --H");
  return h;
}

std::vector<BigComplex> complex_list(const Context& c, const char* key, bool required) {
  const json& doc = c.documents.at(0);
  std::vector<BigComplex> out;
  if (!doc.contains(key)) {
    if (required) throw Error(ErrorCode::ParseError, c.paths[0] + ": missing \"" + key + "\"");
    return out;
  }
  io::Diagnostics d;
  if (!doc[key].is_array()) d.add(std::string("$.") + key, "must be a list of complex numbers");
  else
    for (std::size_t i = 0; i < doc[key].size(); ++i)
      out.push_back(io::complex_from_json(doc[key][i], d, std::string("$.") + key + "[" + std::to_string(i) + "]"));
  d.raise_if_any(c.paths[0] + ": invalid numbers");
  return out;
}

json rotundity_json(const geometry::RotundityVerdict& v) {
  return {{"status", geometry::to_string(v.status)},
          {"bound", v.bound},
          {"classes", v.classes},
          {"witness", v.witness ? io::to_json(*v.witness) : json(nullptr)},
          {"witness_dim", v.witness_dim},
          {"witness_rank", v.witness_rank}};
}

Outcome rotundity_outcome(const geometry::RotundityVerdict& v) {
  return {geometry::to_string(v.status), v.holds(), rotundity_json(v)};
}

geometry::RotundityOptions rotundity_options(const Context& c) {
  geometry::RotundityOptions o;
  o.bound = opt_int(c, "bound");
  o.parallel = !opt_flag(c, "serial");
  return o;
}

Outcome rotund(const Context& c) { return rotundity_outcome(geometry::is_rotund(variety_input(c, 0), rotundity_options(c))); }

Outcome strong_rotund(const Context& c) {
  return rotundity_outcome(geometry::is_strongly_rotund(variety_input(c, 0), rotundity_options(c)));
}

Outcome free(const Context& c) {
  auto v = variety_input(c, 0);
  auto add = geometry::is_additively_free(v);
  geometry::MultiplicativeOptions mo;
  mo.bound = opt_int(c, "bound");
  mo.seed = static_cast<std::uint64_t>(opt_int(c, "seed"));
  mo.extra_samples = static_cast<int>(opt_int(c, "extra-samples"));
  mo.digits = static_cast<int>(opt_int(c, "precision"));
  auto mul = geometry::is_multiplicatively_free(v, mo);
  json verdict = {
      {"additive", {{"free", add.free}, {"m", integers(add.m)}, {"c", io::to_json(add.c)}}},
      {"multiplicative",
       {{"status", geometry::to_string(mul.status)}, {"bound", mul.bound}, {"m", integers(mul.m)},
        {"c", io::to_json(mul.c)}, {"samples", mul.samples}}}};
  if (!add.free || mul.status == geometry::MultStatus::NotFree) return {"NotFree", false, verdict};
  if (mul.status == geometry::MultStatus::Unknown) return {"Unknown", true, verdict};
  return {"FreeUpTo", true, verdict};
}

Outcome act(const Context& c) {
  auto v = variety_input(c, 0);
  auto image = geometry::act(matrix_option(c, v.n()), v);
  return {"Computed", false, {{"image", io::to_json(io::VarietyDoc::of(image))}, {"dimension", image.dimension()}}};
}

Outcome fibre(const Context& c) {
  auto v = variety_input(c, 0);
  IntMat m = matrix_option(c, v.n());
  json pt = option_json(c, "point");
  io::Diagnostics d;
  std::vector<algebra::GaussRat> gamma;
  if (!pt.is_array() || pt.size() != 2 * v.n()) d.add("--point", "need 2n Gaussian rationals");
  else
    for (std::size_t i = 0; i < pt.size(); ++i) gamma.push_back(io::gaussrat_from_json(pt[i], d, "--point[" + std::to_string(i) + "]"));
  d.raise_if_any("invalid --point");
  auto r = geometry::fibre_dim_check(v, m, gamma);
  return {r.satisfies_lemma ? "FibreBoundHolds" : "FibreBoundFails", false,
          {{"fiber_dim", r.fiber_dim}, {"dim_j", r.dim_j}, {"satisfies_lemma", r.satisfies_lemma}}};
}

json predim_json(const config::PredimReport& r) {
  return {{"td", r.td}, {"ldim", r.ldim}, {"delta", r.delta}, {"td_mode", r.td_mode}};
}

Outcome predim(const Context& c) {
  auto p = presentation_input(c, 0);
  auto r = config::predimension(p, labels_option(c, p), points_option(c, "b", p.size()));
  return {"Predimension", false, predim_json(r)};
}

Outcome closed(const Context& c) {
  auto p = presentation_input(c, 0);
  config::ClosedOptions o;
  o.rank_bound = static_cast<std::size_t>(opt_int(c, "rank-bound"));
  o.comb_bound = opt_int(c, "comb-bound");
  o.max_tuples = static_cast<std::size_t>(opt_int(c, "max-tuples"));
  o.parallel = !opt_flag(c, "serial");
  auto v = config::is_rel_gamma_closed(p, labels_option(c, p), o);
  json witness = json::array();
  for (const auto& w : v.witness) witness.push_back(io::gamma_point_to_json(w));
  json verdict = {{"status", config::to_string(v.status)}, {"rank_bound", v.rank_bound}, {"comb_bound", v.comb_bound},
                  {"witness", witness}, {"tuples", v.tuples}};
  if (v.status == config::ClosedStatus::NotClosed) verdict["witness_predim"] = predim_json(v.witness_predim);
  return {config::to_string(v.status), v.status == config::ClosedStatus::ClosedUpTo, verdict};
}

Outcome blur_verb(const Context& c) {
  auto p = presentation_input(c, 0);
  auto r = config::blur(p, hspec_option(c));
  json added = json::array();
  for (auto k : r.h_generators) added.push_back(r.presentation.labels()[k]);
  return {"Blurred", false, {{"presentation", io::to_json(r.presentation)}, {"h_generators", added}}};
}

Outcome axs(const Context& c) {
  auto x = complex_list(c, "x", true), y = complex_list(c, "y", true), basis = complex_list(c, "c_basis", false);
  if (!c.documents.at(0).contains("c_basis")) basis = {BigComplex(Real(1)), BigComplex(Real(0), numeric::two_pi())};
  config::AxsOptions o;
  o.bound = opt_int(c, "bound");
  o.tol = numeric::parse_real(opt_text(c, "tol"));
  o.digits = static_cast<int>(opt_int(c, "precision"));
  auto w = config::ax_schanuel_witness(x, y, basis, o);
  if (!w) return {"NoWitnessAtBound", true, {{"witness", nullptr}, {"bound", o.bound}}};
  json xc = json::array(), yc = json::array();
  for (const auto& row : w->x_constants) {
    json r = json::array();
    for (const auto& q : row) r.push_back(io::to_json(q));
    xc.push_back(r);
  }
  for (const auto& z : w->y_constants) yc.push_back(io::complex_to_json(z, 20));
  return {"WitnessFound", false,
          {{"witness",
            {{"m", io::to_json(w->m)}, {"x_constants", xc}, {"y_constants", yc},
             {"residual", real_text(w->residual)}, {"trivial_j", w->trivial_j}}},
           {"bound", o.bound}}};
}

Outcome pair(const Context& c) {
  auto p = presentation_input(c, 0);
  auto v = variety_input(c, 1);
  geometry::RotundityOptions o;
  o.bound = opt_int(c, "bound");
  return rotundity_outcome(config::locus_strong_rotund(p, points_option(c, "a", p.size()), v, o));
}

Outcome witness_verb(const Context& c) {
  auto v = variety_input(c, 0);
  witness::WitnessOptions o;
  o.tol = opt_real(c, "tol");
  o.qmax = opt_int(c, "qmax");
  o.restarts = static_cast<int>(opt_int(c, "restarts"));
  o.sampling.parallel = !opt_flag(c, "serial");
  auto r = witness::find_witness(v, hspec_option(c), static_cast<std::uint64_t>(opt_int(c, "seed")), o);
  json verdict = io::to_json(r);
  verdict["settings"] = {{"slicings", o.sampling.slicings}, {"starts", o.sampling.starts},
                         {"newton_iterations", o.newton_iterations}, {"step_cap", o.step_cap},
                         {"h_eps", o.h_eps}};
  return {"WitnessFound", false, verdict};
}

Outcome verify(const Context& c) {
  json doc = c.documents.at(0);
  if (doc.contains("verb") && doc.contains("verdict")) doc = doc["verdict"];
  io::Diagnostics d;
  auto r = io::witness_report_from_json(doc, d);
  d.raise_if_any(c.paths[0] + ": invalid witness report");
  auto v = variety_input(c, 1);
  auto h = hspec_option(c);
  bool ok = witness::verify_witness(r, v, h);
  json verdict = {{"valid", ok}};
  if (r.point.x.size() == v.n() && r.point.y.size() == v.n() && r.h_exponents.size() == v.n()) {
    auto [rv, rg] = witness::witness_residuals(v, r.point, r.h_exponents);
    verdict["residual_variety"] = real_text(rv);
    verdict["residual_gamma"] = real_text(rg);
  }
  return {ok ? "Verified" : "Rejected", false, verdict};
}

json candidate_json(const relations::RelationCandidate& r, int digits) {
  return {{"coefficients", integers(r.coefficients)},
          {"auxiliary", integers(r.auxiliary)},
          {"residual", real_text(r.residual)},
          {"verified", r.verified},
          {"constant", io::complex_to_json(r.constant, digits)}};
}

Outcome relations_verb(const Context& c) {
  auto values = complex_list(c, "values", true);
  relations::RelationOptions o;
  o.bound = opt_int(c, "bound");
  o.tol = numeric::parse_real(opt_text(c, "tol"));
  o.digits = static_cast<int>(opt_int(c, "precision"));
  const std::string mode = opt_text(c, "mode");
  json settings = {{"scale_exponent", relations::scale_exponent(o)}, {"bound", o.bound}};
  if (mode == "qlin") {
    auto basis = complex_list(c, "basis", false);
    auto q = relations::qlin_dim(values, basis, o);
    json rels = json::array();
    for (const auto& r : q.relations) rels.push_back(integers(r));
    return {"QlinDimAtMost", true, {{"estimate", q.estimate}, {"relations", rels}, {"settings", settings}}};
  }
  std::optional<relations::RelationCandidate> r;
  if (mode == "integer") r = relations::integer_relation(values, o);
  else if (mode == "multiplicative") r = relations::multiplicative_relation(values, o);
  else throw Error(ErrorCode::InvalidArgument, "--mode must be integer, multiplicative or qlin");
  if (!r) return {"NoRelationAtBound", true, {{"relation", nullptr}, {"settings", settings}}};
  return {"RelationFound", false, {{"relation", candidate_json(*r, 20)}, {"settings", settings}}};
}

Outcome decompose(const Context& c) {
  const json& doc = c.documents.at(0);
  io::Diagnostics d;
  auto z = io::complex_from_json(doc.contains("z") ? doc["z"] : json(), d, "$.z");
  d.raise_if_any(c.paths[0] + ": invalid input");
  auto r = relations::decompose_over_basis(z, opt_int(c, "qmax"), numeric::parse_real(opt_text(c, "tol")));
  if (!r) return {"NoDecompositionAtBound", true, {{"decomposition", nullptr}}};
  return {"Decomposed", false, {{"decomposition", {{"a", io::to_json(r->first)}, {"b", io::to_json(r->second)}}}}};
}

ede::DiffPoint diffpoint_of(const json& j, io::Diagnostics& d, const std::string& path) {
  return {io::series_from_json(j.contains("x") ? j["x"] : json(), d, path + ".x"),
          io::series_from_json(j.contains("y") ? j["y"] : json(), d, path + ".y")};
}

Outcome ede_check(const Context& c) {
  io::Diagnostics d;
  auto p = diffpoint_of(c.documents.at(0), d, "$");
  d.raise_if_any(c.paths[0] + ": invalid point");
  long order = opt_int(c, "order");
  std::size_t n = order < 0 ? std::min(p.x.order(), p.y.order()) : static_cast<std::size_t>(order);
  bool member = ede::in_gamma_de(p, n);
  return {member ? "Member" : "NotMember", false,
          {{"member", member}, {"order", n}, {"checked_through", n == 0 ? 0 : n - 1}}};
}

Outcome ede_axs(const Context& c) {
  const json& doc = c.documents.at(0);
  io::Diagnostics d;
  std::vector<ede::DiffPoint> points;
  if (!doc.contains("points") || !doc["points"].is_array()) d.add("$.points", "need a list of points");
  else
    for (std::size_t i = 0; i < doc["points"].size(); ++i)
      points.push_back(diffpoint_of(doc["points"][i], d, "$.points[" + std::to_string(i) + "]"));
  d.raise_if_any(c.paths[0] + ": invalid points");
  auto v = ede::empirical_ax_schanuel(points, static_cast<std::size_t>(opt_int(c, "degree")),
                                      static_cast<std::size_t>(opt_int(c, "order")));
  auto names = ede::coordinate_names(points.size());
  json rels = json::array();
  for (const auto& r : v.relations) rels.push_back(io::to_json(r, names));
  json verdict = {{"status", ede::to_string(v.status)}, {"degree_bound", v.degree_bound},
                  {"monomials", v.monomials},             {"checked_order", v.checked_order},
                  {"relations", rels},                     {"subgroup", v.subgroup.rows() ? io::to_json(v.subgroup) : json::array()}};
  return {ede::to_string(v.status), v.status == ede::EdeStatus::NoRelationAtBound, verdict};
}

Outcome validate_verb(const Context& c) {
  const json& doc = c.documents.at(0);
  std::string kind = opt_text(c, "kind");
  if (kind == "auto") kind = io::detect_kind(doc);
  auto violations = io::validate(doc, kind);
  return {violations.empty() ? "Valid" : "Invalid", false,
          {{"kind", kind}, {"valid", violations.empty()}, {"violations", violations}}};
}

OptionSpec bound_opt(const char* fallback) { return {"bound", Type::Int, fallback, "search bound"}; }
OptionSpec serial_opt() { return {"serial", Type::Flag, "", "use the serial reference kernel"}; }
OptionSpec precision_opt() {
  return {"precision", Type::Int, std::to_string(default_precision()), "working precision in decimal digits"};
}

}  // namespace

const std::vector<VerbSpec>& verbs() {
  static const std::vector<VerbSpec> table = {
      {"rotund", "bounded rotundity check", {"variety"}, {bound_opt("3"), serial_opt()}, rotund},
      {"strong-rotund", "bounded strong rotundity check", {"variety"}, {bound_opt("3"), serial_opt()}, strong_rotund},
      {"free", "additive and multiplicative freeness", {"variety"},
       {bound_opt("10"), {"seed", Type::Int, "1", "sampling seed"},
        {"extra-samples", Type::Int, "3", "sample points beyond the first"}, precision_opt()},
       free},
      {"act", "image of V under an integer matrix", {"variety"},
       {{"matrix", Type::Text, "", "integer matrix as JSON rows"}}, act},
      {"fibre", "fibre dimension of V at gamma + TJ", {"variety"},
       {{"matrix", Type::Text, "", "integer matrix as JSON rows"},
        {"point", Type::Text, "", "gamma as 2n Gaussian rationals"}},
       fibre},
      {"predim", "predimension of Gamma-points over a sub-presentation", {"presentation"},
       {{"a", Type::Text, "", "comma-separated generator labels"},
        {"b", Type::Text, "[]", "Gamma-points as JSON"}},
       predim},
      {"closed", "bounded relative Gamma-closedness", {"presentation"},
       {{"a", Type::Text, "", "comma-separated generator labels"},
        {"rank-bound", Type::Int, "1", "longest tuple searched"},
        {"comb-bound", Type::Int, "2", "coefficient bound for candidates"},
        {"max-tuples", Type::Int, "20000", "tuple budget"},
        serial_opt()},
       closed},
      {"blur", "blur a presentation by H", {"presentation"}, {{"H", Type::Text, "lattice", "blur group"}}, blur_verb},
      {"axs", "Ax-Schanuel witness search", {"numbers"},
       {bound_opt("10"), {"tol", Type::Text, "1e-20", "residual tolerance"}, precision_opt()}, axs},
      {"pair", "strong rotundity of loc(a/C) x V", {"presentation", "variety"},
       {{"a", Type::Text, "[]", "Gamma-points as JSON"}, bound_opt("3")}, pair},
      {"witness", "numeric witness of Gamma_H^n meeting V", {"variety"},
       {{"H", Type::Text, "lattice", "blur group"},
        {"seed", Type::Int, "7", "search seed"},
        {"tol", Type::Real, "1e-10", "residual tolerance"},
        {"qmax", Type::Int, "50", "denominator bound for h"},
        {"restarts", Type::Int, "8", "regular points tried"},
        serial_opt()},
       witness_verb},
      {"verify", "re-check a witness report", {"witness", "variety"},
       {{"H", Type::Text, "lattice", "blur group"}}, verify},
      {"relations", "integer, multiplicative or Q-linear relations", {"numbers"},
       {{"mode", Type::Text, "integer", "integer, multiplicative or qlin"},
        bound_opt("20"),
        {"tol", Type::Text, "1e-20", "residual tolerance"},
        precision_opt()},
       relations_verb},
      {"decompose", "z as p/q + (r/s) 2 pi i", {"numbers"},
       {{"qmax", Type::Int, "50", "denominator bound"}, {"tol", Type::Text, "1e-20", "tolerance"}}, decompose},
      {"ede-check", "membership in Gamma_DE", {"point"},
       {{"order", Type::Int, "-1", "truncation order (default: input order)"}}, ede_check},
      {"ede-axs", "empirical Ax-Schanuel test", {"points"},
       {{"degree", Type::Int, "2", "degree bound"}, {"order", Type::Int, "24", "truncation order"}}, ede_axs},
      {"validate", "schema-check an input file", {"file"},
       {{"kind", Type::Text, "auto", "document kind"}}, validate_verb},
      {"replay", "re-run the command recorded in a report", {"report"}, {}, replay},
  };
  return table;
}

}  // namespace gwb::cli
