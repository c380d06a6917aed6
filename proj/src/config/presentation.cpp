#include "gwb/config/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "gwb/error.hpp"

namespace gwb::config {

std::string to_string(HSpec::Kind k) {
  switch (k) {
    case HSpec::Kind::Trivial: return "Trivial";
    case HSpec::Kind::LatticeExp: return "LatticeExp";
    case HSpec::Kind::ConstantsField: return "ConstantsField";
  }
  return "?";
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty() || s == "i" || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Integer common_denominator(const std::vector<RatRow>& rows) {
  Integer d = 1;
  for (const auto& r : rows)
    for (const auto& q : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

IntMat scaled(const std::vector<RatRow>& rows, const Integer& d, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rat q = rows[i][j] * Rat(d);
      m(i, j) = q.get_num();
    }
  return m;
}

}  // namespace

GammaPresentation::GammaPresentation(std::vector<std::string> labels, std::vector<bool> constant,
                                     std::vector<Polynomial> relations, std::vector<RatRow> gamma,
                                     HSpec blur, long denominator_bound, const GroebnerOptions& options)
    : labels_(std::move(labels)),
      constant_(std::move(constant)),
      relations_(std::move(relations)),
      gamma_(std::move(gamma)),
      blur_(std::move(blur)),
      denominator_bound_(denominator_bound) {
  const std::size_t k = labels_.size();
  if (k == 0) throw Error(ErrorCode::MalformedPresentation, "no generators");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!valid_label(l)) throw Error(ErrorCode::MalformedPresentation, "invalid generator label '" + l + "'");
    if (!seen.insert(l).second) throw Error(ErrorCode::MalformedPresentation, "duplicate generator label " + l);
  }
  if (constant_.size() != k) throw Error(ErrorCode::MalformedPresentation, "constant flags do not match generators");
  if (denominator_bound_ < 1) throw Error(ErrorCode::MalformedPresentation, "denominator_bound must be positive");
  for (const auto& row : gamma_)
    if (row.size() != k) throw Error(ErrorCode::MalformedPresentation, "declaration has wrong length");
  for (const auto& r : relations_)
    if (r.nvars() != 2 * k) throw Error(ErrorCode::MalformedPresentation, "relation is not over the generator coordinates");
  try {
    variety_ = geometry::GSubvariety(k, relations_, true, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MalformedVariety) throw;
    throw Error(ErrorCode::MalformedPresentation, "relations generate the unit ideal");
  }
}

std::vector<std::string> GammaPresentation::coordinate_names(const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l + "_x");
  for (const auto& l : labels) names.push_back(l + "_y");
  return names;
}

std::vector<std::string> GammaPresentation::coordinate_names() const { return coordinate_names(labels_); }

std::optional<std::size_t> GammaPresentation::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> GammaPresentation::with_constants(const std::vector<std::size_t>& a) const {
  std::set<std::size_t> s(a.begin(), a.end());
  for (std::size_t k = 0; k < size(); ++k) {
    if (constant_[k]) s.insert(k);
  }
  for (auto k : s)
    if (k >= size()) throw Error(ErrorCode::InvalidArgument, "sub-presentation index out of range");
  return {s.begin(), s.end()};
}

bool in_lattice(const std::vector<RatRow>& rows, const RatRow& w) {
  if (std::all_of(w.begin(), w.end(), [](const Rat& q) { return sgn(q) == 0; })) return true;
  if (rows.empty()) return false;
  std::vector<RatRow> all = rows;
  all.push_back(w);
  Integer d = common_denominator(all);
  const std::size_t cols = w.size();
  return algebra::hermite_normal_form(scaled(rows, d, cols)) == algebra::hermite_normal_form(scaled(all, d, cols));
}

std::vector<RatRow> sublattice_supported_on(const std::vector<RatRow>& rows,
                                            const std::vector<std::size_t>& support) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size(), m = rows.size();
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < cols; ++j)
    if (!std::binary_search(support.begin(), support.end(), j)) outside.push_back(j);
  Integer d = common_denominator(rows);
  IntMat r = scaled(rows, d, cols);

  // Integer kernel of z -> z * r restricted to the outside columns: echelonize
  // [r_outside | I] and keep the rows whose left block vanished.
  IntMat aug(m, outside.size() + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < outside.size(); ++j) aug(i, j) = r(i, outside[j]);
    aug(i, outside.size() + i) = 1;
  }
  IntMat h = algebra::hermite_normal_form(aug);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < outside.size(); ++j)
      if (sgn(h(i, j)) != 0) left_zero = false;
    if (!left_zero) continue;
    std::vector<Integer> v(cols, 0);
    for (std::size_t k = 0; k < m; ++k) {
      const Integer& z = h(i, outside.size() + k);
      if (sgn(z) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) v[j] += z * r(k, j);
    }
    gens.push_back(std::move(v));
  }
  IntMat basis = algebra::hermite_normal_form(IntMat::from_rows(gens, cols));
  std::vector<RatRow> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    RatRow row(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = Rat(basis(i, j), d);
      row[j].canonicalize();
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool is_declared(const GammaPresentation& p, const RatRow& w) { return in_lattice(p.gamma(), w); }

std::vector<std::size_t> purity_violations(const GammaPresentation& p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto line = sublattice_supported_on(p.gamma(), {k});
    if (line.empty()) continue;
    // The declared multiples of e_k are (a/b) Z; the smallest integer one is a.
    const Rat& q = line.front()[k];
    Integer a = abs(q.get_num());
    if (a > 1 && a <= p.denominator_bound()) out.push_back(k);
  }
  return out;
}

}  // namespace gwb::config
