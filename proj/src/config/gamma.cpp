#include "gwb/config/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>

#include "gwb/error.hpp"
#include "gwb/relations/relations.hpp"

namespace gwb::config {

using algebra::Monomial;
using algebra::MonomialOrder;
using numeric::BigComplex;
using numeric::Real;

std::string to_string(ClosedStatus s) { return s == ClosedStatus::ClosedUpTo ? "ClosedUpTo" : "NotClosed"; }

namespace {

bool is_zero_row(const RatRow& r) {
  return std::all_of(r.begin(), r.end(), [](const Rat& q) { return sgn(q) == 0; });
}

IntMat to_intmat(const std::vector<RatRow>& rows, std::size_t cols) {
  Integer d = 1;
  for (const auto& r : rows)
    for (const auto& q : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rows[i][j] * Rat(d)).get_num();
  return m;
}

// Ring for the coordinates of b: xi, upsilon, inverses of the upsilons that
// carry negative exponents, then u_j = <n_j, xi> and v_j = upsilon^n_j.
struct PointRing {
  std::size_t k = 0, nb = 0, ninv = 0, u0 = 0, v0 = 0, total = 0;
  std::vector<std::string> names;
  std::vector<Polynomial> gens;
};

// With exact = false each b_j is replaced by its primitive integer direction,
// which leaves transcendence degrees unchanged.
PointRing point_ring(const GammaPresentation& p, std::vector<RatRow> b, bool exact) {
  if (!exact)
    for (auto& w : b) {
      auto prim = algebra::primitive_integer_row(w);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = Rat(prim[j]);
    }
  PointRing r;
  r.k = p.size();
  r.nb = b.size();
  // v_j^d_j = upsilon^(d_j b_j) with d_j the denominator of b_j.
  std::vector<std::vector<Integer>> rows;
  std::vector<Integer> dens;
  for (const auto& w : b) {
    Integer d = 1;
    for (const auto& q : w) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> row;
    for (const auto& q : w) row.push_back(Rat(q * Rat(d)).get_num());
    rows.push_back(std::move(row));
    dens.push_back(d);
  }
  std::vector<std::size_t> inv_of(r.k, 0);
  for (std::size_t j = 0; j < r.k; ++j) {
    bool neg = false;
    for (const auto& row : rows)
      if (sgn(row[j]) < 0) neg = true;
    if (neg) inv_of[j] = 2 * r.k + r.ninv++;
  }
  r.u0 = 2 * r.k + r.ninv;
  r.v0 = r.u0 + r.nb;
  r.total = r.v0 + r.nb;
  r.names = p.coordinate_names();
  for (std::size_t t = 0; t < r.ninv; ++t) r.names.push_back("__z" + std::to_string(t));
  for (std::size_t t = 0; t < r.nb; ++t) r.names.push_back("__u" + std::to_string(t));
  for (std::size_t t = 0; t < r.nb; ++t) r.names.push_back("__v" + std::to_string(t));

  std::vector<std::size_t> embed(2 * r.k);
  std::iota(embed.begin(), embed.end(), 0);
  for (const auto& g : p.variety().ideal().generators())
    r.gens.push_back(g.remap(r.total, embed, MonomialOrder::grevlex()));
  const Polynomial one = Polynomial::constant(r.total, GaussRat(1));
  for (std::size_t j = 0; j < r.k; ++j)
    if (inv_of[j])
      r.gens.push_back(Polynomial::variable(r.total, r.k + j) * Polynomial::variable(r.total, inv_of[j]) - one);
  constexpr long kMaxExponent = 4096;
  for (std::size_t t = 0; t < r.nb; ++t) {
    Polynomial lin = Polynomial::variable(r.total, r.u0 + t);
    std::vector<int> exps(r.total, 0);
    for (std::size_t j = 0; j < r.k; ++j) {
      const Integer& e = rows[t][j];
      if (sgn(e) == 0) continue;
      if (abs(e) > kMaxExponent) throw Error(ErrorCode::ResourceExhausted, "exponent too large for symbolic elimination");
      lin -= Polynomial::variable(r.total, j) * GaussRat(b[t][j]);
      long v = e.get_si();
      if (v > 0) exps[r.k + j] += static_cast<int>(v);
      else exps[inv_of[j]] += static_cast<int>(-v);
    }
    if (dens[t] > kMaxExponent) throw Error(ErrorCode::ResourceExhausted, "denominator too large for symbolic elimination");
    r.gens.push_back(lin);
    r.gens.push_back(Polynomial::variable(r.total, r.v0 + t).pow(static_cast<unsigned>(dens[t].get_ui())) -
                     Polynomial::monomial(Monomial(exps), GaussRat(1)));
  }
  return r;
}

int projected_dimension(const IdealBasis& ideal, const std::vector<std::size_t>& keep,
                        const GroebnerOptions& options) {
  if (keep.empty()) return 0;
  return algebra::ideal_dimension(algebra::eliminate(ideal, keep, options), options);
}

std::vector<std::size_t> base_coordinates(const GammaPresentation& p, const std::vector<std::size_t>& base) {
  std::vector<std::size_t> keep;
  for (auto k : base) {
    keep.push_back(k);
    keep.push_back(p.size() + k);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

void check_tuple(const GammaPresentation& p, const std::vector<std::size_t>& s, const std::vector<RatRow>& b) {
  const auto gamma_a = sublattice_supported_on(p.gamma(), s);
  for (const auto& w : b) {
    if (w.size() != p.size()) throw Error(ErrorCode::InvalidArgument, "point has wrong length");
    if (is_declared(p, w)) continue;
    for (long k = 2; k <= p.denominator_bound(); ++k) {
      RatRow kw = w;
      for (auto& q : kw) q *= k;
      if (in_lattice(gamma_a, kw) || is_declared(p, kw))
        throw Error(ErrorCode::NotPure, "a multiple " + std::to_string(k) + "b is declared but b is not");
    }
    throw Error(ErrorCode::InvalidArgument, "point is not a declared Gamma-point");
  }
}

PredimReport predim_unchecked(const GammaPresentation& p, const std::vector<std::size_t>& s,
                              const std::vector<RatRow>& b, int base_dim, const GroebnerOptions& options) {
  PredimReport r;
  std::vector<RatRow> nonzero;
  for (const auto& w : b)
    if (!is_zero_row(w)) nonzero.push_back(w);
  if (!nonzero.empty()) {
    PointRing ring = point_ring(p, nonzero, false);
    auto keep = base_coordinates(p, s);
    for (std::size_t t = ring.u0; t < ring.total; ++t) keep.push_back(t);
    r.td = projected_dimension(IdealBasis(ring.names, ring.gens), keep, options) - base_dim;
  }
  r.ldim = linear_dimension(p, s, b);
  r.delta = r.td - r.ldim;
  return r;
}

int base_dimension(const GammaPresentation& p, const std::vector<std::size_t>& s, const GroebnerOptions& options) {
  return projected_dimension(p.variety().ideal(), base_coordinates(p, s), options);
}

}  // namespace

int transcendence_degree(const GammaPresentation& p, const std::vector<std::size_t>& base,
                         const std::vector<RatRow>& b, const GroebnerOptions& options) {
  return predim_unchecked(p, base, b, base_dimension(p, base, options), options).td;
}

int linear_dimension(const GammaPresentation& p, const std::vector<std::size_t>& a, const std::vector<RatRow>& b) {
  auto gamma_a = sublattice_supported_on(p.gamma(), p.with_constants(a));
  std::vector<RatRow> all = gamma_a;
  all.insert(all.end(), b.begin(), b.end());
  if (all.empty()) return 0;
  const std::size_t cols = p.size();
  std::size_t r0 = gamma_a.empty() ? 0 : algebra::smith_rank(to_intmat(gamma_a, cols));
  return static_cast<int>(algebra::smith_rank(to_intmat(all, cols)) - r0);
}

PredimReport predimension(const GammaPresentation& p, const std::vector<std::size_t>& a,
                          const std::vector<RatRow>& b, const GroebnerOptions& options) {
  auto s = p.with_constants(a);
  check_tuple(p, s, b);
  return predim_unchecked(p, s, b, base_dimension(p, s, options), options);
}

std::vector<RatRow> closure_candidates(const GammaPresentation& p, const std::vector<std::size_t>& a, long bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "combination bound must be positive");
  const auto& decls = p.gamma();
  const std::size_t m = decls.size(), k = p.size();
  if (m == 0) return {};
  double cube = std::pow(2.0 * static_cast<double>(bound) + 1, static_cast<double>(m));
  if (cube > 1e7) throw Error(ErrorCode::ResourceExhausted, "too many declaration combinations");
  auto s = p.with_constants(a);
  std::map<std::vector<Integer>, bool> seen;
  std::vector<RatRow> out;
  for (long rho = 1; rho <= bound; ++rho) {
    std::vector<long> c(m, -rho);
    while (true) {
      long peak = 0;
      for (long e : c) peak = std::max(peak, std::labs(e));
      if (peak == rho) {
        RatRow w(k, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
          if (c[i] != 0)
            for (std::size_t j = 0; j < k; ++j) w[j] += decls[i][j] * c[i];
        if (!is_zero_row(w)) {
          auto key = algebra::primitive_integer_row(w);
          bool inside = true;
          for (std::size_t j = 0; j < k; ++j)
            if (sgn(w[j]) != 0 && !std::binary_search(s.begin(), s.end(), j)) inside = false;
          if (!inside && seen.emplace(key, true).second) {
            auto first = std::find_if(w.begin(), w.end(), [](const Rat& q) { return sgn(q) != 0; });
            if (sgn(*first) < 0)
              for (auto& q : w) q = -q;
            out.push_back(std::move(w));
          }
        }
      }
      std::size_t t = 0;
      while (t < m && c[t] == rho) c[t++] = -rho;
      if (t == m) break;
      ++c[t];
    }
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r == 0 || r > n) return out;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t t = r;
    while (t > 0 && idx[t - 1] == n - r + (t - 1)) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t j = t; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::size_t tuple_count(std::size_t n, std::size_t r, std::size_t cap) {
  std::size_t total = 0;
  for (std::size_t len = 1; len <= r && len <= n; ++len) {
    // C(n, len) with early exit above the cap.
    double c = 1;
    for (std::size_t t = 0; t < len; ++t) c = c * static_cast<double>(n - t) / static_cast<double>(t + 1);
    if (c > static_cast<double>(cap)) return cap + 1;
    total += static_cast<std::size_t>(c + 0.5);
    if (total > cap) return cap + 1;
  }
  return total;
}

std::vector<RatRow> pick(const std::vector<RatRow>& candidates, const std::vector<std::size_t>& idx) {
  std::vector<RatRow> b;
  for (auto i : idx) b.push_back(candidates[i]);
  return b;
}

ClosedVerdict start_verdict(const ClosedOptions& options) {
  ClosedVerdict v;
  v.rank_bound = options.rank_bound;
  v.comb_bound = options.comb_bound;
  return v;
}

}  // namespace

ClosedVerdict closed_search_serial(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                   const std::vector<RatRow>& candidates, const ClosedOptions& options) {
  auto s = p.with_constants(a);
  const int base = base_dimension(p, s, options.groebner);
  ClosedVerdict v = start_verdict(options);
  for (std::size_t len = 1; len <= options.rank_bound; ++len) {
    for (const auto& idx : combinations(candidates.size(), len)) {
      ++v.tuples;
      auto b = pick(candidates, idx);
      auto r = predim_unchecked(p, s, b, base, options.groebner);
      if (r.delta <= 0) {
        v.status = ClosedStatus::NotClosed;
        v.witness = std::move(b);
        v.witness_predim = r;
        return v;
      }
    }
  }
  return v;
}

ClosedVerdict closed_search_parallel(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                     const std::vector<RatRow>& candidates, const ClosedOptions& options) {
  auto s = p.with_constants(a);
  const int base = base_dimension(p, s, options.groebner);
  ClosedVerdict v = start_verdict(options);
  for (std::size_t len = 1; len <= options.rank_bound; ++len) {
    auto tuples = combinations(candidates.size(), len);
    const auto count = static_cast<std::ptrdiff_t>(tuples.size());
    std::vector<PredimReport> reports(tuples.size());
    std::vector<std::exception_ptr> errors(tuples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      auto i = static_cast<std::size_t>(t);
      try {
        reports[i] = predim_unchecked(p, s, pick(candidates, tuples[i]), base, options.groebner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      ++v.tuples;
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (reports[i].delta <= 0) {
        v.status = ClosedStatus::NotClosed;
        v.witness = pick(candidates, tuples[i]);
        v.witness_predim = reports[i];
        return v;
      }
    }
  }
  return v;
}

ClosedVerdict is_rel_gamma_closed(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                  const ClosedOptions& options) {
  if (options.rank_bound < 1) throw Error(ErrorCode::InvalidArgument, "rank bound must be positive");
  auto candidates = closure_candidates(p, a, options.comb_bound);
  if (tuple_count(candidates.size(), options.rank_bound, options.max_tuples) > options.max_tuples)
    throw Error(ErrorCode::ResourceExhausted, "tuple search exceeds the budget");
  return options.parallel ? closed_search_parallel(p, a, candidates, options)
                          : closed_search_serial(p, a, candidates, options);
}

namespace {

Integer lcm_upto(long n) {
  Integer l = 1;
  for (long k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  return l;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Basis labels of the form "2*pi*i", "pi*i", "<rat>*2*pi*i" or "<rat>*pi*i".
bool is_torsion_label(const std::string& s) {
  std::string t = strip(s);
  for (const std::string tail : {"2*pi*i", "pi*i"}) {
    if (t.size() < tail.size() || t.compare(t.size() - tail.size(), tail.size(), tail) != 0) continue;
    std::string head = t.substr(0, t.size() - tail.size());
    if (head.empty()) return true;
    if (head.back() != '*') return false;
    head.pop_back();
    return algebra::is_exact_rational_literal(head) && sgn(algebra::parse_rat(head)) != 0;
  }
  return false;
}

std::string fresh_label(const std::vector<std::string>& labels, const std::string& want) {
  std::string l = want;
  while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "_";
  return l;
}

}  // namespace

BlurResult blur(const GammaPresentation& p, const HSpec& h, const GroebnerOptions& options) {
  if (p.blur().kind != HSpec::Kind::Trivial)
    throw Error(ErrorCode::InvalidArgument, "presentation is already blurred");
  const std::size_t k = p.size();
  const Rat unit(1, lcm_upto(p.denominator_bound()));

  // Each new generator is (0, target) where target is a fresh unit or an
  // existing upsilon.
  struct NewGen {
    std::string label;
    std::optional<std::size_t> equal_to;
  };
  std::vector<NewGen> added;
  std::vector<RatRow> extra_decls;

  switch (h.kind) {
    case HSpec::Kind::Trivial: break;
    case HSpec::Kind::LatticeExp: {
      std::size_t rational = 0;
      for (const auto& label : h.basis) {
        if (is_torsion_label(label)) continue;
        std::string t = strip(label);
        if (!algebra::is_exact_rational_literal(t) || sgn(algebra::parse_rat(t)) == 0)
          throw Error(ErrorCode::UnsupportedHSpec, "basis element '" + label + "' is neither rational nor in 2*pi*i*Q");
        if (++rational > 1)
          throw Error(ErrorCode::InvalidArgument, "two rational basis elements are Q-linearly dependent");
        added.push_back({"h_exp", std::nullopt});
      }
      break;
    }
    case HSpec::Kind::ConstantsField:
      if (h.tag == "gm(F)") {
        for (std::size_t j = 0; j < k; ++j) {
          RatRow row(k, Rat(0));
          row[j] = unit;
          extra_decls.push_back(std::move(row));
        }
      } else if (h.tag == "gm(C)") {
        for (std::size_t j = 0; j < k; ++j)
          if (p.constant()[j]) added.push_back({"h_" + p.labels()[j], j});
      } else {
        throw Error(ErrorCode::UnsupportedHSpec, "unknown constants-field tag '" + h.tag + "'");
      }
      break;
  }

  std::vector<std::string> labels = p.labels();
  std::vector<bool> constant = p.constant();
  BlurResult out;
  for (auto& g : added) {
    g.label = fresh_label(labels, g.label);
    out.h_generators.push_back(labels.size());
    labels.push_back(g.label);
    constant.push_back(true);
  }
  const std::size_t k2 = labels.size();
  std::vector<std::size_t> map(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    map[j] = j;
    map[k + j] = k2 + j;
  }
  std::vector<Polynomial> relations;
  for (const auto& r : p.relations()) relations.push_back(r.remap(2 * k2, map, MonomialOrder::grevlex()));
  for (std::size_t t = 0; t < added.size(); ++t) {
    const std::size_t g = k + t;
    relations.push_back(Polynomial::variable(2 * k2, g));
    if (added[t].equal_to)
      relations.push_back(Polynomial::variable(2 * k2, k2 + g) - Polynomial::variable(2 * k2, k2 + *added[t].equal_to));
  }
  std::vector<RatRow> gamma;
  for (const auto& row : p.gamma()) {
    RatRow r = row;
    r.resize(k2, Rat(0));
    gamma.push_back(std::move(r));
  }
  for (auto row : extra_decls) {
    row.resize(k2, Rat(0));
    gamma.push_back(std::move(row));
  }
  for (auto g : out.h_generators) {
    RatRow r(k2, Rat(0));
    r[g] = unit;
    gamma.push_back(std::move(r));
  }
  out.presentation = GammaPresentation(labels, constant, relations, gamma, h, p.denominator_bound(), options);
  return out;
}

namespace {

std::vector<Rat> combine(const std::vector<Rat>& u, const std::vector<std::vector<Rat>>& parts, std::size_t width) {
  std::vector<Rat> out(width, Rat(0));
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t t = 0; t < width; ++t) out[t] += u[j] * parts[j][t];
  return out;
}

BigComplex span_value(const std::vector<Rat>& q, const std::vector<BigComplex>& c) {
  BigComplex s;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(q[j]) != 0) s += BigComplex(numeric::to_real(q[j])) * c[j];
  return s;
}

// Rational u with sum u_j rows_j = target; rows are independent.
std::vector<Rat> coordinates_in(const std::vector<std::vector<Integer>>& rows, const std::vector<Integer>& target) {
  const std::size_t r = rows.size(), n = target.size();
  std::vector<RatRow> system(n, RatRow(r + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) system[i][j] = Rat(rows[j][i]);
    system[i][r] = Rat(target[i]);
  }
  auto kernel = algebra::rational_kernel(system, r + 1);
  for (const auto& k : kernel) {
    if (sgn(k[r]) == 0) continue;
    std::vector<Rat> u(r);
    for (std::size_t j = 0; j < r; ++j) u[j] = -k[j] / k[r];
    return u;
  }
  throw Error(ErrorCode::InvalidArgument, "row is not in the span");
}

}  // namespace

Real axs_row_defect(const std::vector<BigComplex>& x, const std::vector<BigComplex>& y,
                    const std::vector<BigComplex>& c_basis, const std::vector<Integer>& m,
                    const std::vector<Rat>& x_constant, const BigComplex& y_constant) {
  BigComplex sx, prod(Real(1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(m[i]) == 0) continue;
    sx += BigComplex(numeric::to_real(Rat(m[i]))) * x[i];
    prod *= numeric::pow(y[i], m[i].get_si());
  }
  Real d1 = numeric::abs(sx - span_value(x_constant, c_basis));
  Real d2 = numeric::abs(prod / y_constant - BigComplex(Real(1)));
  return d1 > d2 ? d1 : d2;
}

std::optional<AxsWitness> ax_schanuel_witness(const std::vector<BigComplex>& x, const std::vector<BigComplex>& y,
                                              const std::vector<BigComplex>& c_basis, const AxsOptions& options) {
  const std::size_t n = x.size(), kc = c_basis.size();
  if (n == 0 || y.size() != n) throw Error(ErrorCode::InvalidArgument, "need n pairs");
  if (options.tol <= 0 || options.digits > numeric::kMaxDigits ||
      options.tol < boost::multiprecision::pow(Real(10), -options.digits))
    throw Error(ErrorCode::ToleranceUnachievable, "tolerance is not reachable at the working precision");
  for (const auto& v : y)
    if (numeric::abs(v) == 0) throw Error(ErrorCode::InvalidArgument, "multiplicative coordinate is zero");

  // Variables: m (bounded), C in the additive equation, C and 2*pi*i in the
  // multiplicative one.
  std::vector<std::vector<BigComplex>> values(n + 2 * kc + 1, std::vector<BigComplex>(2));
  for (std::size_t i = 0; i < n; ++i) values[i] = {x[i], numeric::log(y[i])};
  for (std::size_t j = 0; j < kc; ++j) {
    values[n + j][0] = c_basis[j];
    values[n + kc + j][1] = c_basis[j];
  }
  values[n + 2 * kc][1] = BigComplex(Real(0), numeric::two_pi());
  relations::RelationOptions ro;
  ro.bound = options.bound;
  ro.tol = options.tol;
  ro.digits = options.digits;
  std::vector<relations::RelationCandidate> found;
  try {
    found = relations::find_relations(values, n, ro);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PrecisionTooLow) throw Error(ErrorCode::ToleranceUnachievable, e.what());
    throw;
  }

  std::vector<std::vector<Integer>> rows;
  std::vector<std::vector<Rat>> xc;
  std::vector<BigComplex> ylog;
  const BigComplex tau(Real(0), numeric::two_pi());
  for (const auto& cand : found) {
    std::vector<RatRow> trial;
    for (const auto& r : rows) trial.emplace_back(r.begin(), r.end());
    trial.emplace_back(cand.coefficients.begin(), cand.coefficients.end());
    if (algebra::rational_rank(trial) != trial.size()) continue;
    rows.push_back(cand.coefficients);
    std::vector<Rat> cx(kc);
    BigComplex ly = -BigComplex(numeric::to_real(Rat(cand.auxiliary[2 * kc]))) * tau;
    for (std::size_t j = 0; j < kc; ++j) {
      cx[j] = -Rat(cand.auxiliary[j]);
      ly -= BigComplex(numeric::to_real(Rat(cand.auxiliary[kc + j]))) * c_basis[j];
    }
    xc.push_back(std::move(cx));
    ylog.push_back(ly);
  }
  if (rows.empty()) return std::nullopt;

  // Constants range over span_Q(C), so J only depends on the rational row
  // space of the relations.
  AxsWitness w;
  w.m = geometry::row_space_representative(IntMat::from_rows(rows, n).padded(n)).nonzero_rows();
  w.trivial_j = w.m.rows() == n;
  for (std::size_t i = 0; i < w.m.rows(); ++i) {
    auto u = coordinates_in(rows, w.m.row(i));
    w.x_constants.push_back(combine(u, xc, kc));
    BigComplex l;
    for (std::size_t j = 0; j < u.size(); ++j) l += BigComplex(numeric::to_real(u[j])) * ylog[j];
    w.y_constants.push_back(numeric::exp(l));
    Real d = axs_row_defect(x, y, c_basis, w.m.row(i), w.x_constants.back(), w.y_constants.back());
    if (d > w.residual) w.residual = d;
  }
  return w;
}

geometry::GSubvariety locus(const GammaPresentation& p, const std::vector<RatRow>& a, const GroebnerOptions& options) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "empty tuple has no locus");
  for (const auto& w : a)
    if (w.size() != p.size() || !is_declared(p, w))
      throw Error(ErrorCode::InvalidArgument, "tuple entries must be declared Gamma-points");
  PointRing ring = point_ring(p, a, true);
  std::vector<std::size_t> keep;
  for (std::size_t t = ring.u0; t < ring.total; ++t) keep.push_back(t);
  IdealBasis loc = algebra::eliminate(IdealBasis(ring.names, ring.gens), keep, options);
  return geometry::GSubvariety::from_saturated(a.size(), loc, true, options);
}

geometry::RotundityVerdict locus_strong_rotund(const GammaPresentation& p, const std::vector<RatRow>& a,
                                               const geometry::GSubvariety& v,
                                               const geometry::RotundityOptions& options) {
  if (a.empty()) return geometry::is_strongly_rotund(v, options);
  const std::size_t k = a.size();
  for (const auto& w : a)
    if (w.size() != p.size() || !is_declared(p, w))
      throw Error(ErrorCode::InvalidArgument, "tuple entries must be declared Gamma-points");
  if (linear_dimension(p, {}, a) != static_cast<int>(k))
    throw Error(ErrorCode::InvalidArgument, "tuple is Q-linearly dependent over Gamma(C)");
  auto loc = locus(p, a, options.groebner);
  const std::size_t n = v.n(), nw = k + n;
  std::vector<std::size_t> loc_map(2 * k), v_map(2 * n);
  for (std::size_t j = 0; j < k; ++j) {
    loc_map[j] = j;
    loc_map[k + j] = nw + j;
  }
  for (std::size_t i = 0; i < n; ++i) {
    v_map[i] = k + i;
    v_map[n + i] = nw + k + i;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : loc.ideal().generators()) gens.push_back(g.remap(2 * nw, loc_map, MonomialOrder::grevlex()));
  for (const auto& g : v.ideal().generators()) gens.push_back(g.remap(2 * nw, v_map, MonomialOrder::grevlex()));
  geometry::GSubvariety w(nw, gens, v.irreducible(), options.groebner);
  return geometry::is_strongly_rotund(w, options);
}

}  // namespace gwb::config
