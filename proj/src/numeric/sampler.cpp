#include "gwb/numeric/sampler.hpp"

#include <cmath>
#include <exception>
#include <random>

#include "gwb/error.hpp"

namespace gwb::numeric {

namespace {

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

cd random_complex(std::mt19937_64& rng, double radius) {
  double re = (2 * unit_double(rng) - 1) * radius;
  double im = (2 * unit_double(rng) - 1) * radius;
  return {re, im};
}

bool all_finite(const CVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

struct Slice {
  CMat a;
  CVec b;
};

Slice make_slice(std::size_t dim, std::size_t nvars, std::uint64_t seed, int slicing) {
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(slicing)));
  Slice s{CMat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(nvars)),
          CVec(static_cast<Eigen::Index>(dim))};
  for (Eigen::Index i = 0; i < s.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.a.cols(); ++j) s.a(i, j) = random_complex(rng, 1.0);
    s.b[i] = random_complex(rng, 1.0);
  }
  return s;
}

enum class Outcome { Diverged, Singular, Rejected, Accepted };

struct Attempt {
  Outcome outcome = Outcome::Diverged;
  std::optional<SamplePoint> point;
};

Attempt try_start(const PolySystem& system, std::size_t dim, std::span<const std::size_t> units,
                  const Slice& slice, std::uint64_t seed, int slicing, int start,
                  const SampleOptions& options, const SampleFilter& accept) {
  const auto nv = static_cast<Eigen::Index>(system.nvars());
  const auto ns = static_cast<Eigen::Index>(system.size());
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(slicing),
                               static_cast<std::uint64_t>(start) + 1));
  CVec x0(nv);
  for (Eigen::Index i = 0; i < nv; ++i) x0[i] = random_complex(rng, options.start_radius);

  auto f = [&](const CVec& x) {
    CVec out(ns + slice.a.rows());
    out.head(ns) = system.evaluate(x);
    out.tail(slice.a.rows()) = slice.a * x - slice.b;
    return out;
  };
  auto jac = [&](const CVec& x) {
    CMat out(ns + slice.a.rows(), nv);
    out.topRows(ns) = system.jacobian(x);
    out.bottomRows(slice.a.rows()) = slice.a;
    return out;
  };
  NewtonResult r = gauss_newton(f, jac, x0, options.max_iterations, options.tol, 1.0);
  if (!r.converged) return {};
  for (auto u : units)
    if (std::abs(r.point[static_cast<Eigen::Index>(u)]) < 1e-6) return {};
  const std::size_t codim = system.nvars() - dim;
  if (numerical_rank(system.jacobian(r.point), options.rank_tol) != codim) return {Outcome::Singular, {}};
  SamplePoint p{r.point, slice.a, slice.b, slicing, start, r.residual, r.iterations};
  if (accept && !accept(p)) return {Outcome::Rejected, {}};
  return {Outcome::Accepted, p};
}

void record(SampleStats* stats, const Attempt& a) {
  if (!stats) return;
  ++stats->attempts;
  if (a.outcome != Outcome::Diverged) ++stats->converged;
  if (a.outcome == Outcome::Singular) ++stats->singular;
  if (a.outcome == Outcome::Rejected) ++stats->rejected;
}

}  // namespace

NewtonResult gauss_newton(const std::function<CVec(const CVec&)>& f,
                          const std::function<CMat(const CVec&)>& jac, CVec start,
                          int max_iterations, double tol, double step_cap) {
  NewtonResult r;
  r.point = std::move(start);
  for (int it = 0; it < max_iterations; ++it) {
    CVec fx = f(r.point);
    if (!all_finite(fx)) return r;
    if (fx.cwiseAbs().maxCoeff() == 0.0) break;
    CMat j = jac(r.point);
    CVec dx = j.completeOrthogonalDecomposition().solve(-fx);
    if (!all_finite(dx)) return r;
    double step = dx.norm();
    double cap = step_cap * (1.0 + r.point.norm());
    if (step > cap) dx *= cap / step;
    r.point += dx;
    r.iterations = it + 1;
    if (step <= 1e-15 * (1.0 + r.point.norm())) break;
  }
  CVec fx = f(r.point);
  if (!all_finite(fx) || !all_finite(r.point)) return r;
  r.residual = fx.size() ? fx.cwiseAbs().maxCoeff() : 0.0;
  r.converged = r.residual < tol;
  return r;
}

std::optional<SamplePoint> sample_regular_point(const PolySystem& system, std::size_t dim,
                                                std::span<const std::size_t> units,
                                                std::uint64_t seed, const SampleOptions& options,
                                                const SampleFilter& accept, SampleStats* stats) {
  if (dim > system.nvars()) throw Error(ErrorCode::InvalidArgument, "slice dimension exceeds ambient");
  if (stats) *stats = {};
  for (int s = 0; s < options.slicings; ++s) {
    Slice slice = make_slice(dim, system.nvars(), seed, s);
    if (!options.parallel) {
      for (int t = 0; t < options.starts; ++t) {
        Attempt a = try_start(system, dim, units, slice, seed, s, t, options, accept);
        record(stats, a);
        if (a.point) return a.point;
      }
      continue;
    }
    std::vector<Attempt> found(static_cast<std::size_t>(options.starts));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(options.starts));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < options.starts; ++t) {
      try {
        found[static_cast<std::size_t>(t)] = try_start(system, dim, units, slice, seed, s, t, options, accept);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    }
    // Stats count the attempts a serial run would have made.
    for (std::size_t t = 0; t < found.size(); ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      record(stats, found[t]);
      if (found[t].point) return found[t].point;
    }
  }
  return std::nullopt;
}

RefinedPoint refine_extended(const PolySystem& system, const SamplePoint& sample, int iterations) {
  const std::size_t nv = system.nvars();
  const std::size_t codim = nv - static_cast<std::size_t>(sample.slice_a.rows());
  CMat jac = system.jacobian(sample.point);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < system.size() && rows.size() < codim; ++r) {
    CMat trial(static_cast<Eigen::Index>(rows.size() + 1), jac.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) trial.row(static_cast<Eigen::Index>(k)) = jac.row(static_cast<Eigen::Index>(rows[k]));
    trial.row(static_cast<Eigen::Index>(rows.size())) = jac.row(static_cast<Eigen::Index>(r));
    if (numerical_rank(trial, 1e-7) == rows.size() + 1) rows.push_back(r);
  }
  if (rows.size() != codim) throw Error(ErrorCode::SamplingFailed, "sample is not a regular point");

  std::vector<BigComplex> x;
  for (Eigen::Index i = 0; i < sample.point.size(); ++i) x.emplace_back(sample.point[i]);
  const Real stop = boost::multiprecision::pow(Real(10), -(kMaxDigits + 2));
  for (int it = 0; it < iterations; ++it) {
    std::vector<BigComplex> f = system.evaluate_rows(x, rows);
    auto j = system.jacobian(x, rows);
    for (Eigen::Index s = 0; s < sample.slice_a.rows(); ++s) {
      BigComplex v = -BigComplex(sample.slice_b[s]);
      std::vector<BigComplex> jr;
      for (std::size_t c = 0; c < nv; ++c) {
        BigComplex a(sample.slice_a(s, static_cast<Eigen::Index>(c)));
        v += a * x[c];
        jr.push_back(a);
      }
      f.push_back(v);
      j.push_back(std::move(jr));
    }
    for (auto& v : f) v = -v;
    auto dx = solve_big(std::move(j), std::move(f));
    Real step = 0;
    for (std::size_t c = 0; c < nv; ++c) {
      x[c] += dx[c];
      step = std::max(step, abs(dx[c]));
    }
    if (step < stop) break;
  }
  RefinedPoint out{x, Real(0)};
  for (const auto& v : system.evaluate(x)) out.residual = std::max(out.residual, abs(v));
  return out;
}

}  // namespace gwb::numeric
