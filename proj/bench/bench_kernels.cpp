// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "gwb/algebra/parse.hpp"
#include "gwb/config/gamma.hpp"
#include "gwb/geometry/rotundity.hpp"
#include "gwb/witness/witness.hpp"

using namespace gwb;

namespace {

geometry::GSubvariety variety(std::size_t n, std::initializer_list<const char*> gens) {
  auto names = geometry::GSubvariety::coordinate_names(n);
  std::vector<algebra::Polynomial> ps;
  for (auto g : gens) ps.push_back(algebra::parse_polynomial(g, names));
  return geometry::GSubvariety(n, ps, true);
}

void rotundity(benchmark::State& state, bool parallel) {
  auto v = variety(2, {"y1 - x1 - x2", "y2 - x1*x2 - 1"});
  geometry::RotundityOptions o;
  o.bound = state.range(0);
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(geometry::is_rotund(v, o));
}

config::GammaPresentation presentation() {
  std::vector<std::string> labels = {"a", "b", "c", "d"};
  auto names = config::GammaPresentation::coordinate_names(labels);
  std::vector<algebra::Polynomial> rels = {algebra::parse_polynomial("c_x - a_x - b_x", names),
                                           algebra::parse_polynomial("d_y - a_y*c_y", names)};
  std::vector<algebra::RatRow> gamma;
  for (std::size_t i = 0; i < 4; ++i) {
    algebra::RatRow r(4, algebra::Rat(0));
    r[i] = 1;
    gamma.push_back(r);
  }
  return config::GammaPresentation(labels, std::vector<bool>(4, false), rels, gamma, {}, 24);
}

void closed_search(benchmark::State& state, bool parallel) {
  auto p = presentation();
  config::ClosedOptions o;
  o.rank_bound = 1;
  o.comb_bound = state.range(0);
  o.max_tuples = 1000000;
  o.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(config::is_rel_gamma_closed(p, {0}, o));
}

void witness_search(benchmark::State& state, bool parallel) {
  auto v = variety(2, {"y1 - x1 - x2", "y2 - x1*x2 - 1"});
  config::HSpec h{config::HSpec::Kind::LatticeExp, {"1", "2*pi*i"}, ""};
  witness::WitnessOptions o;
  o.sampling.parallel = parallel;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(witness::find_witness(v, h, seed++, o));
}

}  // namespace

BENCHMARK_CAPTURE(rotundity, serial, false)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(rotundity, openmp, true)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closed_search, serial, false)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closed_search, openmp, true)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(witness_search, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(witness_search, openmp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
