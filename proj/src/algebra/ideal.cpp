#include "gwb/algebra/ideal.hpp"

#include <algorithm>
#include <functional>

#include "gwb/error.hpp"

namespace gwb::algebra {

IdealBasis::IdealBasis(std::vector<std::string> vars, std::vector<Polynomial> generators,
                       MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {
  for (auto& g : generators) {
    if (g.nvars() != vars_.size())
      throw Error(ErrorCode::InvalidArgument, "generator does not match the variable context");
    if (!g.is_zero()) generators_.push_back(g.with_order(order_));
  }
}

const std::vector<Polynomial>& IdealBasis::groebner() const {
  if (!groebner_) throw Error(ErrorCode::InvalidArgument, "Groebner basis not computed");
  return *groebner_;
}

IdealBasis IdealBasis::with_groebner(std::vector<Polynomial> basis) const {
  IdealBasis copy = *this;
  copy.groebner_ = std::move(basis);
  return copy;
}

std::optional<std::size_t> IdealBasis::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

namespace {

class StepCounter {
 public:
  explicit StepCounter(std::size_t budget) : budget_(budget) {}
  void tick() {
    if (++steps_ > budget_)
      throw Error(ErrorCode::ResourceExhausted,
                  "Groebner step budget of " + std::to_string(budget_) + " exhausted");
  }

 private:
  std::size_t budget_;
  std::size_t steps_ = 0;
};

Polynomial reduce_full(const Polynomial& f, std::span<const Polynomial* const> basis,
                       StepCounter* counter) {
  Polynomial p = f;
  Polynomial r(f.nvars(), f.order());
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.lead_term();
    const Polynomial* divisor = nullptr;
    for (const Polynomial* g : basis) {
      if (g->lead_monomial().divides(lt.monomial)) {
        divisor = g;
        break;
      }
    }
    if (divisor) {
      if (counter) counter->tick();
      GaussRat c = lt.coef / divisor->lead_coef();
      Monomial m = lt.monomial / divisor->lead_monomial();
      p = p.sub_mul(c, m, *divisor);
    } else {
      remainder.push_back(lt);
      p -= Polynomial::monomial(lt.monomial, lt.coef, p.order());
    }
  }
  return Polynomial::from_terms(f.nvars(), std::move(remainder), f.order());
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
  Polynomial a = f.mul_term(g.lead_coef(), l / f.lead_monomial());
  Polynomial b = g.mul_term(f.lead_coef(), l / g.lead_monomial());
  return a - b;
}

class Buchberger {
 public:
  Buchberger(MonomialOrder order, const GroebnerOptions& options)
      : order_(order), counter_(options.step_budget) {}

  std::vector<Polynomial> run(std::span<const Polynomial> input) {
    std::vector<Polynomial> gens;
    for (const auto& g : input)
      if (!g.is_zero()) gens.push_back(g.with_order(order_).monic());
    // Smaller generators first keeps the pair queue short.
    std::stable_sort(gens.begin(), gens.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    for (auto& g : gens) {
      Polynomial r = reduce_against_active(g);
      if (r.is_zero()) continue;
      if (r.is_constant()) return {Polynomial::constant(r.nvars(), GaussRat(1), order_)};
      insert(r.monic(), r.total_degree());
    }
    while (!pairs_.empty()) {
      auto best = select_pair();
      CriticalPair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial s = s_polynomial(store_[pair.i], store_[pair.j], pair.lcm);
      counter_.tick();
      Polynomial r = reduce_against_active(s);
      if (r.is_zero()) continue;
      if (r.is_constant()) return {Polynomial::constant(r.nvars(), GaussRat(1), order_)};
      insert(r.monic(), pair.sugar);
    }
    return finalize();
  }

 private:
  MonomialOrder order_;
  StepCounter counter_;
  std::vector<Polynomial> store_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;

  Polynomial reduce_against_active(const Polynomial& f) {
    std::vector<const Polynomial*> basis;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) basis.push_back(&store_[k]);
    return reduce_full(f, basis, &counter_);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (order_.kind != MonomialOrder::Kind::Lex && a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (order_.compare(a.lcm, b.lcm) < 0) best = k;
    }
    return best;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    return std::max(sugar_[i] + l.degree() - store_[i].lead_monomial().degree(),
                    sugar_[j] + l.degree() - store_[j].lead_monomial().degree());
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(Polynomial h, int sugar) {
    std::size_t hi = store_.size();
    store_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = store_[hi].lead_monomial();

    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = lcm(lh, store_[g].lead_monomial());
      candidates.push_back({g, hi, l, pair_sugar(g, hi, l)});
    }
    // Chain criterion among the new pairs.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& c = candidates[a];
      if (coprime(lh, store_[c.i].lead_monomial())) {
        kept.push_back(c);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
        if (b == a) continue;
        const auto& d = candidates[b];
        if (d.lcm.divides(c.lcm)) {
          // Equal lcms: keep only the first occurrence.
          if (d.lcm == c.lcm) redundant = b < a;
          else redundant = true;
        }
      }
      if (!redundant) kept.push_back(c);
    }
    // Product criterion.
    std::vector<CriticalPair> fresh;
    for (auto& c : kept)
      if (!coprime(lh, store_[c.i].lead_monomial())) fresh.push_back(std::move(c));

    // Prune old pairs made redundant by h.
    std::vector<CriticalPair> old;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(store_[p.i].lead_monomial(), lh) == p.lcm) &&
                  !(lcm(store_[p.j].lead_monomial(), lh) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& c : fresh) pairs_.push_back(std::move(c));

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(store_[g].lead_monomial())) active_[g] = false;
  }

  std::vector<Polynomial> finalize() {
    std::vector<Polynomial> basis;
    for (std::size_t k = 0; k < store_.size(); ++k)
      if (active_[k]) basis.push_back(store_[k]);
    std::sort(basis.begin(), basis.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (auto& g : basis) {
      bool divisible = std::any_of(minimal.begin(), minimal.end(), [&g](const Polynomial& m) {
        return m.lead_monomial().divides(g.lead_monomial());
      });
      if (!divisible) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m)
        if (m != k) others.push_back(&minimal[m]);
      const Term& lt = minimal[k].lead_term();
      Polynomial tail = minimal[k] - Polynomial::monomial(lt.monomial, lt.coef, order_);
      Polynomial r = reduce_full(tail, others, &counter_);
      reduced.push_back((r + Polynomial::monomial(lt.monomial, lt.coef, order_)).monic());
    }
    return reduced;
  }
};

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> keep) {
  std::vector<bool> kept(n, false);
  for (auto k : keep) {
    if (k >= n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!kept[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       MonomialOrder order, const GroebnerOptions& options) {
  return Buchberger(order, options).run(generators);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  if (basis.empty()) return f;
  Polynomial g = f.with_order(basis.front().order());
  std::vector<const Polynomial*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  return reduce_full(g, ptrs, nullptr);
}

IdealBasis buchberger(const IdealBasis& ideal, const GroebnerOptions& options) {
  if (ideal.has_groebner()) return ideal;
  return ideal.with_groebner(groebner_basis(ideal.generators(), ideal.order(), options));
}

bool is_unit_ideal(std::span<const Polynomial> groebner) {
  return groebner.size() == 1 && groebner[0].is_constant() && !groebner[0].is_zero();
}

bool is_member(const Polynomial& f, const IdealBasis& ideal, const GroebnerOptions& options) {
  IdealBasis g = buchberger(ideal, options);
  return normal_form(f, g.groebner()).is_zero();
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b, const GroebnerOptions& options) {
  if (a.nvars() != b.nvars()) return false;
  IdealBasis ga = buchberger(a, options);
  IdealBasis gb = buchberger(b, options);
  for (const auto& f : a.generators())
    if (!normal_form(f, gb.groebner()).is_zero()) return false;
  for (const auto& f : b.generators())
    if (!normal_form(f, ga.groebner()).is_zero()) return false;
  return true;
}

IdealBasis eliminate(const IdealBasis& ideal, std::span<const std::size_t> keep,
                     const GroebnerOptions& options) {
  const std::size_t n = ideal.nvars();
  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  keep_sorted.erase(std::unique(keep_sorted.begin(), keep_sorted.end()), keep_sorted.end());
  std::vector<std::size_t> dropped = complement(n, keep_sorted);

  // Eliminated variables occupy the leading block.
  std::vector<std::size_t> to_new(n);
  for (std::size_t k = 0; k < dropped.size(); ++k) to_new[dropped[k]] = k;
  for (std::size_t k = 0; k < keep_sorted.size(); ++k) to_new[keep_sorted[k]] = dropped.size() + k;
  MonomialOrder block = MonomialOrder::elimination(dropped.size());

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(n, to_new, block));
  std::vector<Polynomial> gb = groebner_basis(gens, block, options);

  std::vector<std::size_t> back(n, n);
  for (std::size_t k = 0; k < keep_sorted.size(); ++k) back[dropped.size() + k] = k;
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    auto s = g.support();
    bool only_kept = true;
    for (std::size_t v = 0; v < dropped.size(); ++v)
      if (s[v]) only_kept = false;
    if (only_kept) kept.push_back(g.remap(keep_sorted.size(), back, MonomialOrder::grevlex()));
  }
  std::vector<std::string> names;
  for (auto k : keep_sorted) names.push_back(ideal.vars()[k]);
  IdealBasis result(names, kept, MonomialOrder::grevlex());
  return result.with_groebner(std::move(kept));
}

IdealBasis eliminate(const IdealBasis& ideal, std::span<const std::string> keep,
                     const GroebnerOptions& options) {
  std::vector<std::size_t> idx;
  for (const auto& name : keep) {
    auto i = ideal.index_of(name);
    if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable " + name);
    idx.push_back(*i);
  }
  return eliminate(ideal, idx, options);
}

int dimension_from_leading_monomials(std::span<const Polynomial> groebner, std::size_t nvars) {
  if (is_unit_ideal(groebner)) return -1;
  std::vector<std::uint64_t> masks;
  for (const auto& g : groebner) {
    std::uint64_t m = 0;
    for (auto v : g.lead_monomial().support()) m |= (std::uint64_t{1} << v);
    masks.push_back(m);
  }
  if (nvars > 40) throw Error(ErrorCode::ResourceExhausted, "too many variables for dimension");
  int best = 0;
  // A set S is independent when no leading monomial is supported inside S.
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t v,
                                                                    std::uint64_t set, int size) {
    if (size + static_cast<int>(nvars - v) <= best) return;
    if (v == nvars) {
      best = std::max(best, size);
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << v);
    bool ok = std::none_of(masks.begin(), masks.end(),
                           [with](std::uint64_t m) { return (m & ~with) == 0; });
    if (ok) search(v + 1, with, size + 1);
    search(v + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

int ideal_dimension(const IdealBasis& ideal, const GroebnerOptions& options) {
  IdealBasis g = ideal.has_groebner() ? ideal
                                      : IdealBasis(ideal.vars(), ideal.generators(),
                                                   MonomialOrder::grevlex());
  g = buchberger(g, options);
  return dimension_from_leading_monomials(g.groebner(), ideal.nvars());
}

IdealBasis saturate_units(const IdealBasis& ideal, std::span<const std::size_t> unit_vars,
                          const GroebnerOptions& options) {
  const std::size_t n = ideal.nvars();
  const std::size_t total = n + unit_vars.size();
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(total, shift, MonomialOrder::grevlex()));
  std::vector<std::string> names = ideal.vars();
  for (std::size_t k = 0; k < unit_vars.size(); ++k) {
    Polynomial yz = Polynomial::variable(total, unit_vars[k]) * Polynomial::variable(total, n + k);
    gens.push_back(yz - Polynomial::constant(total, GaussRat(1)));
    names.push_back("__inv" + std::to_string(k));
  }
  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  IdealBasis extended(names, gens);
  return eliminate(extended, keep, options);
}

}  // namespace gwb::algebra
