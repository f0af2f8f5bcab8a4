// Copyright 2026 The gmsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmsforge/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmsforge {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// One recipe per GMS pulse pair.
std::vector<CouplingProfile> split_terms(const CouplingProfile& recipe, int offset) {
  if (std::holds_alternative<ExponentialCoupling>(recipe)) return {recipe};
  const auto* law = std::get_if<PowerLawCoupling>(&recipe);
  require(law != nullptr, "recipe must be exponential or power_law, got " +
                              profile_kind_name(recipe));
  require(law->offset == offset,
          "power_law recipe here needs offset " + std::to_string(offset));
  check_params(*law);
  std::vector<CouplingProfile> out;
  for (const PowerLawTerm& t : law->terms) out.push_back(PowerLawCoupling{{t}, offset});
  return out;
}

// Star layer: hub couples to targets[i] with angle(recipe, dist[i]); every
// other pair of `members` is cancelled by the subset pulse.
void append_star_layer(
    Circuit& c, QubitId hub, const std::vector<QubitId>& targets,
    const std::vector<std::size_t>& target_pos, std::size_t hub_pos,
    const std::vector<CouplingProfile>& terms, const CouplingProfile& recipe,
    bool hadamard_hub_first) {
  std::vector<QubitId> members = targets;
  members.push_back(hub);
  std::vector<std::size_t> pos = target_pos;
  pos.push_back(hub_pos);
  auto distance = [&](std::size_t i, std::size_t j) {
    return pos[i] > pos[j] ? pos[i] - pos[j] : pos[j] - pos[i];
  };

  for (QubitId q : targets) c.append(Gate::h(q));
  if (hadamard_hub_first) c.append(Gate::h(hub));
  for (const CouplingProfile& term : terms) {
    PerPairCoupling full, rest;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Angle a = recipe_angle(term, distance(i, j));
        const auto key = std::minmax(members[i], members[j]);
        full.table[{key.first, key.second}] = -0.5 * a;
        if (i + 1 < members.size() && j + 1 < members.size())
          rest.table[{key.first, key.second}] = 0.5 * a;
      }
    }
    c.append(Gate::gms(members, full));
    if (targets.size() >= 2) c.append(Gate::gms(targets, rest));
  }
  for (QubitId q : members) c.append(Gate::h(q));

  Angle total = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Angle phi = recipe_angle(recipe, distance(i, members.size() - 1));
    c.append(Gate::rz(targets[i], phi / 2));
    total += phi;
  }
  c.append(Gate::rz(hub, total / 2));
  c.append(Gate::phase(total / 4));
}

std::vector<QubitId> b_order(std::size_t n) {
  std::vector<QubitId> lb(n);
  for (std::size_t i = 0; i < n; ++i) lb[i] = 2 * n - 1 - i;
  return lb;
}

double snap(double v) { return std::round(v * 1e12) / 1e12; }

// Coordinates (b_1..b_m, p_1..p_m) as grid indices.
struct Point {
  std::vector<std::size_t> idx;
};

// Grid term t is (bs[t / ps.size()], ps[t % ps.size()]); increasing t is
// increasing (b, p).
struct TermGrid {
  std::vector<double> bs;
  std::vector<double> ps;
  std::size_t size() const { return bs.size() * ps.size(); }
  PowerLawTerm term(std::size_t t) const { return {bs[t / ps.size()], ps[t % ps.size()]}; }
};

struct Candidate {
  double fidelity = -1.0;
  std::vector<double> key;
  std::vector<std::size_t> idx;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.fidelity != b.fidelity) return a.fidelity > b.fidelity;
  return a.key < b.key;
}

PowerLawParams to_params(const std::vector<std::size_t>& idx, const TermGrid& grid) {
  PowerLawParams out;
  out.offset = 0;
  for (std::size_t t : idx) out.terms.push_back(grid.term(t));
  return out;
}

// (b_1..b_m, p_1..p_m)
std::vector<double> key_of(const PowerLawParams& p) {
  std::vector<double> k;
  for (const auto& t : p.terms) k.push_back(t.b);
  for (const auto& t : p.terms) k.push_back(t.p);
  return k;
}

// Branch and bound over nondecreasing term tuples. The objective exponent
// only grows with j, so a tuple is dropped once its partial exponent passes
// the best seen; survivors are scored with fidelity_formula itself.
class TupleSearch {
 public:
  TupleSearch(std::size_t n, std::size_t m, TermGrid grid)
      : n_(n), m_(m), grid_(std::move(grid)) {
    const std::size_t k = grid_.size();
    contrib_.resize(k * n_);
    for (std::size_t t = 0; t < k; ++t) {
      const PowerLawTerm term = grid_.term(t);
      for (std::size_t j = 1; j <= n_; ++j) {
        contrib_[t * n_ + j - 1] = 1.0 / (term.b * std::pow(static_cast<double>(j), term.p));
      }
    }
    for (std::size_t j = 1; j <= n_; ++j) {
      target_.push_back(std::ldexp(1.0, -static_cast<int>(j)));
      weight_.push_back(3.0 * static_cast<double>(n_ - j) / 64.0);
    }
  }

  // Number of tuples with first index `first`.
  std::size_t count(std::size_t first) const {
    const std::size_t rest = grid_.size() - first;
    if (m_ == 1) return 1;
    if (m_ == 2) return rest;
    return rest * (rest + 1) / 2;
  }

  void search(std::size_t first, Candidate& best, double& bound) const {
    std::vector<std::size_t> idx(m_, first);
    descend(1, idx, best, bound);
  }

 private:
  void descend(std::size_t depth, std::vector<std::size_t>& idx, Candidate& best, double& bound) const {
    if (depth == m_) {
      score(idx, best, bound);
      return;
    }
    for (std::size_t t = idx[depth - 1]; t < grid_.size(); ++t) {
      idx[depth] = t;
      descend(depth + 1, idx, best, bound);
    }
  }

  void score(const std::vector<std::size_t>& idx, Candidate& best, double& bound) const {
    const double limit = bound * (1.0 + 1e-9) + 1e-300;
    double e = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      double approx = 0.0;
      for (std::size_t t : idx) approx += contrib_[t * n_ + j];
      const double diff = target_[j] - approx;
      e += weight_[j] * diff * diff;
      if (e > limit) return;
    }
    PowerLawParams params = to_params(idx, grid_);
    Candidate c{fidelity_formula(n_, params), key_of(params), idx};
    if (best.idx.empty() || better(c, best)) {
      best = std::move(c);
      bound = std::min(bound, e);
    }
  }

  std::size_t n_;
  std::size_t m_;
  TermGrid grid_;
  std::vector<double> contrib_;
  std::vector<double> target_;
  std::vector<double> weight_;
};

}  // namespace

const PowerLawParams& check_params(const PowerLawParams& params) {
  require(!params.terms.empty(), "power law needs at least one term");
  require(params.offset == 0 || params.offset == 1, "offset must be 0 or 1");
  for (const PowerLawTerm& t : params.terms) {
    require(std::isfinite(t.b) && std::isfinite(t.p), "power law terms must be finite");
    require(t.b != 0.0, "power law b must be nonzero");
  }
  return params;
}

Angle recipe_angle(const CouplingProfile& recipe, std::size_t d) {
  if (std::holds_alternative<ExponentialCoupling>(recipe)) {
    return kPi / std::ldexp(1.0, static_cast<int>(d));
  }
  const auto* law = std::get_if<PowerLawCoupling>(&recipe);
  require(law != nullptr, "recipe must be exponential or power_law");
  const double base = static_cast<double>(d) + law->offset;
  require(base > 0.0, "power law at zero distance");
  Angle sum = 0.0;
  for (const PowerLawTerm& t : law->terms) sum += kPi / (t.b * std::pow(base, t.p));
  return sum;
}

void append_qft_reference(Circuit& circuit, std::span<const QubitId> order) {
  for (std::size_t k = order.size(); k-- > 0;) {
    circuit.append(Gate::h(order[k]));
    for (std::size_t d = 1; d <= k; ++d) {
      circuit.append(Gate::cp(order[k], order[k - d], kPi / std::ldexp(1.0, static_cast<int>(d))));
    }
  }
}

Circuit qft_reference(std::size_t n) {
  require(n >= 1, "qft_reference needs n >= 1");
  Circuit c(n);
  std::vector<QubitId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  append_qft_reference(c, order);
  return c;
}

void append_qft_gms(
    Circuit& circuit, std::span<const QubitId> order, const CouplingProfile& recipe) {
  require(order.size() >= 2, "qft_gms needs n >= 2");
  const std::vector<CouplingProfile> terms = split_terms(recipe, 0);
  for (std::size_t k = order.size() - 1; k >= 1; --k) {
    std::vector<QubitId> targets(order.begin(), order.begin() + k);
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    // The layer's own Hadamard on the hub cancels against the dressing.
    append_star_layer(circuit, order[k], targets, pos, k, terms, recipe, false);
  }
  circuit.append(Gate::h(order[0]));
}

Circuit qft_gms(std::size_t n, const CouplingProfile& recipe) {
  require(n >= 2, "qft_gms needs n >= 2");
  Circuit c(n);
  std::vector<QubitId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  append_qft_gms(c, order, recipe);
  return c;
}

Circuit qfa_reference(std::size_t n) {
  require(n >= 1, "qfa_reference needs n >= 1");
  Circuit c(2 * n);
  const std::vector<QubitId> lb = b_order(n);
  append_qft_reference(c, lb);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      c.append(Gate::cp(n - 1 - j, lb[i], kPi / std::ldexp(1.0, static_cast<int>(i - j))));
    }
  }
  Circuit qft(2 * n);
  append_qft_reference(qft, lb);
  c.append(inverse(qft));
  return c;
}

Circuit qfa_gms(
    std::size_t n, const CouplingProfile& qft_recipe, const CouplingProfile& adder_recipe) {
  require(n >= 2, "qfa_gms needs n >= 2");
  const std::vector<CouplingProfile> terms = split_terms(adder_recipe, 1);
  split_terms(qft_recipe, 0);
  Circuit c(2 * n);
  const std::vector<QubitId> lb = b_order(n);
  append_qft_gms(c, lb, qft_recipe);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<QubitId> targets(lb.begin() + j, lb.end());
    std::vector<std::size_t> pos;
    for (std::size_t i = j; i < n; ++i) pos.push_back(i);
    // The hub sits at distance 0 from its first target.
    append_star_layer(c, n - 1 - j, targets, pos, j, terms, adder_recipe, true);
  }
  Circuit qft(2 * n);
  append_qft_gms(qft, lb, qft_recipe);
  c.append(inverse(qft));
  return c;
}

Circuit qfa_gms(std::size_t n) {
  return qfa_gms(n, ExponentialCoupling{}, ExponentialCoupling{});
}

double fidelity_formula(std::size_t n, const PowerLawParams& params) {
  require(n >= 2, "fidelity_formula needs n >= 2");
  check_params(params);
  std::vector<PowerLawTerm> terms = params.terms;
  std::sort(terms.begin(), terms.end());
  double exponent = 0.0;
  const std::size_t first = params.offset == 0 ? 1 : 0;
  for (std::size_t j = first; j < first + n; ++j) {
    const double base = static_cast<double>(j + params.offset);
    double approx = 0.0;
    for (const PowerLawTerm& t : terms) approx += 1.0 / (t.b * std::pow(base, t.p));
    const double diff = std::ldexp(1.0, -static_cast<int>(j)) - approx;
    exponent += 3.0 * static_cast<double>(n - j) / 64.0 * diff * diff;
  }
  return std::exp(-kPi * kPi * exponent);
}

std::vector<double> b_grid(const SearchBox& box, double step) {
  require(step > 0.0 && std::isfinite(step), "step must be positive");
  std::vector<double> out;
  const long lo = static_cast<long>(std::ceil(box.b_min / step - 1e-9));
  const long hi = static_cast<long>(std::floor(box.b_max / step + 1e-9));
  for (long k = lo; k <= hi; ++k)
    if (k != 0) out.push_back(snap(static_cast<double>(k) * step));
  return out;
}

std::vector<double> p_grid(const SearchBox& box, double step) {
  require(step > 0.0 && std::isfinite(step), "step must be positive");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double p = box.p_min + static_cast<double>(i) * step;
    if (p > box.p_max + 1e-9) break;
    out.push_back(snap(p));
  }
  return out;
}

double FidelityScan::argmax() const {
  require(!grid.empty(), "empty scan");
  auto best = grid.begin();
  for (auto it = grid.begin(); it != grid.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

FidelityScan fidelity_scan(
    std::size_t n, const PowerLawParams& center, const std::string& axis, double step,
    const SearchBox& box) {
  check_params(center);
  require(axis.size() >= 2 && (axis[0] == 'b' || axis[0] == 'p'), "bad axis '" + axis + "'");
  std::size_t term = 0;
  try {
    term = std::stoul(axis.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad axis '" + axis + "'");
  }
  require(term >= 1 && term <= center.terms.size(), "axis '" + axis + "' out of range");
  const bool is_b = axis[0] == 'b';
  FidelityScan scan{axis, {}, center, n};
  for (double v : is_b ? b_grid(box, step) : p_grid(box, step)) {
    PowerLawParams p = center;
    (is_b ? p.terms[term - 1].b : p.terms[term - 1].p) = v;
    scan.grid.emplace_back(v, fidelity_formula(n, p));
  }
  return scan;
}

OptimizationResult optimize_powerlaw(
    std::size_t n, std::size_t m, double step, const SearchBox& box, Execution exec) {
  require(m >= 1 && m <= 3, "m must be 1, 2 or 3");
  require(n >= 2, "n must be >= 2");
  TermGrid grid{b_grid(box, step), p_grid(box, step)};
  require(grid.size() > 0, "empty search grid");
  const TupleSearch search(n, m, grid);
  const long k = static_cast<long>(grid.size());

  OptimizationResult result;
  Candidate best;
  std::size_t evaluations = 0;
#pragma omp parallel if (exec == Execution::kParallel) reduction(+ : evaluations)
  {
    Candidate local;
    double bound = std::numeric_limits<double>::infinity();
#pragma omp for schedule(dynamic)
    for (long first = 0; first < k; ++first) {
      search.search(static_cast<std::size_t>(first), local, bound);
      evaluations += search.count(static_cast<std::size_t>(first));
    }
#pragma omp critical
    if (!local.idx.empty() && (best.idx.empty() || better(local, best))) best = std::move(local);
  }
  result.evaluations = evaluations;
  result.params = to_params(best.idx, grid);
  result.fidelity = best.fidelity;
  for (const char* kind : {"b", "p"}) {
    for (std::size_t i = 1; i <= m; ++i) {
      result.scans.push_back(
          fidelity_scan(n, result.params, kind + std::to_string(i), step, box));
    }
  }
  return result;
}

std::size_t aqft_count(std::size_t n, CountMode mode) {
  require(n >= 2, "aqft_count needs n >= 2");
  require(mode.band >= 1, "band must be positive");
  const std::size_t cap = mode.kind == CountMode::Kind::kMixedGms ? std::min<std::size_t>(2, mode.band) : mode.band;
  std::size_t total = 0;
  for (std::size_t len = n - 1; len >= 1; --len) total += std::min(len, cap);
  return total;
}

std::size_t aqfa_count(std::size_t n, CountMode mode) {
  require(n >= 2, "aqfa_count needs n >= 2");
  const std::size_t cap = mode.kind == CountMode::Kind::kMixedGms ? std::min<std::size_t>(2, mode.band) : mode.band;
  std::size_t columns = 0;
  for (std::size_t len = n; len >= 1; --len) columns += std::min(len, cap);
  return 2 * aqft_count(n, mode) + columns;
}

double direct_fidelity(std::size_t n, const PowerLawParams& params) {
  check_params(params);
  require(params.offset == 0, "direct_fidelity needs offset 0");
  const UnitaryMatrix exact = unitary_of(qft_gms(n, ExponentialCoupling{}));
  const UnitaryMatrix approx = unitary_of(qft_gms(n, params));
  return trace_fidelity(exact, approx);
}

}  // namespace gmsforge
