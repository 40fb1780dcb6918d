#include "splitorder/fuzz.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "splitorder/correspondence.hpp"
#include "splitorder/error.hpp"
#include "splitorder/local_field.hpp"
#include "splitorder/polytope.hpp"

namespace splitorder {

void FuzzConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::Parse, "trial count must be at least 1");
  if (min_entry > max_entry) throw Error(ErrorCode::Parse, "entry range is empty");
  if (min_n < 2 || max_n < min_n || max_n > 6) throw Error(ErrorCode::Parse, "n range must satisfy 2 <= n <= 6");
  require_prime(prime);
}

ExponentMatrix sample_exponent_matrix(std::size_t n, Exponent lo, Exponent hi, Rng& rng, std::size_t kind) {
  if (kind % 3 == 2) {
    const auto count = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<ApartmentVertex> vs;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Exponent> m(n, 0);
      for (std::size_t i = 1; i < n; ++i) m[i] = rng.uniform(-4, 4);
      vs.emplace_back(std::move(m));
    }
    return intersect_maximal(vs);
  }
  ExponentMatrixBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) b.at(i, j) = rng.uniform(lo, hi);
    }
  }
  auto nu = b.build();
  if (kind % 3 == 1 && has_containing_maximal(nu)) return order_hull(nu);
  return nu;
}

namespace {

using Check = std::function<std::optional<std::string>(const ExponentMatrix&)>;

std::string show(const ExponentMatrix& nu) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < nu.size(); ++i) {
    s << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < nu.size(); ++j) s << (j ? "," : "") << nu(i, j);
    s << ']';
  }
  s << ']';
  return s.str();
}

std::optional<std::string> check_order_iff_reduced(const ExponentMatrix& nu) {
  const bool order = is_order(nu), reduced = is_reduced(nu);
  if (order == reduced) return std::nullopt;
  return std::string("is_order=") + (order ? "true" : "false") + " but is_reduced=" + (reduced ? "true" : "false");
}

std::optional<std::string> check_hull(const ExponentMatrix& nu) {
  const bool feasible = has_containing_maximal(nu);
  if (!feasible) {
    if (is_order(nu)) return "order without a containing maximal order";
    if (!is_empty(polytope_of(nu))) return "infeasible exponents but nonempty polytope";
    return std::nullopt;
  }
  const auto hull = order_hull(nu);
  if (!hull.dominated_by(nu)) return "hull exceeds input";
  if (!is_order(hull)) return "hull is not an order";
  if (order_hull(hull) != hull) return "hull is not idempotent";
  if (is_order(nu) != (hull == nu)) return "fixed-point characterization fails";
  if (enumerate_lattice_points(polytope_of(nu)) != enumerate_lattice_points(polytope_of(hull))) {
    return "hull changes the lattice points";
  }
  return std::nullopt;
}

std::optional<std::string> check_roundtrip(const ExponentMatrix& nu) {
  if (!has_containing_maximal(nu)) return std::nullopt;
  const auto r = verify_roundtrip(nu);
  if (!r.hull_recovered) return "intersection over C(hull) differs from hull";
  if (!r.reduced_is_fixed) return "reduced input not fixed by the round trip";
  return std::nullopt;
}

std::optional<std::string> check_max_difference(const ExponentMatrix& nu) {
  const auto poly = polytope_of(nu);
  const auto pts = enumerate_lattice_points(poly);
  if (pts.empty() != is_empty(poly)) return "enumeration and feasibility disagree";
  for (const auto& p : pts) {
    if (!poly.contains(p)) return "enumerated point outside the polytope";
  }
  if (pts.empty()) return std::nullopt;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (std::size_t j = 0; j < nu.size(); ++j) {
      Exponent best = pts.front()[i] - pts.front()[j];
      for (const auto& p : pts) best = std::max(best, p[i] - p[j]);
      if (best != max_difference(poly, i, j)) return "max_difference disagrees with enumeration";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_hijikata_n2(const ExponentMatrix& nu) {
  if (nu.size() != 2) return std::nullopt;
  if (is_order(nu) != (nu(0, 1) + nu(1, 0) >= 0)) return "n = 2 order criterion fails";
  return std::nullopt;
}

std::optional<std::string> check_vertex_set(std::size_t n, Rng& rng) {
  const auto count = static_cast<std::size_t>(rng.uniform(1, 6));
  std::vector<ApartmentVertex> vs;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Exponent> m(n, 0);
    for (std::size_t i = 1; i < n; ++i) m[i] = rng.uniform(-4, 4);
    vs.emplace_back(std::move(m));
  }
  const auto mu = intersect_maximal(vs);
  if (!is_order(mu)) return "intersection of maximal orders is not an order";
  const auto containing = maximal_orders_containing(mu);
  const std::set<ApartmentVertex> found(containing.begin(), containing.end());
  for (const auto& v : vs) {
    if (!found.contains(v)) return "a generating vertex is missing from C(mu)";
  }
  if (intersect_maximal(containing) != mu) return "intersection over C(mu) differs from mu";
  auto more = vs;
  std::vector<Exponent> extra(n, 0);
  for (std::size_t i = 1; i < n; ++i) extra[i] = rng.uniform(-4, 4);
  more.emplace_back(std::move(extra));
  if (!mu.dominated_by(intersect_maximal(more))) return "adding a vertex lowered an exponent";
  return std::nullopt;
}

std::optional<std::string> check_ring_closure(const ExponentMatrix& nu, std::size_t trials, std::uint64_t seed,
                                              unsigned long prime) {
  const auto r = ring_closure_check(nu, trials, seed, prime);
  if (is_order(nu)) {
    if (!r.closed()) return "sampled product left an order";
    return std::nullopt;
  }
  if (r.closed()) return "no witness for a non-order";
  const auto& w = *r.witness;
  if (!in_split_order(w.a, nu) || !in_split_order(w.b, nu) || in_split_order(w.a * w.b, nu)) {
    return "witness pair does not violate closure";
  }
  return std::nullopt;
}

}  // namespace

FuzzSummary run_fuzz(const FuzzConfig& config) {
  config.validate();
  FuzzSummary summary;
  const Rng root(config.seed);

  const std::vector<std::pair<std::string, Check>> matrix_checks{
      {"order_iff_reduced", check_order_iff_reduced},
      {"hull", check_hull},
      {"roundtrip", check_roundtrip},
      {"max_difference", check_max_difference},
      {"hijikata_n2", check_hijikata_n2},
  };

  auto record = [&](const std::string& name, std::size_t trial, const std::string& detail,
                    std::optional<ExponentMatrix> nu, const Check* check) {
    if (nu && check) {
      nu = shrink_counterexample(*nu, [&](const ExponentMatrix& c) { return (*check)(c).has_value(); });
    }
    summary.failures.push_back({name, trial, detail, std::move(nu)});
  };

  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng = root.derive(t);
    const auto n = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(config.min_n), static_cast<std::int64_t>(config.max_n)));
    const auto nu = sample_exponent_matrix(n, config.min_entry, config.max_entry, rng, t);
    ++summary.trials;

    for (const auto& [name, check] : matrix_checks) {
      ++summary.checks_run[name];
      try {
        if (auto bad = check(nu)) record(name, t, *bad + " for " + show(nu), nu, &check);
      } catch (const Error& e) {
        record(name, t, std::string(e.what()) + " for " + show(nu), nu, nullptr);
      }
    }

    ++summary.checks_run["vertex_set"];
    if (auto bad = check_vertex_set(n, rng)) record("vertex_set", t, *bad, std::nullopt, nullptr);

    ++summary.checks_run["ring_closure"];
    const std::uint64_t closure_seed = rng.next();
    const Check closure = [&](const ExponentMatrix& m) {
      return check_ring_closure(m, config.closure_trials, closure_seed, config.prime);
    };
    if (auto bad = closure(nu)) record("ring_closure", t, *bad + " for " + show(nu), nu, &closure);

    ++summary.checks_run["rejects_nonzero_diagonal"];
    auto rows = nu.rows();
    const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    rows[d][d] = rng.coin() ? 1 : -1;
    try {
      ExponentMatrix bad(rows);
      record("rejects_nonzero_diagonal", t, "constructed " + show(bad), std::nullopt, nullptr);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonZeroDiagonal) {
        record("rejects_nonzero_diagonal", t, e.what(), std::nullopt, nullptr);
      }
    }
  }

  // Exhaustive n = 2 sweep over the configured entry range.
  for (Exponent a = config.min_entry; a <= config.max_entry; ++a) {
    for (Exponent b = config.min_entry; b <= config.max_entry; ++b) {
      ++summary.checks_run["hijikata_sweep"];
      const ExponentMatrix nu({{0, a}, {b, 0}});
      const bool expect = a + b >= 0;
      if (is_order(nu) != expect || is_reduced(nu) != expect) {
        record("hijikata_sweep", 0, "criterion fails for " + show(nu), nu, nullptr);
      }
    }
  }
  return summary;
}

}  // namespace splitorder
