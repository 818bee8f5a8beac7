#pragma once

// Formula-versus-determinant verification harness. A suite is a list of
// named, independent cases run on a bounded worker pool; the report is sorted
// by case name so its text does not depend on scheduling.
//
// Cases are either checks (a disagreement is a failure) or audits (the
// comparison is reported but never fails the run).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/factored.hpp"
#include "kappa/formulas.hpp"
#include "kappa/graph.hpp"
#include "kappa/group.hpp"
#include "kappa/matrix_tree.hpp"
#include "kappa/number_theory.hpp"
#include "kappa/request.hpp"
#include "kappa/spectra.hpp"

namespace kappa::verify {

struct Outcome {
  bool agree = false;
  std::string expected;  // closed form or reference value
  std::string actual;    // determinant oracle
  std::string note;      // optional extra lines
};

struct Case {
  std::string name;
  bool audit = false;
  std::function<Outcome()> run;
};

struct CaseResult {
  std::string name;
  bool audit = false;
  Outcome outcome;
  std::string error;  // exception text; a case that throws never agrees

  bool failed() const { return !audit && (!error.empty() || !outcome.agree); }
};

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  /// Corrupts every closed-form value (times 2) to prove the harness notices.
  bool mutate = false;
  std::size_t property_cases = 200;
};

struct Report {
  std::vector<CaseResult> results;  // sorted by name

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.failed(); }));
  }
  bool ok() const { return failures() == 0; }

  /// Results whose name starts with `prefix`.
  std::vector<const CaseResult*> with_prefix(const std::string& prefix) const {
    std::vector<const CaseResult*> out;
    for (const auto& r : results)
      if (r.name.rfind(prefix, 0) == 0) out.push_back(&r);
    return out;
  }

  std::string render() const {
    std::ostringstream os;
    std::size_t checks = 0;
    std::size_t audits = 0;
    std::size_t audits_agree = 0;
    for (const auto& r : results) {
      std::string tag;
      if (r.audit) {
        ++audits;
        if (r.error.empty() && r.outcome.agree) ++audits_agree;
        tag = !r.error.empty() ? "AUDIT-ERROR " : r.outcome.agree ? "AUDIT-AGREE " : "AUDIT-DIFFER";
      } else {
        ++checks;
        tag = r.failed() ? "FAIL        " : "PASS        ";
      }
      os << tag << ' ' << r.name;
      if (!r.error.empty()) {
        os << "  error: " << r.error << '\n';
        continue;
      }
      os << "  expected=" << r.outcome.expected << "  actual=" << r.outcome.actual << '\n';
      std::istringstream note(r.outcome.note);
      for (std::string line; std::getline(note, line);) os << "    " << line << '\n';
    }
    os << "checks: " << checks << "  failed: " << failures() << "  audits: " << audits << " (agree " << audits_agree
       << ", differ " << audits - audits_agree << ")\n";
    return os.str();
  }
};

inline Report run_cases(std::vector<Case> cases, unsigned jobs) {
  std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < cases.size(); ++i)
    if (cases[i].name == cases[i - 1].name) throw ConsistencyError("verify: duplicate case name " + cases[i].name);

  Report report;
  report.results.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      CaseResult& r = report.results[i];
      r.name = cases[i].name;
      r.audit = cases[i].audit;
      try {
        r.outcome = cases[i].run();
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Helpers shared by the case builders.

namespace detail {

inline std::string pad(std::uint64_t v, int width) {
  std::string s = std::to_string(v);
  return s.size() >= static_cast<std::size_t>(width) ? s : std::string(width - s.size(), '0') + s;
}

inline std::string join_sizes(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

/// Uniform integer in [lo, hi]; plain modulo keeps the stream identical
/// across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

/// Per-case generator: seeded from the suite seed and an FNV-1a hash of the
/// case name, so a case draws the same values whatever thread runs it.
inline std::mt19937_64 case_rng(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

inline SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (draw(rng, 1, 100) <= percent) g.add_edge(u, v);
  return g;
}

inline FactoredNat corrupt(const Options& o, FactoredNat v) { return o.mutate ? v * FactoredNat::of(2) : v; }

/// Matrix-tree count of a power graph, factored, with the n^(m-1) divisibility
/// check for its m universal vertices applied on the way.
inline FactoredNat oracle(const SimpleGraph& g) {
  const BigInt k = kappa_matrix_tree(g);
  const std::size_t n = g.size();
  const std::size_t m = universal_vertices(g).size();
  if (m >= 1 && m < n) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), n, m - 1);
    if (k % d != 0) throw ConsistencyError("n^(m-1) does not divide kappa (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  return FactoredNat::factor(k, default_factor_bound(n));
}

inline FactoredNat group_oracle(const GroupSpec& spec) { return oracle(power_graph(build_group(spec))); }

inline Outcome compare(const FactoredNat& expected, const FactoredNat& actual, std::string note = {}) {
  return {expected == actual, expected.to_string(), actual.to_string(), std::move(note)};
}

/// Formula, determinant and a fixed reference value must all coincide.
inline Outcome compare3(const FactoredNat& formula, const FactoredNat& det, const FactoredNat& reference) {
  Outcome o = compare(formula, det);
  o.agree = o.agree && formula == reference;
  o.note = "reference=" + reference.to_string();
  return o;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Case builders.

/// Known values: Cayley's count, Q8, D8, cyclic p-groups, A5, L2(7) and
/// optionally A6, each by closed form and by determinant.
inline std::vector<Case> known_value_cases(const Options& o, bool include_a6) {
  using detail::pad;
  std::vector<Case> out;
  for (std::uint64_t n = 2; n <= 12; ++n)
    out.push_back({"known/complete/K" + pad(n, 2), false, [o, n] {
                     const FactoredNat det = FactoredNat::factor(kappa_matrix_tree(complete_graph(n)), 1000);
                     return detail::compare(detail::corrupt(o, kappa_cayley(n)), det);
                   }});
  out.push_back({"known/quaternion/Q8", false, [o] {
                   return detail::compare3(detail::corrupt(o, kappa_quaternion(3)),
                                           detail::group_oracle(GroupSpec::quaternion(3)), FactoredNat::prime_power(2, 11));
                 }});
  out.push_back({"known/dihedral/D8", false, [o] {
                   return detail::compare3(detail::corrupt(o, kappa_cyclic(4)), detail::group_oracle(GroupSpec::dihedral(4)),
                                           FactoredNat::prime_power(2, 4));
                 }});
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27}) {
    out.push_back({"known/cyclic/Z" + pad(q, 2), false, [o, q] {
                     const auto [p, m] = *nt::prime_power(q);
                     return detail::compare3(detail::corrupt(o, kappa_cyclic(q)), detail::group_oracle(GroupSpec::cyclic(q)),
                                             FactoredNat::prime_power(p, m * (q - 2)));
                   }});
  }
  struct Known {
    const char* name;
    std::uint64_t p, n;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> value;
  };
  std::vector<Known> known = {
      {"known/psl2/A5", 2, 2, {{3, 10}, {5, 18}}},
      {"known/psl2/L2(7)", 7, 1, {{2, 84}, {3, 28}, {7, 40}}},
  };
  if (include_a6) known.push_back({"known/psl2/A6", 3, 2, {{2, 180}, {3, 40}, {5, 108}}});
  for (const auto& k : known) {
    out.push_back({k.name, false, [o, k] {
                     FactoredNat ref;
                     for (auto [p, e] : k.value) ref *= FactoredNat::prime_power(p, e);
                     return detail::compare3(detail::corrupt(o, kappa_psl2(k.p, k.n)),
                                             detail::group_oracle(GroupSpec::psl2(k.p, k.n)), ref);
                   }});
  }
  return out;
}

/// Exponent-p^2 extraspecial group: the determinant against the clique
/// expression of its power graph (check), and a verdict on the join form
/// K(p) * (p+1)#K(p^2-p) and the two exponents in circulation (audit).
inline std::vector<Case> extraspecial_cases(const Options& o, std::vector<std::uint64_t> primes) {
  std::vector<Case> out;
  for (std::uint64_t p : primes) {
    const std::string base = "extraspecial/p=" + std::to_string(p);
    out.push_back({base + "/structure", false, [o, p] {
                     const ExtraspecialReport r = kappa_extraspecial_exp_p2(p);
                     return detail::compare(detail::corrupt(o, r.actual_structure_value),
                                            detail::group_oracle(GroupSpec::extraspecial_exp_p2(p)),
                                            "expression " + family_expr(GroupSpec::extraspecial_exp_p2(p)).to_string());
                   }});
    out.push_back({base + "/verdict", true, [p] {
                     const ExtraspecialReport r = kappa_extraspecial_exp_p2(p);
                     const FactoredNat det = detail::group_oracle(GroupSpec::extraspecial_exp_p2(p));
                     auto yes_no = [](bool b) { return b ? "matches" : "does not match"; };
                     std::ostringstream note;
                     note << "determinant on " << p * p * p << " vertices: " << det.to_string() << '\n';
                     note << "join form " << published_extraspecial_expr(p).to_string() << ": "
                          << r.published_structure_value.to_string() << " ("
                          << yes_no(r.published_structure_value == det) << " the determinant)\n";
                     note << "power-graph expression " << family_expr(GroupSpec::extraspecial_exp_p2(p)).to_string() << ": "
                          << r.actual_structure_value.to_string() << " (" << yes_no(r.actual_structure_value == det)
                          << " the determinant)\n";
                     note << "exponent 2p^3-p-5 = " << r.statement_exponent << ": "
                          << yes_no(ExtraspecialReport::is_p_power(det, p, r.statement_exponent)) << " the determinant\n";
                     note << "exponent 2p^3-p-4 = " << r.proof_exponent << ": "
                          << yes_no(ExtraspecialReport::is_p_power(det, p, r.proof_exponent)) << " the determinant";
                     return detail::compare(r.published_structure_value, det, note.str());
                   }});
  }
  return out;
}

inline std::vector<Case> heisenberg_cases(const Options& o, std::vector<std::uint64_t> primes) {
  std::vector<Case> out;
  for (std::uint64_t p : primes)
    out.push_back({"heisenberg/p=" + std::to_string(p), false, [o, p] {
                     return detail::compare(detail::corrupt(o, kappa_heisenberg(p)), detail::group_oracle(GroupSpec::heisenberg(p)));
                   }});
  return out;
}

inline std::vector<Case> frobenius_cases(const Options& o, std::vector<std::pair<std::uint64_t, std::uint64_t>> pqs) {
  std::vector<Case> out;
  for (auto [p, q] : pqs)
    out.push_back({"frobenius/" + std::to_string(p) + "x" + detail::pad(q, 2), false, [o, p, q] {
                     return detail::compare(detail::corrupt(o, kappa_frobenius_pq(p, q)),
                                            detail::group_oracle(GroupSpec::frobenius_pq(p, q)));
                   }});
  return out;
}

inline std::vector<Case> quaternion_cases(const Options& o, std::uint64_t max_n) {
  std::vector<Case> out;
  for (std::uint64_t n = 3; n <= max_n; ++n)
    out.push_back({"quaternion/n=" + std::to_string(n), false, [o, n] {
                     return detail::compare(detail::corrupt(o, kappa_quaternion(n)), detail::group_oracle(GroupSpec::quaternion(n)));
                   }});
  return out;
}

inline std::vector<Case> psl2_cases(const Options& o) {
  std::vector<Case> out;
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {5, 1}, {7, 1}, {3, 2}})
    out.push_back({"psl2/q=" + std::to_string(nt::ipow(p, n)), false, [o, p, n] {
                     return detail::compare(detail::corrupt(o, kappa_psl2(p, n)), detail::group_oracle(GroupSpec::psl2(p, n)));
                   }});
  return out;
}

/// kappa_cyclic against the determinant on the power graph of Z_n and the
/// clique-replaced formula on D(n) with phi-sized blocks.
inline std::vector<Case> cyclic_cases(const Options& o, std::uint64_t max_n) {
  std::vector<Case> out;
  for (std::uint64_t n = 1; n <= max_n; ++n)
    out.push_back({"cyclic/n=" + detail::pad(n, 3), false, [o, n] {
                     const FactoredNat formula = detail::corrupt(o, kappa_cyclic(n));
                     Outcome r = detail::compare(formula, detail::group_oracle(GroupSpec::cyclic(n)));
                     const FactoredNat divisor_form = kappa_clique_replaced_formula(cyclic_divisor_spec(n));
                     if (!(divisor_form == formula)) {
                       r.agree = false;
                       r.note = "divisor-graph formula gives " + divisor_form.to_string();
                     }
                     return r;
                   }});
  return out;
}

/// EPO groups: class counts from the table against the family parameters,
/// and the EPO product formula against the determinant.
inline std::vector<Case> epo_cases(const Options& o) {
  const std::vector<GroupSpec> specs = {
      GroupSpec::elementary(2, 2), GroupSpec::elementary(2, 3), GroupSpec::elementary(3, 2), GroupSpec::elementary(3, 3),
      GroupSpec::elementary(5, 2), GroupSpec::heisenberg(3),    GroupSpec::frobenius_pq(2, 3), GroupSpec::frobenius_pq(3, 7),
      GroupSpec::psl2(2, 2),
  };
  std::vector<Case> out;
  for (const auto& spec : specs)
    out.push_back({"epo/" + spec.to_string(), false, [o, spec] {
                     const FiniteGroup g = build_group(spec);
                     const auto counts = epo_class_counts(g);
                     Outcome r = detail::compare(detail::corrupt(o, kappa_epo(counts)), detail::oracle(power_graph(g)));
                     if (counts != family_epo_counts(spec)) {
                       r.agree = false;
                       r.note = "class counts differ from the family parameters";
                     }
                     return r;
                   }});
  return out;
}

/// Power graph of the dihedral group of order 2n has the same count as Z_n.
inline std::vector<Case> dihedral_cases(std::uint64_t max_n) {
  std::vector<Case> out;
  for (std::uint64_t n = 1; n <= max_n; ++n)
    out.push_back({"dihedral/n=" + detail::pad(n, 2), false, [n] {
                     return detail::compare(detail::group_oracle(GroupSpec::cyclic(n)), detail::group_oracle(GroupSpec::dihedral(n)));
                   }});
  return out;
}

namespace detail {

/// All connected labeled graphs on k vertices, keyed by edge mask over the
/// pairs (0,1), (0,2), ..., (k-2,k-1).
inline std::vector<std::pair<std::uint32_t, SimpleGraph>> connected_labeled_graphs(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
  std::vector<std::pair<std::uint32_t, SimpleGraph>> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    SimpleGraph g(k);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1U << i)) g.add_edge(pairs[i].first, pairs[i].second);
    if (is_connected(g)) out.emplace_back(mask, std::move(g));
  }
  return out;
}

inline std::vector<std::vector<std::uint64_t>> size_vectors(std::uint64_t seed, const std::string& name, std::size_t k,
                                                           std::size_t count, std::uint64_t max_size) {
  auto rng = case_rng(seed, name);
  std::vector<std::vector<std::uint64_t>> out(count, std::vector<std::uint64_t>(k));
  for (auto& xs : out)
    for (auto& x : xs) x = draw(rng, 1, max_size);
  return out;
}

}  // namespace detail

/// Clique-replaced graphs over every connected labeled base on k <= max_k
/// vertices: subset-sum formula = quotient S-matrix = determinant.
inline std::vector<Case> triangle_cases(const Options& o, std::size_t max_k, std::size_t vectors = 5) {
  std::vector<Case> out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (auto& [mask, g] : detail::connected_labeled_graphs(k)) {
      const std::string name = "triangle/k=" + std::to_string(k) + "/g=" + detail::pad(mask, 4);
      const auto sizes = detail::size_vectors(o.seed, name, k, vectors, 4);
      out.push_back({name, false, [o, base = g, sizes] {
                       for (const auto& xs : sizes) {
                         const CliqueReplacedSpec spec(base, xs);
                         const FactoredNat formula = detail::corrupt(o, kappa_clique_replaced_formula(spec));
                         const FactoredNat smatrix = kappa_clique_replaced_smatrix(spec);
                         const FactoredNat det = detail::oracle(clique_replaced(spec));
                         if (!(formula == det) || !(smatrix == det)) {
                           Outcome r = detail::compare(formula, det);
                           r.agree = false;
                           r.note = "sizes " + detail::join_sizes(xs) + ": smatrix=" + smatrix.to_string();
                           return r;
                         }
                       }
                       return Outcome{true, std::to_string(sizes.size()) + " size vectors", "all agree", {}};
                     }});
    }
  }
  return out;
}

/// How often the S-matrix with weights taken literally as x_max(p,q) lands on
/// the determinant, over the same instances as the triangle cases.
inline Case smatrix_literal_audit(const Options& o, std::size_t max_k, std::size_t vectors = 5) {
  return {"smatrix/literal-table", true, [o, max_k, vectors] {
            std::size_t total = 0;
            std::size_t agree = 0;
            std::string first_miss;
            for (std::size_t k = 1; k <= max_k; ++k) {
              for (auto& [mask, g] : detail::connected_labeled_graphs(k)) {
                const std::string name = "triangle/k=" + std::to_string(k) + "/g=" + detail::pad(mask, 4);
                for (const auto& xs : detail::size_vectors(o.seed, name, k, vectors, 4)) {
                  const CliqueReplacedSpec spec(g, xs);
                  ++total;
                  const FactoredNat det = FactoredNat::factor(kappa_matrix_tree(clique_replaced(spec)), 1000);
                  bool ok = false;
                  try {
                    ok = kappa_clique_replaced_smatrix(spec, SMatrixConvention::literal_table) == det;
                  } catch (const ConsistencyError&) {
                    ok = false;
                  }
                  if (ok) ++agree;
                  else if (first_miss.empty()) first_miss = name + " sizes " + detail::join_sizes(xs);
                }
              }
            }
            Outcome r{agree == total, std::to_string(total) + " instances", std::to_string(agree) + " agree", {}};
            if (!first_miss.empty()) r.note = "first disagreement: " + first_miss;
            return r;
          }};
}

/// Displayed closed form for clique-replaced paths against the determinant.
inline std::vector<Case> path_audit_cases(const Options& o, std::size_t per_k = 8) {
  std::vector<Case> out;
  for (std::size_t k = 3; k <= 6; ++k) {
    const std::string prefix = "path-audit/k=" + std::to_string(k);
    auto vectors = detail::size_vectors(o.seed, prefix, k, per_k, 5);
    vectors.insert(vectors.begin(), std::vector<std::uint64_t>(k, 1));
    for (std::size_t v = 0; v < vectors.size(); ++v) {
      out.push_back({prefix + "/v=" + detail::pad(v, 2), true, [xs = vectors[v]] {
                       const FactoredNat formula = kappa_clique_replaced_path(xs);
                       const FactoredNat det =
                           FactoredNat::factor(kappa_matrix_tree(clique_replaced(CliqueReplacedSpec(path_graph(xs.size()), xs))), 1000);
                       const BigRat ratio = make_rat(formula.value(), det.value());
                       return detail::compare(formula, det, "sizes " + detail::join_sizes(xs) + "  formula/determinant=" + ratio.get_str());
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property suites.

namespace detail {

inline std::vector<GroupSpec> small_catalog() {
  std::vector<GroupSpec> out;
  for (std::uint64_t n = 1; n <= 40; ++n) out.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; n <= 6; ++n) out.push_back(GroupSpec::quaternion(n));
  for (std::uint64_t n = 1; n <= 16; ++n) out.push_back(GroupSpec::dihedral(n));
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 2}})
    out.push_back(GroupSpec::elementary(p, n));
  out.push_back(GroupSpec::heisenberg(3));
  out.push_back(GroupSpec::extraspecial_exp_p2(3));
  for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {2, 5}, {2, 7}, {3, 7}, {2, 11}, {3, 13}, {5, 11}})
    out.push_back(GroupSpec::frobenius_pq(p, q));
  out.push_back(GroupSpec::psl2(2, 2));
  out.push_back(GroupSpec::psl2(7, 1));
  return out;
}

inline CliqueExpr random_expr(std::mt19937_64& rng, std::uint64_t budget, int depth) {
  if (budget <= 2 || depth == 0 || draw(rng, 0, 3) == 0) return CliqueExpr::clique(draw(rng, 1, std::min<std::uint64_t>(budget, 6)));
  if (draw(rng, 0, 1) == 0) {
    const std::uint64_t left = draw(rng, 1, budget - 1);
    return CliqueExpr::join(random_expr(rng, left, depth - 1), random_expr(rng, budget - left, depth - 1));
  }
  std::vector<std::pair<CliqueExpr, std::uint64_t>> terms;
  std::uint64_t used = 0;
  const std::uint64_t parts = draw(rng, 1, 3);
  for (std::uint64_t i = 0; i < parts && used + 1 <= budget; ++i) {
    const std::uint64_t copies = draw(rng, 1, 3);
    const std::uint64_t each = std::max<std::uint64_t>(1, (budget - used) / (copies * (parts - i)));
    CliqueExpr t = random_expr(rng, each, depth - 1);
    const std::uint64_t fit = std::max<std::uint64_t>(1, std::min(copies, (budget - used) / t.vertex_count()));
    if (used + t.vertex_count() * fit > budget) break;
    used += t.vertex_count() * fit;
    terms.emplace_back(std::move(t), fit);
  }
  if (terms.empty()) return CliqueExpr::clique(1);
  return CliqueExpr::disjoint_union(std::move(terms));
}

/// Divides the characteristic polynomial by (x - v) for every eigenvalue in
/// the spectrum; true when every division is exact and nothing is left over.
inline bool spectrum_matches_char_poly(const IntSpectrum& s, const IntPolynomial& charpoly) {
  IntPolynomial rest = charpoly;
  for (auto [v, m] : s.runs()) {
    for (std::uint64_t i = 0; i < m; ++i) {
      auto [q, exact] = rest.divide_linear(BigInt(static_cast<unsigned long>(v)));
      if (!exact) return false;
      rest = std::move(q);
    }
  }
  return rest.degree() == 0 && rest.coeff(0) == 1;
}

}  // namespace detail

inline std::vector<Case> property_cases(const Options& o) {
  using detail::pad;
  std::vector<Case> out;
  const std::size_t count = o.property_cases;

  // Shifted eigenvalue products are integers: the exact division by m inside
  // shifted_eigenvalue_product never trips, and the value matches
  // det(mI + L) / m, which is the same product taken over all n eigenvalues.
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = "property/shifted-product/" + pad(i, 3);
    out.push_back({name, false, [seed = o.seed, name] {
                     auto rng = detail::case_rng(seed, name);
                     const SimpleGraph g = detail::random_graph(rng, detail::draw(rng, 1, 8), 50);
                     long m = static_cast<long>(detail::draw(rng, 1, 5));
                     if (detail::draw(rng, 0, 1)) m = -m;
                     const BigInt value = shifted_eigenvalue_product(g, m);
                     IntMatrix shifted = laplacian_matrix(g);
                     for (std::size_t v = 0; v < g.size(); ++v) shifted(v, v) += m;
                     const BigInt ref = det_bareiss(std::move(shifted)) / m;
                     return Outcome{value == ref, ref.get_str(), value.get_str(),
                                    "n=" + std::to_string(g.size()) + " m=" + std::to_string(m)};
                   }});
  }

  // n^(m-1) divides kappa when m < n vertices are universal.
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = "property/universal-divisibility/" + pad(i, 3);
    out.push_back({name, false, [seed = o.seed, name] {
                     auto rng = detail::case_rng(seed, name);
                     const SimpleGraph g = join(complete_graph(detail::draw(rng, 1, 3)),
                                                detail::random_graph(rng, detail::draw(rng, 1, 7), 40));
                     const std::size_t n = g.size();
                     const std::size_t m = universal_vertices(g).size();
                     const BigInt k = kappa_matrix_tree(g);
                     BigInt d;
                     mpz_ui_pow_ui(d.get_mpz_t(), n, m - 1);
                     const bool ok = m == n || k % d == 0;
                     return Outcome{ok, std::to_string(n) + "^" + std::to_string(m - 1) + " | kappa", k.get_str(), {}};
                   }});
  }

  // Universal-set sizes of power graphs across the catalog.
  const auto catalog = detail::small_catalog();
  {
    auto rng = detail::case_rng(o.seed, "property/universal-set");
    for (std::size_t i = 0; i < count; ++i) {
      const GroupSpec spec = i < catalog.size() ? catalog[i] : catalog[detail::draw(rng, 0, catalog.size() - 1)];
      out.push_back({"property/universal-set/" + pad(i, 3) + "-" + spec.to_string(), false, [spec] {
                       const auto expected = *kappa::detail::family_universal_count(spec);
                       const auto actual = universal_vertices(power_graph(build_group(spec))).size();
                       return Outcome{expected == actual, std::to_string(expected), std::to_string(actual), {}};
                     }});
    }
  }

  // Spectra of clique expressions against the roots of the characteristic
  // polynomial of the realized graph, plus the eigenvalue product against the determinant.
  {
    std::vector<CliqueExpr> exprs;
    for (const auto& spec : catalog) {
      if (spec.order() > 40) continue;
      try {
        exprs.push_back(family_expr(spec));
      } catch (const DomainError&) {
      }
    }
    auto rng = detail::case_rng(o.seed, "property/spectrum");
    while (exprs.size() < count) exprs.push_back(detail::random_expr(rng, detail::draw(rng, 1, 40), 4));
    exprs.erase(exprs.begin() + static_cast<std::ptrdiff_t>(count), exprs.end());
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      out.push_back({"property/spectrum/" + pad(i, 3), false, [e = exprs[i]] {
                       const SimpleGraph g = expr_to_graph(e);
                       const IntSpectrum s = spectrum(e);
                       const bool roots = detail::spectrum_matches_char_poly(s, laplacian_char_poly(g));
                       const FactoredNat by_spectrum = kappa_from_spectrum(s);
                       const FactoredNat by_det = FactoredNat::factor(kappa_matrix_tree(g), 1000);
                       Outcome r = detail::compare(by_spectrum, by_det, e.to_string() + " " + s.to_string());
                       r.agree = r.agree && roots && s.trace() == 2 * BigInt(static_cast<unsigned long>(g.edge_count()));
                       return r;
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

inline std::vector<Case> quick_suite(const Options& o) {
  std::vector<Case> cases = known_value_cases(o, false);
  auto add = [&](std::vector<Case> more) { std::move(more.begin(), more.end(), std::back_inserter(cases)); };
  add(extraspecial_cases(o, {3}));
  add(heisenberg_cases(o, {3}));
  add(frobenius_cases(o, {{2, 3}, {3, 7}}));
  return cases;
}

inline std::vector<Case> full_suite(const Options& o) {
  std::vector<Case> cases = known_value_cases(o, true);
  auto add = [&](std::vector<Case> more) { std::move(more.begin(), more.end(), std::back_inserter(cases)); };
  add(extraspecial_cases(o, {3, 5}));
  add(heisenberg_cases(o, {3, 5}));
  add(frobenius_cases(o, {{2, 3}, {3, 7}, {5, 11}}));
  add(quaternion_cases(o, 5));
  add(psl2_cases(o));
  add(cyclic_cases(o, 120));
  add(epo_cases(o));
  add(dihedral_cases(20));
  add(triangle_cases(o, 5));
  cases.push_back(smatrix_literal_audit(o, 5));
  add(path_audit_cases(o));
  add(property_cases(o));
  return cases;
}

inline std::vector<Case> suite(const std::string& name, const Options& o) {
  if (name == "quick") return quick_suite(o);
  if (name == "full") return full_suite(o);
  throw ParseError("unknown suite '" + name + "' (quick, full)");
}

}  // namespace kappa::verify
