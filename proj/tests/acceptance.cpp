// Acceptance run: the full verification suite, then one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "kappa/verify.hpp"

using namespace kappa;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

Tally tally(const verify::Report& r, const std::string& prefix) {
  Tally t;
  for (const auto* c : r.with_prefix(prefix)) {
    ++t.cases;
    if (c->failed()) {
      if (t.first_failure.empty()) t.first_failure = c->name;
      ++t.failed;
    }
  }
  return t;
}

bool line(int id, bool pass, const std::string& what, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  (" << detail << ")\n";
  return pass;
}

bool prefix_criterion(int id, const verify::Report& r, const std::string& prefix, const std::string& what,
                      std::size_t min_cases = 1) {
  const Tally t = tally(r, prefix);
  std::string detail = std::to_string(t.cases) + " cases, " + std::to_string(t.failed) + " failed";
  if (!t.first_failure.empty()) detail += ", first " + t.first_failure;
  return line(id, t.cases >= min_cases && t.failed == 0, what, detail);
}

const verify::CaseResult* find(const verify::Report& r, const std::string& name) {
  for (const auto& c : r.results)
    if (c.name == name) return &c;
  return nullptr;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("KAPPA_SEED");
  return s ? std::stoull(s) : 0;
}

}  // namespace

int main() {
  verify::Options o;
  o.seed = seed_from_env();
  const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  const auto start = std::chrono::steady_clock::now();
  const verify::Report report = verify::run_cases(verify::full_suite(o), jobs);
  const double minutes = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60.0;

  // Second pass on one worker for the determinism comparison.
  const verify::Report serial = verify::run_cases(verify::full_suite(o), 1);
  const std::string rendered = report.render();
  const bool deterministic = rendered == serial.render();

  std::cout << rendered << '\n';

  bool all = true;
  all &= prefix_criterion(1, report, "known/", "known values by closed form and by determinant", 22);
  all &= prefix_criterion(2, report, "triangle/", "subset formula = S-matrix = determinant on all connected bases k <= 5", 1);
  all &= prefix_criterion(3, report, "cyclic/", "cyclic closed form = determinant for n <= 120", 120);

  {
    // Literal reading: the determinant must equal the spectral value of the
    // join form K(p) * (p+1)#K(p^2-p) at p = 3, and H3 must match.
    const auto* verdict = find(report, "extraspecial/p=3/verdict");
    const auto* heis = find(report, "heisenberg/p=3");
    const bool verdict_ok = verdict && verdict->error.empty() && verdict->outcome.agree;
    const bool heis_ok = heis && !heis->failed();
    std::string detail = std::string("join form ") + (verdict_ok ? "equals" : "differs from") + " the determinant; H3 " +
                         (heis_ok ? "matches" : "does not match");
    all &= line(4, verdict_ok && heis_ok, "extraspecial verdict at p = 3 and Heisenberg H3", detail);
    if (verdict) {
      std::cout << "    join form " << verdict->outcome.expected << " vs determinant " << verdict->outcome.actual << '\n';
      std::istringstream note(verdict->outcome.note);
      for (std::string l; std::getline(note, l);) std::cout << "    " << l << '\n';
    }
  }

  all &= prefix_criterion(5, report, "frobenius/", "Frobenius closed form = determinant", 3);

  {
    bool ok = true;
    std::string detail;
    for (const char* p : {"property/shifted-product/", "property/universal-divisibility/", "property/universal-set/",
                          "property/spectrum/"}) {
      const Tally t = tally(report, p);
      ok = ok && t.cases == o.property_cases && t.failed == 0;
      if (!detail.empty()) detail += "; ";
      detail += std::string(p).substr(9) + " " + std::to_string(t.cases - t.failed) + "/" + std::to_string(t.cases);
    }
    all &= line(6, ok, "property suites", detail);
  }

  {
    const auto a = report.with_prefix("path-audit/");
    const auto b = serial.with_prefix("path-audit/");
    bool same = a.size() == b.size() && !a.empty();
    std::size_t agree = 0;
    bool complete = true;
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i]->name == b[i]->name && a[i]->outcome.expected == b[i]->outcome.expected &&
             a[i]->outcome.actual == b[i]->outcome.actual && a[i]->outcome.note == b[i]->outcome.note;
      complete = complete && a[i]->error.empty();
      if (a[i]->outcome.agree) ++agree;
    }
    all &= line(7, same && complete, "path closed-form audit completes and is deterministic",
                std::to_string(a.size()) + " cases, " + std::to_string(agree) + " agree with the determinant");
  }

  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f min on %u worker(s)", minutes, jobs);
    all &= line(8, minutes <= 20.0 && deterministic, "full suite within 20 minutes with identical reports",
                std::string(buf) + (deterministic ? ", reports identical" : ", reports differ"));
  }

  return all ? 0 : 1;
}
