// Acceptance run: one PASS/FAIL line per criterion, each under its time bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "supermod/landi.hpp"
#include "supermod/spheres.hpp"
#include "supermod/suites.hpp"

using namespace supermod;

namespace {

constexpr std::uint64_t kSeed = 20240601;

const Clause* find_clause(const Report& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return &c;
  return nullptr;
}

bool has_witness(const Report& r, const std::string& name, const std::string& witness) {
  const Clause* c = find_clause(r, name);
  return c && c->pass && c->witness == witness;
}

struct Criterion {
  int id;
  const char* title;
  double bound_s;
  std::function<std::string(bool&)> run;  // returns a detail line, sets pass
};

std::string first_failure(const Report& r) {
  for (const auto& c : r.clauses)
    if (!c.pass) return c.name + (c.witness.empty() ? "" : " -- " + c.witness);
  return std::to_string(r.clauses.size()) + " clauses";
}

std::function<std::string(bool&)> suite_check(const char* name, SuiteParams params,
                                               std::function<bool(const Report&)> extra = {}) {
  return [=](bool& ok) {
    const Report r = run_suite(name, params, kSeed);
    ok = r.pass() && !r.clauses.empty() && (!extra || extra(r));
    return ok ? first_failure(r) : (r.pass() ? std::string("expected clauses missing") : first_failure(r));
  };
}

}  // namespace

int main() {
  SuiteParams ex26;
  ex26.L = 10;
  ex26.max_n = 5;
  SuiteParams nil;
  nil.L = 6;
  nil.count = 200;
  SuiteParams hom;
  hom.count = 100;
  SuiteParams sq;
  sq.L = 6;
  sq.count = 100;
  SuiteParams trig;
  trig.L = 6;
  SuiteParams landi;
  landi.count = 20;
  SuiteParams laws;
  laws.count = 500;

  const std::vector<Criterion> criteria = {
      {1, "x^n coefficient is n! for n=1..5, L=10", 5,
       suite_check("example-2-6", ex26,
                   [](const Report& r) {
                     return r.clauses.size() == 5 &&
                            has_witness(r, "coeff_x^3", "coeff(x^3, b1..b6) = 6") &&
                            has_witness(r, "coeff_x^5", "coeff(x^5, b1..b10) = 120");
                   })},
      {2, "200 souls in Grassmann(6) satisfy x^7 = 0", 5,
       suite_check("nilpotency", nil,
                   [](const Report& r) { return has_witness(r, "soul^(L+1)_is_0", "200/200 hold"); })},
      {3, "sphere projector n=1..4 over Q and Q x Grassmann(2)", 10,
       suite_check("sphere-projector", {},
                   [](const Report& r) {
                     for (unsigned n = 1; n <= 4; ++n)
                       for (const char* base : {" over Q: ", " over Q x grassmann(2): "})
                         for (const char* c : {"idempotent", "fixes_alpha", "g(s_i)=x_i alpha"})
                           if (!find_clause(r, "n=" + std::to_string(n) + base + c)) return false;
                     return find_clause(r, "n=1: g(x1 s0 - x0 s1) = 0") != nullptr;
                   })},
      {4, "e = 3 on Z/6[xi1,xi2]: |Im e| = 16, |Im(1-e)| = 81", 5,
       suite_check("z6", {},
                   [](const Report& r) {
                     return has_witness(r, "image_cardinality", "|Im e| = 16") &&
                            has_witness(r, "complement_cardinality", "|Im(1-e)| = 81") &&
                            has_witness(r, "intersection_trivial", "|Im e n Im(1-e)| = 1") &&
                            has_witness(r, "decomposition", "x = e(x) + (1-e)(x) for 1296 elements");
                   })},
      {5, "100 morphisms over Z/6[xi1,xi2] split into even and odd parts", 5,
       suite_check("hom-grading", hom,
                   [](const Report& r) { return has_witness(r, "phi0_plus_phi1_eq_phi", "100/100 hold"); })},
      {6, "idempotent splittings round-trip", 5, suite_check("splitting", {})},
      {7, "direct sum and tensor types for p,q <= 3; end projector idempotent", 5,
       suite_check("tensor-types", {},
                   [](const Report& r) { return find_clause(r, "end_projector_sphere_n1_idempotent") != nullptr; })},
      {8, "sqrt_even on 100 Pythagorean cases in Grassmann(6)", 10,
       suite_check("sqrt", sq,
                   [](const Report& r) {
                     return has_witness(r, "sqrt(1-y^2)^2+y^2=1", "100/100 hold") &&
                            has_witness(r, "matches_coefficient_expansion", "100/100 hold");
                   })},
      {9, "super sin/cos identities over the trig ring x Grassmann(6)", 10, suite_check("trig", trig)},
      {10, "<psi|psi> = 1, p^2 = p, pi idempotent for n = 1,2,3", 30,
       suite_check("landi", landi,
                   [](const Report& r) {
                     for (unsigned n = 1; n <= 3; ++n) {
                       const std::string tag = "n=" + std::to_string(n) + ": ";
                       if (!has_witness(r, tag + "p_idempotent", "residual 0") ||
                           !has_witness(r, tag + "pi_idempotent", "20 random vectors"))
                         return false;
                       const BraVector bra = make_bra(n);
                       if (inner(bra) != SuperElement::one(bra.ring)) return false;
                     }
                     return true;
                   })},
      {11, "algebraic laws on 500 triples in each of four rings", 10,
       suite_check("grassmann-laws", laws,
                   [](const Report& r) { return r.clauses.size() == 16; })},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = false;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.run(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound_s;
    if (!in_time) detail += " (over time bound)";
    const bool pass = ok && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s [%.3f s < %.0f s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.bound_s, detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
