#include "twinlab/paper_checks.hpp"

#include <array>
#include <chrono>
#include <set>
#include <stdexcept>

#include "twinlab/bases.hpp"
#include "twinlab/brunnian.hpp"
#include "twinlab/cohen.hpp"
#include "twinlab/doodle.hpp"
#include "twinlab/expression.hpp"
#include "twinlab/milnor.hpp"
#include "twinlab/presentation.hpp"
#include "twinlab/pt4.hpp"
#include "twinlab/reflection.hpp"
#include "twinlab/sampling.hpp"
#include "twinlab/stallings.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab {

namespace {

const TwinWord& y3() {
  static const TwinWord y(3, {1, 2, 1, 2, 1, 2});
  return y;
}

TwinWord x_word(const std::string& expression) {
  return evaluate(parse_free_expression(expression, x_basis().alphabet), x_basis());
}

std::string count_detail(std::size_t cases, std::size_t failures) {
  return std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
}

}  // namespace

CheckReport check_face_table() {
  // Indices j (1-based) with d_i(x_j) = y; every other value is trivial.
  static const std::array<std::set<int>, 4> nontrivial{{{4, 5}, {3, 6}, {2, 7}, {1}}};
  CheckReport report;
  const BasisTable& x = x_basis();
  for (int i = 0; i < 4; ++i) {
    for (int j = 1; j <= 7; ++j) {
      const TwinWord image = delete_strand(x.word(j - 1), i);
      const bool expect_y = nontrivial[static_cast<std::size_t>(i)].count(j) > 0;
      const bool ok = expect_y ? equal(image, y3()) : is_trivial(image);
      report.add("d_" + std::to_string(i) + "(x" + std::to_string(j) + ") = " + (expect_y ? "y" : "1"), ok,
                 normal_form(image).to_string());
    }
  }
  return report;
}

CheckReport check_doubling() {
  CheckReport report;
  const char* targets[] = {"x3 x5", "x6 x2", "x1 x7"};
  for (int k = 0; k < 3; ++k) {
    const TwinWord image = double_strand(y3(), k);
    report.add("s_" + std::to_string(k) + "(c_111) = " + targets[k], equal(image, x_word(targets[k])),
               image.to_string());
  }
  return report;
}

CheckReport check_pt5_identities() { return verify_pt5_identities(); }

CheckReport check_ranks() {
  CheckReport report;
  const BasisTable& x = x_basis();
  std::vector<FreeWord> k3;
  const char* k3_words[] = {"x3 x5", "x6 x2", "x1 x7"};
  for (int k = 0; k < 3; ++k) {
    k3.push_back(parse_free_expression(k3_words[k], x.alphabet));
    const FreeWord rewritten = rewrite_pt4(double_strand(y3(), k));
    report.add(std::string("rewrite_pt4(s_") + std::to_string(k) + " c_111) = " + k3_words[k], rewritten == k3.back(),
               rewritten.to_string());
  }
  const int r3 = fold(x.alphabet, k3).rank();
  report.add("rank K_3 = 3", r3 == 3, "rank " + std::to_string(r3));

  std::vector<FreeWord> k4;
  for (const Pt5Identity& id : pt5_identities()) k4.push_back(parse_free_expression(id.image, a_basis().alphabet));
  const int r4 = fold(a_basis().alphabet, k4).rank();
  report.add("rank K_4 = 6", r4 == 6, "rank " + std::to_string(r4));
  return report;
}

CheckReport check_identity_suites(std::uint64_t seed, std::size_t samples, int max_strands, int milnor_degree) {
  CheckReport report;
  for (int n = 2; n <= max_strands; ++n) {
    const IdentityReport r = verify_simplicial_identities(n, samples, seed + static_cast<std::uint64_t>(n));
    for (const IdentityCheck& c : r.checks) {
      if (c.cases == 0) continue;
      std::string detail = count_detail(c.cases, c.failures);
      if (!c.counterexamples.empty()) detail += "; e.g. " + c.counterexamples.front();
      report.add("T_" + std::to_string(n) + ": " + c.name, c.ok() && c.cases >= samples, detail);
    }
  }
  const IdentityReport m = verify_milnor_identities(milnor_degree);
  for (const IdentityCheck& c : m.checks) {
    std::string detail = count_detail(c.cases, c.failures);
    if (!c.counterexamples.empty()) detail += "; e.g. " + c.counterexamples.front();
    report.add("F[S^2] up to degree " + std::to_string(milnor_degree) + ": " + c.name, c.ok(), detail);
  }
  return report;
}

CheckReport check_composition_law(std::uint64_t seed, std::size_t samples) {
  CheckReport report;
  WordSampler sampler(seed);
  std::size_t failures = 0;
  std::string example;
  for (std::size_t k = 0; k < samples; ++k) {
    const TwinWord u = sampler.random_word(5, 12);
    const TwinWord w = sampler.random_word(5, 12);
    const int i = sampler.uniform(0, 4);
    const TwinWord lhs = delete_strand(multiply(u, w), i);
    const TwinWord rhs = multiply(delete_strand(u, i), delete_strand(w, nu(u)(i + 1) - 1));
    if (!equal(lhs, rhs)) {
      if (failures++ == 0) example = "u=" + u.to_string() + " w=" + w.to_string() + " i=" + std::to_string(i);
    }
  }
  report.add("T_5: d_i(uw) = d_i(u) d_{nu(u)(i+1)-1}(w)", failures == 0,
             count_detail(samples, failures) + (example.empty() ? "" : "; e.g. " + example));
  return report;
}

CheckReport check_brunnian(std::uint64_t seed) {
  CheckReport report;
  const TwinWord x45 = x_word("x4 x5^-1");
  report.add("x4 x5^-1 is Brunnian", is_brunnian(x45).valid);
  report.add("x4 x5^-1 passes the log test", brunnian_log_test_t4(x45));
  for (int i = 1; i <= 2; ++i) {
    const TwinWord w = power(TwinWord(4, {i, i + 1}), 3);
    report.add("(t" + std::to_string(i) + " t" + std::to_string(i + 1) + ")^3 in T_4 is not Brunnian",
               !is_brunnian(w).valid);
  }

  WordSampler sampler(seed);
  std::set<std::string> seen;
  std::vector<TwinWord> elements;
  std::size_t not_brunnian = 0;
  while (elements.size() < 60) {
    const int gen = sampler.uniform(1, 7);
    std::array<int, 4> k{};
    for (int& e : k) e = sampler.uniform(-2, 2);
    const auto f = schreier_basis_brun_t4(gen, k);
    if (!f || !seen.insert(f->to_string()).second) continue;
    const TwinWord w = evaluate(*f, x_basis());
    if (!is_brunnian(w).valid) ++not_brunnian;
    elements.push_back(normal_form(w));
  }
  report.add("60 Schreier basis elements are Brunnian", not_brunnian == 0,
             std::to_string(not_brunnian) + " not Brunnian");
  const std::set<TwinWord> distinct(elements.begin(), elements.end());
  report.add("60 Schreier basis elements are pairwise distinct", distinct.size() == elements.size(),
             std::to_string(distinct.size()) + " distinct");

  std::size_t disagreements = 0;
  std::size_t brunnian = 0;
  for (int k = 0; k < 500; ++k) {
    TwinWord w = sampler.random_pure_word(4, 14);
    if (k % 2 == 1) w = brunnian_projection(w);
    const bool by_deletion = is_brunnian(w).valid;
    brunnian += by_deletion ? 1 : 0;
    if (by_deletion != brunnian_log_test_t4(w)) ++disagreements;
  }
  report.add("log test agrees with the deletion test on 500 pure T_4 words", disagreements == 0,
             std::to_string(disagreements) + " disagreements, " + std::to_string(brunnian) + " Brunnian samples");
  return report;
}

CheckReport check_decompose_pt4(std::uint64_t seed, std::size_t samples) {
  CheckReport report;
  const Pt4Decomposition g = decompose_pt4(TwinWord(4, {1, 2, 1, 2, 1, 2}));
  report.add("(t1 t2)^3 has exponents (0, 0, 0, 1) and trivial Brunnian part",
             g.exponents == std::array<int, 4>{0, 0, 0, 1} && is_trivial(g.brun));
  const TwinWord x45 = x_word("x4 x5^-1");
  const Pt4Decomposition b = decompose_pt4(x45);
  report.add("x4 x5^-1 has exponents (0, 0, 0, 0)", b.exponents == std::array<int, 4>{} && equal(b.brun, x45));

  WordSampler sampler(seed);
  std::size_t bad_roundtrip = 0;
  std::size_t bad_residue = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const TwinWord w = sampler.random_pure_word(4, 18);
    const Pt4Decomposition d = decompose_pt4(w);
    if (!equal(reassemble(d), w)) ++bad_roundtrip;
    if (!is_brunnian(d.brun).valid) ++bad_residue;
  }
  report.add("reassembly equals the input", bad_roundtrip == 0, count_detail(samples, bad_roundtrip));
  report.add("residue is Brunnian", bad_residue == 0, count_detail(samples, bad_residue));
  return report;
}

CheckReport check_retractions(std::uint64_t seed, std::size_t samples) {
  CheckReport report;
  WordSampler sampler(seed);
  for (int n = 4; n <= 5; ++n) {
    std::size_t phi_class = 0, phi_idem = 0, step_class = 0, step_idem = 0, final_brun = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const TwinWord w = sampler.random_pure_word(n, 10);
      const TwinWord p = phi_decomposable(w);
      if (!is_k_decomposable(p, n - 3)) ++phi_class;
      if (!equal(phi_decomposable(p), p)) ++phi_idem;
      TwinWord current = w;
      for (int k = n - 2; k >= 2; --k) {
        const TwinWord next = dk_step(current, k);
        if (!is_k_decomposable(next, k - 1)) ++step_class;
        if (!equal(dk_step(next, k), next)) ++step_idem;
        current = next;
      }
      if (!is_brunnian(current).valid) ++final_brun;
    }
    const std::string tag = "n=" + std::to_string(n) + ": ";
    report.add(tag + "phi lands in D_{n-3,n}", phi_class == 0, count_detail(samples, phi_class));
    report.add(tag + "phi is idempotent", phi_idem == 0, count_detail(samples, phi_idem));
    report.add(tag + "dk_step lands in D_{k-1,n}", step_class == 0, count_detail(samples, step_class));
    report.add(tag + "dk_step is idempotent", step_idem == 0, count_detail(samples, step_idem));
    report.add(tag + "iterated dk_step reaches Brun(T_n)", final_brun == 0, count_detail(samples, final_brun));
  }
  return report;
}

CheckReport check_cohen(std::uint64_t seed) {
  CheckReport report;
  for (int n = 2; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    report.add(tag + "delta_n is Cohen", is_cohen(delta(n)));
    report.add(tag + "gamma_n is pure Cohen", is_pure_cohen(gamma(n)));
    if (n >= 3) {
      report.add(tag + "d_0(delta_n) = delta_{n-1}", equal(delete_strand(delta(n), 0), delta(n - 1)));
      report.add(tag + "d_0(gamma_n) = gamma_{n-1}", equal(delete_strand(gamma(n), 0), gamma(n - 1)));
    }
  }
  for (int m : {1, 2, -1}) {
    const TwinWord u = power(y3(), m);
    const TwinWord w = cohen_lift(u, 4);
    bool solves = is_pure_cohen(w);
    for (int i = 0; i < 4; ++i) solves = solves && equal(delete_strand(w, i), u);
    report.add("cohen_lift(y^" + std::to_string(m) + ", 4) has every deletion equal to y^" + std::to_string(m), solves,
               w.to_string());
  }

  WordSampler sampler(seed);
  std::size_t samples = 0, not_cohen = 0, outside = 0;
  for (int n = 3; n <= 5; ++n) {
    for (int s = 0; s < 20; ++s) {
      const TwinWord u = power(y3(), sampler.uniform(-2, 2));
      TwinWord w = n == 3 ? u : cohen_lift(u, n);
      w = multiply(w, power(gamma(n), sampler.uniform(-1, 1)));
      if (sampler.uniform(0, 1) == 1) w = multiply(delta(n), w);
      ++samples;
      if (!is_cohen(w)) ++not_cohen;
      if (!is_pure(w) && !is_pure(multiply(invert(delta(n)), w))) ++outside;
    }
  }
  report.add("sampled twins are Cohen", not_cohen == 0, count_detail(samples, not_cohen));
  report.add("sampled Cohen twins lie in CPT_n or delta_n CPT_n", outside == 0, count_detail(samples, outside));
  return report;
}

namespace {

// A random word equal to w, reached by relator moves within length 8.
TwinWord scramble(const TwinWord& w, WordSampler& sampler) {
  std::vector<int> letters = w.letters();
  const int moves = sampler.uniform(1, 8);
  for (int m = 0; m < moves; ++m) {
    const int kind = sampler.uniform(0, 2);
    const int size = static_cast<int>(letters.size());
    if (kind == 0 && size + 2 <= 8) {
      const int g = sampler.uniform(1, w.strands() - 1);
      const auto at = letters.begin() + sampler.uniform(0, size);
      letters.insert(at, 2, g);
    } else if (kind == 1 && size >= 2) {
      const int p = sampler.uniform(0, size - 2);
      const auto up = static_cast<std::size_t>(p);
      if (letters[up] == letters[up + 1]) letters.erase(letters.begin() + p, letters.begin() + p + 2);
    } else if (kind == 2 && size >= 2) {
      const auto up = static_cast<std::size_t>(sampler.uniform(0, size - 2));
      if (far_commute(letters[up], letters[up + 1])) std::swap(letters[up], letters[up + 1]);
    }
  }
  return TwinWord(w.strands(), std::move(letters));
}

}  // namespace

CheckReport check_word_problem(std::uint64_t seed, const EqualityOracle& oracle, std::size_t pairs) {
  const EqualityOracle& decide = oracle ? oracle : EqualityOracle(reflection_equal);
  CheckReport report;
  WordSampler sampler(seed);
  std::size_t mismatches = 0, equal_pairs = 0;
  std::string example;
  for (std::size_t k = 0; k < pairs; ++k) {
    const TwinWord u = sampler.random_word(4, 8);
    const TwinWord v = k % 2 == 0 ? sampler.random_word(4, 8) : scramble(u, sampler);
    const bool ours = equal(u, v);
    equal_pairs += ours ? 1 : 0;
    if (ours != decide(u, v) && mismatches++ == 0) example = u.to_string() + " vs " + v.to_string();
  }
  report.add("equal() agrees with the oracle on " + std::to_string(pairs) + " T_4 pairs", mismatches == 0,
             std::to_string(mismatches) + " mismatches, " + std::to_string(equal_pairs) + " equal pairs" +
                 (example.empty() ? "" : "; e.g. " + example));
  return report;
}

CheckReport check_moore_probe(std::uint64_t seed, std::size_t samples, int max_length) {
  CheckReport report;
  const B2ProbeReport probe = b2_probe(max_length, samples, seed);
  report.add("collected " + std::to_string(samples) + " kernel samples", probe.kernel_samples == samples,
             std::to_string(probe.kernel_samples) + " of " + std::to_string(probe.attempts) + " attempts");
  report.add("every d_0 image is trivial", probe.ok(),
             probe.nontrivial.empty() ? std::string() : "e.g. " + probe.nontrivial.front());
  return report;
}

CheckReport check_doodles(std::uint64_t seed) {
  CheckReport report;
  report.add("min_crossings((t1 t2)^3) = 6", min_crossings(y3()) == 6);
  const DoodleClosure c = closure(y3());
  report.add("closure((t1 t2)^3) has 3 components", c.components == 3 && c.crossings() == 6);

  WordSampler sampler(seed);
  std::size_t changed = 0;
  for (int k = 0; k < 100; ++k) {
    const TwinWord w = sampler.random_word(4, 10);
    const TwinWord g = sampler.random_word(4, 6);
    if (!(closure(conjugate(w, g)) == closure(w))) ++changed;
  }
  report.add("closure is invariant under 100 random conjugations", changed == 0, count_detail(100, changed));

  report.add("(t1 t2)^3 in T_3 closes to a Brunnian doodle", brunnian_closure_certificate(y3()).certified);
  report.add("(t1 t2)^3 in T_4 is rejected", !brunnian_closure_certificate(add_strands_right(y3(), 1)).certified);
  report.add("x4 x5^-1 closes to a Brunnian doodle", brunnian_closure_certificate(x_word("x4 x5^-1")).certified);
  return report;
}

CheckReport check_q_presentation(int max_strands) {
  CheckReport report;
  for (int n = 2; n <= max_strands; ++n) {
    const QPresentation q = q_presentation(n);
    report.add("q_1..q_" + std::to_string(n) + " in T_" + std::to_string(n + 1), q.report.ok(),
               std::to_string(q.report.results.size()) + " relations, " + std::to_string(q.report.failures()) +
                   " failures");
  }
  return report;
}

std::vector<CriterionResult> run_paper_checks(std::uint64_t seed, const EqualityOracle& oracle) {
  struct Entry {
    const char* title;
    double budget;
    std::function<CheckReport()> run;
  };
  const std::vector<Entry> entries{
      {"Face-map table of x_1..x_7", 1, check_face_table},
      {"Doubling of c_111 into PT_4", 1, check_doubling},
      {"Degeneracy identities in PT_5", 30, check_pt5_identities},
      {"Ranks of K_3 and K_4", 1, check_ranks},
      {"Simplicial and bi-Delta identity suites", 60, [seed] { return check_identity_suites(seed); }},
      {"Composition law for strand deletion", 60, [seed] { return check_composition_law(seed); }},
      {"Brunnian suite", 60, [seed] { return check_brunnian(seed); }},
      {"PT_4 decomposition roundtrip", 60, [seed] { return check_decompose_pt4(seed); }},
      {"Retractions phi and dk_step", 60, [seed] { return check_retractions(seed); }},
      {"Cohen suite", 60, [seed] { return check_cohen(seed); }},
      {"Word problem against an independent oracle", 60, [seed, &oracle] { return check_word_problem(seed, oracle); }},
      {"Moore boundary probe in degree 3", 120, [seed] { return check_moore_probe(seed); }},
      {"Doodle suite", 60, [seed] { return check_doodles(seed); }},
      {"q-presentation", 60, [] { return check_q_presentation(); }},
  };
  std::vector<CriterionResult> out;
  int id = 0;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.id = ++id;
    r.title = e.title;
    r.budget_seconds = e.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.report = e.run();
    } catch (const std::exception& ex) {
      r.report.add("unexpected exception", false, ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace twinlab
