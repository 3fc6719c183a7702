#include "twinlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "twinlab/bases.hpp"
#include "twinlab/brunnian.hpp"
#include "twinlab/cohen.hpp"
#include "twinlab/doodle.hpp"
#include "twinlab/expression.hpp"
#include "twinlab/milnor.hpp"
#include "twinlab/paper_checks.hpp"
#include "twinlab/presentation.hpp"
#include "twinlab/pt4.hpp"
#include "twinlab/strand_ops.hpp"

namespace twinlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

constexpr const char* kConventions = R"(Conventions:
  Generators t1..t{n-1} are 1-based; --n is the number of strands.
  Face (delete), coface and degeneracy (double) indices are 0-based:
  index i acts on the strand whose top endpoint is at position i+1.
  Strand subsets are 1-based. Words are read top to bottom.
  Expressions: juxtaposition or '*' multiplies, '^k' is a power, '^(g)' is
  the conjugate g^-1 w g, '1' is the identity.
  --basis x|a reads inputs as words in the free bases x1..x7 of PT_4 or
  a1..a31 of PT_5 (from the compiled-in table or --basis-file).
  --file reads one expression per line; '#' starts a comment.
  Closures are compared up to conjugacy at a fixed strand count; Markov
  stabilization is not modelled.
Exit codes: 0 success or property true, 1 property false, 2 usage or parse error.)";

struct Options {
  std::optional<int> n;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> samples;
  std::optional<int> maxlen;
  std::string variant = "standard";
  std::string basis;
  std::string basis_file;
  std::string file;
  std::vector<std::string> words;
  int index = 0;
  int k = 0;
  int target = 0;
  int degree = 2;
  int max_degree = 8;
  int theta_degree = kDefaultThetaDegree;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result of one command on one input.
struct Outcome {
  json result;
  json certificate;
  std::string text;
  bool property = true;
};

std::string word_text(const TwinWord& w) { return w.to_string(); }

json word_json(const TwinWord& w) {
  return {{"strands", w.strands()}, {"word", w.to_string()}, {"normal_form", normal_form(w).to_string()}};
}

json report_json(const CheckReport& r) {
  json checks = json::array();
  for (const auto& c : r.results) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

std::string report_text(const CheckReport& r) {
  std::string out;
  for (const auto& c : r.results) {
    out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  return out;
}

Outcome report_outcome(const CheckReport& r) {
  return {report_json(r), {}, report_text(r) + (r.ok() ? "all checks passed\n" : "some checks failed\n"), r.ok()};
}

Outcome identity_outcome(const IdentityReport& r) {
  json checks = json::array();
  std::string text;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"passed", c.ok()},
                      {"counterexamples", c.counterexamples}});
    text += std::string(c.ok() ? "PASS  " : "FAIL  ") + c.name + "  (" + std::to_string(c.cases) + " cases, " +
            std::to_string(c.failures) + " failures)\n";
    for (const auto& ex : c.counterexamples) text += "      " + ex + "\n";
  }
  json result{{"passed", r.ok()}, {"cases", r.total_cases()}, {"failures", r.total_failures()}, {"checks", checks}};
  return {result, {}, text, r.ok()};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  using WordCommand = std::function<Outcome(const TwinWord&)>;

  CLI::App* command(CLI::App& app, const std::string& name, const std::string& help);
  void add_word_input(CLI::App* sub, bool allow_file = true);
  void add_n(CLI::App* sub);
  void on_words(CLI::App* sub, const std::string& name, std::optional<int> default_n, WordCommand fn);
  void on_plain(CLI::App* sub, const std::string& name, std::function<Outcome()> fn);

  const BasisFile& bases();
  TwinWord parse_word(const std::string& text, std::optional<int> default_n);
  std::vector<std::string> input_lines();
  CofaceVariant variant() const;
  json inputs_json(const std::vector<std::string>& words) const;
  int emit(const std::string& name, const std::vector<std::string>& words, const std::vector<Outcome>& outcomes,
           double millis);

  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::optional<BasisFile> loaded_;
  std::function<int()> action_;
};

CLI::App* Runner::command(CLI::App& app, const std::string& name, const std::string& help) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_flag("--json", opt_.json, "Emit JSON {command, inputs, result, certificate, timings}");
  return sub;
}

void Runner::add_n(CLI::App* sub) {
  sub->add_option("--n", opt_.n, "Number of strands")->check(CLI::Range(1, 64));
  sub->add_option("--basis", opt_.basis, "Read inputs as words in a named free basis")
      ->check(CLI::IsMember({"x", "a"}));
  sub->add_option("--basis-file", opt_.basis_file, "Basis table file replacing the compiled-in one")
      ->check(CLI::ExistingFile);
}

void Runner::add_word_input(CLI::App* sub, bool allow_file) {
  add_n(sub);
  sub->add_option("words", opt_.words, "Twin expressions");
  if (allow_file) sub->add_option("--file", opt_.file, "Word list, one expression per line")->check(CLI::ExistingFile);
}

const BasisFile& Runner::bases() {
  if (opt_.basis_file.empty()) return default_bases();
  if (!loaded_) loaded_ = load_basis_file(opt_.basis_file);
  return *loaded_;
}

TwinWord Runner::parse_word(const std::string& text, std::optional<int> default_n) {
  if (!opt_.basis.empty()) {
    const BasisTable& table = bases().table(opt_.basis);
    if (opt_.n && *opt_.n != table.strands) {
      throw UsageError("--n " + std::to_string(*opt_.n) + " does not match basis " + opt_.basis + " on " +
                       std::to_string(table.strands) + " strands");
    }
    return evaluate(parse_free_expression(text, table.alphabet), table);
  }
  const std::optional<int> n = opt_.n ? opt_.n : default_n;
  if (!n) throw UsageError("--n is required for twin expressions");
  return parse_twin_expression(text, *n);
}

std::vector<std::string> Runner::input_lines() {
  std::vector<std::string> lines = opt_.words;
  if (!opt_.file.empty()) {
    std::ifstream in(opt_.file);
    if (!in) throw UsageError("cannot read " + opt_.file);
    for (std::string line; std::getline(in, line);) {
      line = line.substr(0, line.find('#'));
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
  }
  if (lines.empty()) throw UsageError("no input words");
  return lines;
}

CofaceVariant Runner::variant() const {
  return opt_.variant == "mirror" ? CofaceVariant::mirror : CofaceVariant::standard;
}

json Runner::inputs_json(const std::vector<std::string>& words) const {
  json in = json::object();
  if (opt_.n) in["n"] = *opt_.n;
  if (!opt_.basis.empty()) in["basis"] = opt_.basis;
  if (!opt_.file.empty()) in["file"] = opt_.file;
  if (!words.empty()) in["words"] = words;
  return in;
}

int Runner::emit(const std::string& name, const std::vector<std::string>& words, const std::vector<Outcome>& outcomes,
                 double millis) {
  const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.property; });
  if (opt_.json) {
    json doc{{"command", name}, {"inputs", inputs_json(words)}};
    const bool many = outcomes.size() > 1 || !opt_.file.empty();
    if (many) {
      json results = json::array();
      json certs = json::array();
      for (const auto& o : outcomes) {
        results.push_back(o.result);
        certs.push_back(o.certificate);
      }
      doc["result"] = results;
      if (std::any_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return !o.certificate.is_null(); })) {
        doc["certificate"] = certs;
      }
    } else {
      doc["result"] = outcomes.front().result;
      if (!outcomes.front().certificate.is_null()) doc["certificate"] = outcomes.front().certificate;
    }
    doc["timings"] = {{"total_ms", millis}};
    out_ << doc.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (outcomes.size() > 1) out_ << "[" << words[k] << "]\n";
      out_ << outcomes[k].text;
      if (!outcomes[k].text.empty() && outcomes[k].text.back() != '\n') out_ << "\n";
    }
  }
  return all ? kTrue : kFalse;
}

void Runner::on_words(CLI::App* sub, const std::string& name, std::optional<int> default_n, WordCommand fn) {
  sub->callback([this, name, default_n, fn] {
    action_ = [this, name, default_n, fn] {
      const auto start = std::chrono::steady_clock::now();
      const std::vector<std::string> lines = input_lines();
      std::vector<Outcome> outcomes;
      for (const auto& line : lines) outcomes.push_back(fn(parse_word(line, default_n)));
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return emit(name, lines, outcomes, ms);
    };
  });
}

void Runner::on_plain(CLI::App* sub, const std::string& name, std::function<Outcome()> fn) {
  sub->callback([this, name, fn] {
    action_ = [this, name, fn] {
      const auto start = std::chrono::steady_clock::now();
      const Outcome o = fn();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return emit(name, {}, {o}, ms);
    };
  });
}

Outcome word_outcome(const TwinWord& w) { return {word_json(w), {}, word_text(w), true}; }

json brunnian_json(const BrunnianCertificate& c) {
  json deletions = json::array();
  for (const auto& [i, d] : c.deletions) deletions.push_back({{"index", i}, {"normal_form", d.to_string()}});
  return {{"word", c.word.to_string()}, {"pure", c.pure}, {"valid", c.valid}, {"deletions", deletions}};
}

std::string brunnian_text(const BrunnianCertificate& c) {
  std::string text = std::string(c.valid ? "Brunnian" : "not Brunnian") + (c.pure ? "" : " (not pure)") + "\n";
  for (const auto& [i, d] : c.deletions) text += "  d_" + std::to_string(i) + " -> " + d.to_string() + "\n";
  return text;
}

json closure_json(const DoodleClosure& c) {
  return {{"representative", c.rep.to_string()},
          {"components", c.components},
          {"strands", c.strands},
          {"crossings", c.crossings()}};
}

MilnorWord parse_milnor(const std::string& text, int degree) {
  return MilnorWord(degree, parse_free_expression(text, milnor_alphabet(degree)));
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"twinlab: exact computation in twin groups", "twinlab"};
  app.footer(kConventions);
  app.require_subcommand(1);

  // Word to word.
  auto* reduce = command(app, "reduce", "Tits-reduced (geodesic) word");
  add_word_input(reduce);
  on_words(reduce, "reduce", std::nullopt, [](const TwinWord& w) { return word_outcome(tits_reduce(w)); });

  auto* nf = command(app, "normal-form", "Lexicographically least geodesic word");
  add_word_input(nf);
  on_words(nf, "normal-form", std::nullopt, [](const TwinWord& w) { return word_outcome(normal_form(w)); });

  auto* eq = command(app, "equal", "Decide equality of two twins (exit 1 if different)");
  add_n(eq);
  eq->add_option("words", opt_.words, "Two twin expressions")->expected(2)->required();
  eq->callback([this] {
    action_ = [this] {
      const auto start = std::chrono::steady_clock::now();
      const TwinWord u = parse_word(opt_.words[0], std::nullopt);
      const TwinWord w = parse_word(opt_.words[1], std::nullopt);
      const bool same = equal(u, w);
      Outcome o{{{"equal", same}, {"normal_forms", {normal_form(u).to_string(), normal_form(w).to_string()}}},
                {},
                same ? "equal" : "not equal",
                same};
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return emit("equal", opt_.words, {o}, ms);
    };
  });

  auto* perm = command(app, "perm", "Permutation nu(w)");
  add_word_input(perm);
  on_words(perm, "perm", std::nullopt, [](const TwinWord& w) {
    const Permutation p = nu(w);
    return Outcome{{{"images", p.images()}, {"cycles", p.to_cycle_string()}, {"pure", p.is_identity()}},
                   {},
                   p.to_cycle_string(),
                   true};
  });

  auto* pure = command(app, "is-pure", "Whether nu(w) is the identity (exit 1 if not)");
  add_word_input(pure);
  on_words(pure, "is-pure", std::nullopt, [](const TwinWord& w) {
    const bool p = is_pure(w);
    return Outcome{{{"pure", p}}, {}, p ? "pure" : "not pure", p};
  });

  auto* del = command(app, "delete", "Face map d_i: delete the strand at position i+1");
  add_word_input(del);
  del->add_option("--index,-i", opt_.index, "0-based face index")->required();
  on_words(del, "delete", std::nullopt, [this](const TwinWord& w) { return word_outcome(delete_strand(w, opt_.index)); });

  auto* cof = command(app, "coface", "Coface map d^i: insert a strand between positions i and i+1");
  add_word_input(cof);
  cof->add_option("--index,-i", opt_.index, "0-based coface index")->required();
  cof->add_option("--variant", opt_.variant, "standard: t_i -> t_{i+1} t_i t_{i+1}; mirror: t_i -> t_i t_{i+1} t_i")
      ->check(CLI::IsMember({"standard", "mirror"}));
  on_words(cof, "coface", std::nullopt,
           [this](const TwinWord& w) { return word_outcome(coface(w, opt_.index, variant())); });

  auto* dbl = command(app, "double", "Degeneracy s_i: double the strand at position i+1");
  add_word_input(dbl);
  dbl->add_option("--index,-i", opt_.index, "0-based degeneracy index")->required();
  on_words(dbl, "double", std::nullopt, [this](const TwinWord& w) { return word_outcome(double_strand(w, opt_.index)); });

  // Randomized identity suites.
  auto* ids = command(app, "verify-identities", "Simplicial, bi-Delta and composition identities on random words");
  ids->add_option("--n", opt_.n, "Number of strands")->required()->check(CLI::Range(2, kMaxIdentityStrands));
  ids->add_option("--samples", opt_.samples, "Cases per identity (default 1000)");
  ids->add_option("--maxlen", opt_.maxlen, "Maximum random word length (default 12)");
  ids->add_option("--seed", opt_.seed, "Random seed");
  on_plain(ids, "verify-identities", [this] {
    return identity_outcome(
        verify_simplicial_identities(*opt_.n, opt_.samples.value_or(1000), opt_.seed, opt_.maxlen.value_or(12)));
  });

  // Brunnian and decomposable twins.
  auto* brun = command(app, "brunnian", "Brunnian certificate (exit 1 if not Brunnian)");
  add_word_input(brun);
  on_words(brun, "brunnian", std::nullopt, [](const TwinWord& w) {
    const BrunnianCertificate c = is_brunnian(w);
    return Outcome{{{"brunnian", c.valid}}, brunnian_json(c), brunnian_text(c), c.valid};
  });

  auto* kdec = command(app, "k-decomposable", "Whether deleting any k strands trivializes w (exit 1 if not)");
  add_word_input(kdec);
  kdec->add_option("--k", opt_.k, "Number of deleted strands, 1..n-1")->required();
  on_words(kdec, "k-decomposable", std::nullopt, [this](const TwinWord& w) {
    const bool d = is_k_decomposable(w, opt_.k);
    return Outcome{{{"k", opt_.k}, {"decomposable", d}}, {}, d ? "decomposable" : "not decomposable", d};
  });

  auto* phi = command(app, "phi", "Retraction of PT_n onto D_{n-3,n}");
  add_word_input(phi);
  on_words(phi, "phi", std::nullopt, [](const TwinWord& w) { return word_outcome(phi_decomposable(w)); });

  auto* cohen = command(app, "cohen", "Whether all strand deletions agree (exit 1 if not)");
  add_word_input(cohen);
  on_words(cohen, "cohen", std::nullopt, [](const TwinWord& w) {
    const bool c = is_cohen(w);
    const bool p = c && is_pure(w);
    json deletions = json::array();
    for (int i = 0; i < w.strands() && w.strands() >= 2; ++i) deletions.push_back(normal_form(delete_strand(w, i)).to_string());
    return Outcome{{{"cohen", c}, {"pure_cohen", p}},
                   {{"deletions", deletions}},
                   std::string(c ? (p ? "pure Cohen" : "Cohen") : "not Cohen"),
                   c};
  });

  auto* lift = command(app, "lift", "Pure Cohen twin on --to strands whose iterated d_0 image is the input");
  add_word_input(lift);
  lift->add_option("--to", opt_.target, "Target strand count")->required();
  on_words(lift, "lift", std::nullopt, [this](const TwinWord& u) { return word_outcome(cohen_lift(u, opt_.target)); });

  auto* dec = command(app, "decompose-pt4", "Brun(T_4) part and cyclic exponents of a pure twin in T_4");
  add_word_input(dec);
  on_words(dec, "decompose-pt4", 4, [](const TwinWord& w) {
    const Pt4Decomposition d = decompose_pt4(w);
    std::string text = "brun " + d.brun.to_string() + "\nexponents";
    for (int e : d.exponents) text += " " + std::to_string(e);
    return Outcome{{{"brun", d.brun.to_string()}, {"exponents", d.exponents}},
                   {{"reassembled", normal_form(reassemble(d)).to_string()}, {"brunnian", is_brunnian(d.brun).valid}},
                   text,
                   true};
  });

  auto* rw = command(app, "rewrite-pt4", "Express a pure twin in T_4 in the free basis x1..x7");
  add_word_input(rw);
  on_words(rw, "rewrite-pt4", 4, [](const TwinWord& w) {
    const FreeWord f = rewrite_pt4(w);
    return Outcome{{{"x_word", f.to_string()}}, {}, f.to_string(), true};
  });

  auto* qp = command(app, "q-presentation", "Generators q_1..q_n of T_{n+1} and their relations");
  qp->add_option("--n", opt_.n, "Number of q generators")->required()->check(CLI::Range(2, 12));
  on_plain(qp, "q-presentation", [this] {
    const QPresentation q = q_presentation(*opt_.n);
    Outcome o = report_outcome(q.report);
    json gens = json::array();
    std::string text;
    for (std::size_t k = 0; k < q.generators.size(); ++k) {
      gens.push_back(q.generators[k].to_string());
      text += "q" + std::to_string(k + 1) + " = " + q.generators[k].to_string() + "\n";
    }
    o.result["generators"] = gens;
    o.text = text + o.text;
    return o;
  });

  // Milnor's construction and theta.
  auto* milnor = command(app, "milnor", "Milnor's F[S^2] and the homomorphism theta");
  milnor->require_subcommand(1);
  auto milnor_word = [this](CLI::App* sub) {
    sub->add_flag("--json", opt_.json, "Emit JSON");
    sub->add_option("--degree", opt_.degree, "Simplicial degree n")->required()->check(CLI::Range(0, kMaxMilnorDegree));
    sub->add_option("words", opt_.words, "Words in x{i}{j}, 0 <= i < j <= n-1")->required();
  };
  auto milnor_map = [this](const std::string& name, const std::function<Outcome(const MilnorWord&)>& fn) {
    return [this, name, fn] {
      action_ = [this, name, fn] {
        const auto start = std::chrono::steady_clock::now();
        std::vector<Outcome> outcomes;
        for (const auto& w : opt_.words) outcomes.push_back(fn(parse_milnor(w, opt_.degree)));
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return emit(name, opt_.words, outcomes, ms);
      };
    };
  };
  auto milnor_result = [](const MilnorWord& w) {
    return Outcome{{{"degree", w.degree}, {"word", w.to_string()}}, {}, w.to_string(), true};
  };

  auto* mface = milnor->add_subcommand("face", "Face d_k, 0 <= k <= n");
  milnor_word(mface);
  mface->add_option("--index,-i", opt_.index, "0-based face index")->required();
  mface->callback(milnor_map("milnor face", [this, milnor_result](const MilnorWord& w) {
    return milnor_result(m_face(opt_.index, w));
  }));

  auto* mdeg = milnor->add_subcommand("degen", "Degeneracy s_k, 0 <= k <= n");
  milnor_word(mdeg);
  mdeg->add_option("--index,-i", opt_.index, "0-based degeneracy index")->required();
  mdeg->callback(milnor_map("milnor degen", [this, milnor_result](const MilnorWord& w) {
    return milnor_result(m_degeneracy(opt_.index, w));
  }));

  auto* mtheta = milnor->add_subcommand("theta", "theta: degree n lands in PT_{n+1}");
  milnor_word(mtheta);
  mtheta->add_option("--max-degree", opt_.theta_degree, "Degree cap for theta");
  mtheta->callback(milnor_map("milnor theta", [this](const MilnorWord& w) {
    return word_outcome(theta(w, opt_.theta_degree));
  }));

  auto* mk = milnor->add_subcommand("k-gens", "Generators theta(x_ij) of K_n");
  mk->add_flag("--json", opt_.json, "Emit JSON");
  mk->add_option("--degree", opt_.degree, "Simplicial degree n")->required();
  mk->add_option("--max-degree", opt_.theta_degree, "Degree cap for theta");
  on_plain(mk, "milnor k-gens", [this] {
    const auto gens = k_generators(opt_.degree, opt_.theta_degree);
    json list = json::array();
    std::string text;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const MilnorGen g = milnor_gen(opt_.degree, static_cast<int>(s));
      const std::string name = milnor_alphabet(opt_.degree)->name(static_cast<int>(s));
      list.push_back({{"generator", name}, {"i", g.i}, {"j", g.j}, {"word", gens[s].to_string()}});
      text += name + " -> " + gens[s].to_string() + "\n";
    }
    return Outcome{{{"degree", opt_.degree}, {"strands", opt_.degree + 1}, {"generators", list}}, {}, text, true};
  });

  auto* mv = milnor->add_subcommand("verify-k", "Ranks of K_2, K_3, K_4 and the identities behind them");
  mv->add_flag("--json", opt_.json, "Emit JSON");
  on_plain(mv, "milnor verify-k", [] { return report_outcome(verify_k3_k4()); });

  auto* mid = milnor->add_subcommand("identities", "Simplicial identities on all generators up to a degree");
  mid->add_flag("--json", opt_.json, "Emit JSON");
  mid->add_option("--max-degree", opt_.max_degree, "Largest degree checked")->check(CLI::Range(2, kMaxMilnorDegree - 2));
  on_plain(mid, "milnor identities", [this] { return identity_outcome(verify_milnor_identities(opt_.max_degree)); });

  auto* probe = command(app, "probe-b2", "Random Moore 3-cycles of F[S^2] and their d_0 images");
  probe->add_option("--maxlen", opt_.maxlen, "Maximum free length (default 12)");
  probe->add_option("--samples", opt_.samples, "Kernel samples to collect (default 10000)");
  probe->add_option("--seed", opt_.seed, "Random seed");
  on_plain(probe, "probe-b2", [this] {
    const std::size_t samples = opt_.samples.value_or(10000);
    const B2ProbeReport r = b2_probe(opt_.maxlen.value_or(12), samples, opt_.seed);
    const bool ok = r.ok() && r.kernel_samples == samples;
    std::ostringstream text;
    text << r.kernel_samples << " kernel samples from " << r.attempts << " attempts, " << r.nontrivial.size()
         << " nontrivial d_0 images\n";
    for (const auto& s : r.nontrivial) text << "  " << s << "\n";
    return Outcome{{{"attempts", r.attempts},
                    {"kernel_samples", r.kernel_samples},
                    {"nontrivial", r.nontrivial},
                    {"passed", ok}},
                   {},
                   text.str(),
                   ok};
  });

  // Doodles.
  auto* clo = command(app, "closure", "Canonical closure representative and component count");
  add_word_input(clo);
  on_words(clo, "closure", std::nullopt, [](const TwinWord& w) {
    const DoodleClosure c = closure(w);
    return Outcome{closure_json(c), {},
                   c.rep.to_string() + "\ncomponents " + std::to_string(c.components) + ", crossings " +
                       std::to_string(c.crossings()),
                   true};
  });

  auto* mc = command(app, "min-crossings", "Crossings of the minimal diagram of the closure of a pure twin");
  add_word_input(mc);
  on_words(mc, "min-crossings", std::nullopt, [](const TwinWord& w) {
    const int c = min_crossings(w);
    return Outcome{{{"crossings", c}, {"representative", cyclic_reduce(w).to_string()}}, {}, std::to_string(c), true};
  });

  auto* bd = command(app, "brunnian-doodle", "Whether a pure twin closes to a Brunnian doodle (exit 1 if not)");
  add_word_input(bd);
  on_words(bd, "brunnian-doodle", std::nullopt, [](const TwinWord& w) {
    const DoodleCertificate c = brunnian_closure_certificate(w);
    json deletions = json::array();
    for (const auto& [i, t] : c.trivial_deletions) deletions.push_back({{"index", i}, {"trivial_closure", t}});
    json cert = closure_json(c.doodle);
    cert["brunnian"] = brunnian_json(c.brunnian);
    cert["deletions"] = deletions;
    std::string text = std::string(c.certified ? "certified" : "not certified") + ": " +
                       std::to_string(c.doodle.components) + " components on " + std::to_string(w.strands()) +
                       " strands\n" + brunnian_text(c.brunnian);
    return Outcome{{{"certified", c.certified}, {"components", c.doodle.components}}, cert, text, c.certified};
  });

  // Everything at once.
  auto* paper = command(app, "verify-paper", "Run the full acceptance table");
  paper->add_option("--seed", opt_.seed, "Random seed");
  on_plain(paper, "verify-paper", [this] {
    const auto results = run_paper_checks(opt_.seed);
    json rows = json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed();
      json row = report_json(r.report);
      row["id"] = r.id;
      row["title"] = r.title;
      row["passed"] = r.passed();
      row["seconds"] = r.seconds;
      row["budget_seconds"] = r.budget_seconds;
      rows.push_back(row);
      text << (r.passed() ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "\n";
      for (const auto& c : r.report.results) {
        text << "        " << (c.passed ? "ok    " : "FAIL  ") << c.name;
        if (!c.detail.empty()) text << "  [" << c.detail << "]";
        text << "\n";
      }
      if (r.report.ok() && !r.passed()) text << "        FAIL  over the time budget\n";
    }
    text << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return Outcome{{{"seed", opt_.seed}, {"passed", all}, {"criteria", rows}}, {}, text.str(), all};
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kTrue : kUsage;
  }
  if (!action_) {
    err_ << app.help();
    return kUsage;
  }
  try {
    return action_();
  } catch (const ParseError& e) {
    err_ << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err_ << "usage error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err_ << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err_ << "out of range: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace twinlab::cli
