// Acceptance suite: one PASS/FAIL line per criterion. Seeds, population sizes
// and time budgets are fixed below.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "nearposet/admissibility.hpp"
#include "nearposet/error.hpp"
#include "nearposet/generate.hpp"
#include "nearposet/propositions.hpp"

using namespace nearposet;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kRandomPerSize = 10000;        // random Θ for |P| = 4 and 5
constexpr int kRandomT1 = 1000;              // random T1 families on |X| = 4
constexpr int kRandomSpaces = 1500;          // random families on |X| = 4
constexpr int kPatchingRandom = 2000;        // extra literal Θ on |P| = 4
constexpr int kFrameSamples = 2000;          // sampled up-set Θ per 6-element lattice
constexpr double kBudgetSpectrum = 60.0;     // seconds
constexpr double kBudgetCompact = 120.0;
constexpr double kBudgetFrames = 300.0;

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;
  double seconds = 0;

  void fail(const std::string& what) {
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
  }
};

struct Timer {
  double& sink;
  Clock::time_point start = Clock::now();
  explicit Timer(double& s) : sink(s) {}
  ~Timer() { sink += std::chrono::duration<double>(Clock::now() - start).count(); }
};

std::string describe(const NearnessInstance& n) {
  std::ostringstream os;
  const Poset& p = n.poset();
  os << "P=" << p.format(p.all()) << " order=[";
  bool first = true;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for_each_bit(p.up(a) & ~bit(a), [&](std::size_t b) {
      os << (first ? "" : " ") << p.name(a) << "<" << p.name(b);
      first = false;
    });
  }
  os << "] theta=[";
  for (std::size_t i = 0; i < n.generators().size(); ++i) os << (i ? " " : "") << p.format(n.generators()[i]);
  os << "]";
  if (n.closure() == ThetaClosure::refinement) os << " (refinement-closed)";
  return os.str();
}

int report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << "  " << title << ": " << detail << std::endl;
  return pass ? 0 : 1;
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << " s";
  return os.str();
}

std::string with_examples(std::string detail, const Tally& t) {
  for (const auto& e : t.examples) detail += "\n      " + e;
  return detail;
}

// Every literal Θ on every poset with at most max_n elements.
void for_each_literal(std::size_t max_n, const std::function<void(const NearnessInstance&)>& f) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    const std::size_t subsets = std::size_t{1} << n;
    for (const Poset& p : gen::posets_up_to_iso(n)) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
        std::vector<Mask> theta;
        for (Mask c = 0; c < subsets; ++c) {
          if ((code >> c) & 1U) theta.push_back(c);
        }
        f(NearnessInstance(p, std::move(theta)));
      }
    }
  }
}

void for_each_random(std::size_t n, int count, std::uint64_t seed,
                     const std::function<void(const NearnessInstance&)>& f) {
  std::mt19937_64 rng(seed);
  const auto& posets = gen::posets_up_to_iso(n);
  std::uniform_int_distribution<std::size_t> pick(0, posets.size() - 1);
  std::uniform_real_distribution<double> density(0.02, 0.6);
  for (int i = 0; i < count; ++i) {
    const Poset& p = posets[pick(rng)];
    f(NearnessInstance(p, gen::random_family(rng, p, density(rng))));
  }
}

// Refinement-closed Θ on every poset with n elements; these cover every Θ^≤.
void for_each_closed(std::size_t n, const std::function<void(const NearnessInstance&)>& f) {
  for (const Poset& p : gen::posets_up_to_iso(n)) {
    for (auto& gens : gen::refinement_closed_families(p)) f(NearnessInstance(p, std::move(gens), ThetaClosure::refinement));
  }
}

// Runs the named checks; a failure is recorded, a skip is counted apart.
struct CheckRunner {
  std::vector<const NamedCheck*> checks;
  std::map<std::string, std::size_t> held;

  explicit CheckRunner(const std::vector<std::string>& names) {
    for (const auto& name : names) checks.push_back(&find_instance_check(name));
  }

  void run(const NearnessInstance& n, Tally& t) {
    CheckContext ctx(n);
    for (const NamedCheck* c : checks) {
      const CheckResult r = run_check(*c, ctx);
      if (r.outcome == Outcome::fail) t.fail(c->name + " on " + describe(n) + ": " + r.detail);
      if (r.outcome == Outcome::pass) ++held[c->name];
      if (r.outcome == Outcome::skipped && r.detail.rfind("bound", 0) == 0) t.fail(c->name + ": " + r.detail);
    }
  }

  std::string held_summary() const {
    std::string out;
    for (const auto& [name, count] : held) out += (out.empty() ? "" : ", ") + name + " " + std::to_string(count);
    return out;
  }
};

std::vector<Mask> sorted_family(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---- criteria 1, 2, 3, 9, 12 share the main population ---------------------

struct MainPopulation {
  Tally spectrum, degenerate, wallman, star_regular, priming;
  CheckRunner regular{{"star-regular-spectrum", "regularisation-spectrum", "star-regular-admissible"}};
  std::size_t divergent = 0;
  std::vector<std::string> divergent_list;

  void visit(const NearnessInstance& n, bool main) {
    if (main) {
      ++spectrum.instances;
      {
        Timer t(spectrum.seconds);
        const std::vector<Mask>& got = n.spectrum().masks;
        std::vector<Mask> want;
        for (const ElementSet& e : spectrum_oracle(n)) want.push_back(e.bits());
        std::sort(want.begin(), want.end());
        if (got != want) spectrum.fail(describe(n));
      }
      ++degenerate.instances;
      {
        Timer t(degenerate.seconds);
        const DegenerateReport d = classify_degenerate(n);
        if (!d.consistent()) degenerate.fail(describe(n) + ": " + d.violated.front());
      }
      ++wallman.instances;
      {
        Timer t(wallman.seconds);
        if (!wallman_equivalent_forms(n).agree()) wallman.fail(describe(n));
      }
    }
    ++star_regular.instances;
    {
      Timer t(star_regular.seconds);
      regular.run(n, star_regular);
    }
    ++priming.instances;
    {
      Timer t(priming.seconds);
      const Regularisation a = regularise(n, Priming::stage_local);
      const Regularisation b = regularise(n, Priming::original);
      if (sorted_family(a.family) != sorted_family(b.family)) {
        ++divergent;
        divergent_list.push_back(describe(n));
      }
    }
  }
};

// ---- criterion 4 -----------------------------------------------------------

Tally compact_criterion() {
  Tally t;
  Timer timer(t.seconds);
  CheckRunner runner({"compact-cover-criterion", "compact-order-criterion"});
  for_each_literal(4, [&](const NearnessInstance& n) {
    ++t.instances;
    runner.run(n, t);
  });
  return t;
}

// ---- criterion 5 -----------------------------------------------------------

struct RoundTripTally {
  Tally t;
  std::size_t families = 0;
  std::size_t hypothesis_failed = 0;

  void visit(const FiniteSpace& s, const NearnessInstance& n, const std::string& label) {
    ++t.instances;
    const RoundTripReport r = roundtrip_t1(s, n);
    if (!r.hypotheses()) {
      ++hypothesis_failed;
      return;
    }
    if (!r.recovered()) {
      std::string sets;
      for (Mask m : s.sets()) sets += s.format_points(m) + " ";
      t.fail(label + " sets " + sets);
    }
  }
};

RoundTripTally t1_criterion() {
  RoundTripTally rt;
  Timer timer(rt.t.seconds);
  auto visit_family = [&](std::size_t points, const std::vector<Mask>& sets, std::uint64_t seed) {
    ++rt.families;
    const FiniteSpace s(points, sets, FamilyRole::subbasis);
    rt.visit(s, cover_family(s), "all covers");
    for (std::size_t extra = 0; extra <= 2; ++extra) {
      rt.visit(s, cover_family(s, CoverMode::sample(extra, seed + extra)), "sampled covers");
    }
  };
  for (std::size_t x = 0; x <= 3; ++x) {
    for (const auto& fam : gen::t1_families(x)) visit_family(x, fam, kSeed + rt.families);
  }
  std::mt19937_64 rng(kSeed + 5);
  for (int i = 0; i < kRandomT1; ++i) visit_family(4, gen::random_t1_family(rng, 4, 6), kSeed + rt.families);
  return rt;
}

// ---- criteria 6 and 7 --------------------------------------------------------

struct RestrictionTallies {
  Tally patching, restrictions;
  std::size_t empty_reproduced = 0;
  CheckRunner patch{{"cover-patching"}};
  CheckRunner restrict_checks{{"stars-inside-restrictions", "closure-restriction-inclusions",
                               "closure-restriction-equality", "star-closure-inclusions"}};
  std::size_t directed_nondegenerate = 0;

  void visit(const NearnessInstance& n) {
    ++patching.instances;
    {
      Timer t(patching.seconds);
      patch.run(n, patching);
      if (n.theta_empty()) {
        bool ok = RestrictedFamily(n, 0).members().empty();
        for (std::size_t p = 0; p < n.size(); ++p) {
          ok = ok && RestrictedFamily(n, bit(p)).members().size() == (std::size_t{1} << n.size());
        }
        if (ok) {
          ++empty_reproduced;
        } else {
          patching.fail("empty family not reproduced on " + describe(n));
        }
      }
    }
    ++restrictions.instances;
    {
      Timer t(restrictions.seconds);
      restrict_checks.run(n, restrictions);
      if (is_theta_directed(n) && is_non_degenerate(n)) ++directed_nondegenerate;
    }
  }
};

// ---- criterion 8 -------------------------------------------------------------

struct FrameTally {
  Tally t;
  std::size_t lattices = 0;
  std::size_t pp_true = 0;
};

FrameTally frame_criterion() {
  FrameTally ft;
  Timer timer(ft.t.seconds);
  auto visit = [&](const FiniteFrame& f, const NearnessInstance& n) {
    ++ft.t.instances;
    const PPEquivReport r = pp_equiv_check(f, n);
    if (!r.theta_upset) {
      ft.t.fail("family not an up-set: " + describe(n));
      return;
    }
    if (r.picado_pultr) ++ft.pp_true;
    if (!r.agree()) ft.t.fail(describe(n));
  };
  for (std::size_t size = 1; size <= 5; ++size) {
    for (const FiniteFrame& f : gen::distributive_lattices(size)) {
      ++ft.lattices;
      for (auto& gens : gen::refinement_closed_families(f.poset())) {
        visit(f, NearnessInstance(f.poset(), std::move(gens), ThetaClosure::refinement));
      }
    }
  }
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> density(0.02, 0.4);
  for (const FiniteFrame& f : gen::distributive_lattices(6)) {
    ++ft.lattices;
    for (int i = 0; i < kFrameSamples; ++i) {
      visit(f, NearnessInstance(f.poset(), gen::random_family(rng, f.poset(), density(rng)), ThetaClosure::refinement));
    }
  }
  return ft;
}

// ---- criterion 10 ------------------------------------------------------------

struct SpaceTally {
  Tally t;
  std::size_t spaces = 0;
  std::map<std::string, std::size_t> held;
  std::vector<const SpaceCheck*> per_space, per_theta;

  SpaceTally() {
    for (const char* name : {"near-for-all-covers", "restriction-for-all-covers", "subbasis-order",
                             "basis-covers-are-order-covers", "td-order-covers-are-covers"}) {
      per_space.push_back(&find_space_check(name));
    }
    for (const char* name : {"compatible-characterisation", "locally-uniform-base", "locally-uniform-regular-points",
                             "compatible-regular-points-admissible"}) {
      per_theta.push_back(&find_space_check(name));
    }
  }

  void run(const std::vector<const SpaceCheck*>& checks, const FiniteSpace& s, const NearnessInstance& n) {
    CheckContext ctx(n);
    for (const SpaceCheck* c : checks) {
      const CheckResult r = run_check(*c, s, ctx);
      if (r.outcome == Outcome::pass) ++held[c->name];
      if (r.outcome == Outcome::fail || (r.outcome == Outcome::skipped && r.detail.rfind("bound", 0) == 0)) {
        std::string sets;
        for (Mask m : s.sets()) sets += s.format_points(m) + " ";
        t.fail(c->name + " on sets " + sets + "theta " + describe(n) + ": " + r.detail);
      }
    }
  }

  void visit(std::size_t points, const std::vector<Mask>& sets, std::mt19937_64& rng) {
    for (FamilyRole role : {FamilyRole::subbasis, FamilyRole::basis}) {
      std::optional<FiniteSpace> made;
      try {
        made.emplace(points, sets, role);
      } catch (const InvalidInput&) {
        continue;  // not a basis
      }
      const FiniteSpace& s = *made;
      ++spaces;
      const NearnessInstance all = cover_family(s);
      run(per_space, s, all);
      std::vector<NearnessInstance> thetas{all, space_instance(s, minimal_covers(s))};
      for (std::uint64_t k = 0; k < 2; ++k) thetas.push_back(cover_family(s, CoverMode::sample(k + 1, rng())));
      std::uniform_real_distribution<double> density(0.05, 0.5);
      for (int k = 0; k < 3; ++k) thetas.push_back(space_instance(s, gen::random_family(rng, s.family(), density(rng))));
      for (const auto& n : thetas) {
        ++t.instances;
        run(per_theta, s, n);
      }
    }
  }

  std::string held_summary() const {
    std::string out;
    for (const auto& [name, count] : held) out += (out.empty() ? "" : ", ") + name + " " + std::to_string(count);
    return out;
  }
};

SpaceTally space_criterion() {
  SpaceTally st;
  Timer timer(st.t.seconds);
  std::mt19937_64 rng(kSeed + 10);
  for (std::size_t x = 0; x <= 3; ++x) {
    const std::size_t subsets = std::size_t{1} << x;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
      std::vector<Mask> sets;
      for (Mask c = 0; c < subsets; ++c) {
        if ((code >> c) & 1U) sets.push_back(c);
      }
      st.visit(x, sets, rng);
    }
  }
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_int_distribution<Mask> subset(0, 15);
  for (int i = 0; i < kRandomSpaces; ++i) {
    std::vector<Mask> sets;
    if (i % 2 == 0) {
      sets = gen::random_t1_family(rng, 4, 6);
    } else {
      const std::size_t k = count(rng);
      while (sets.size() < k) {
        const Mask m = subset(rng);
        if (std::find(sets.begin(), sets.end(), m) == sets.end()) sets.push_back(m);
      }
    }
    st.visit(4, sets, rng);
  }
  return st;
}

// ---- criterion 11 ------------------------------------------------------------

struct CliCase {
  std::string name, args, golden, env, stderr_text;
  int exit = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<CliCase> read_cases(const std::string& path) {
  std::vector<CliCase> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '|')) f.push_back(trim(field));
    f.resize(6);
    out.push_back({f[0], f[2], f[3], f[4], f[5], std::stoi(f[1])});
  }
  return out;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_tool(const CliCase& c, const std::string& err_file) {
  const std::string cmd = "cd '" FIXTURES_DIR "' && " + c.env + (c.env.empty() ? "" : " ") + "'" NEARNESS_TOOL "' " +
                          c.args + " 2>'" + err_file + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tally cli_criterion() {
  Tally t;
  Timer timer(t.seconds);
  const std::string err_file = (std::filesystem::temp_directory_path() / "nearness_acceptance_stderr.txt").string();
  for (const CliCase& c : read_cases(GOLDEN_DIR "/cases.txt")) {
    ++t.instances;
    const Run a = run_tool(c, err_file);
    const std::string err_a = slurp(err_file);
    const Run b = run_tool(c, err_file);
    const std::string err_b = slurp(err_file);
    if (a.code != c.exit) {
      t.fail(c.name + ": exit " + std::to_string(a.code) + ", expected " + std::to_string(c.exit));
    } else if (a.out != b.out || a.code != b.code || err_a != err_b) {
      t.fail(c.name + ": output differs between runs");
    } else if (!c.golden.empty() && slurp(GOLDEN_DIR "/" + c.golden) != a.out) {
      t.fail(c.name + ": differs from " + c.golden);
    } else if (!c.stderr_text.empty() && err_a.find(c.stderr_text) == std::string::npos) {
      t.fail(c.name + ": stderr lacks '" + c.stderr_text + "'");
    }
  }
  std::remove(err_file.c_str());
  return t;
}

}  // namespace

int main() {
  std::cout << "seed: " << kSeed << std::endl;
  int failed = 0;

  MainPopulation pop;
  for_each_literal(3, [&](const NearnessInstance& n) { pop.visit(n, true); });
  for_each_random(4, kRandomPerSize, kSeed + 4, [&](const NearnessInstance& n) { pop.visit(n, true); });
  for_each_random(5, kRandomPerSize, kSeed + 5, [&](const NearnessInstance& n) { pop.visit(n, true); });
  for_each_closed(4, [&](const NearnessInstance& n) { pop.visit(n, false); });

  // Named instances that must satisfy the star-regularity hypotheses.
  Tally named;
  {
    const NearnessInstance i1 = testing::i1();
    const FiniteSpace i5 = testing::i5();
    const NearnessInstance i5_single = space_instance(i5, {i5.family().all()});
    for (const auto& n : {i1, i5_single}) {
      CheckContext ctx(n);
      for (const char* name : {"star-regular-spectrum", "regularisation-spectrum"}) {
        const CheckResult r = run_check(find_instance_check(name), ctx);
        if (r.outcome != Outcome::pass) named.fail(std::string(name) + " not established on " + describe(n));
      }
    }
  }

  {
    const Tally& t = pop.spectrum;
    const bool ok = t.failures == 0 && t.seconds < kBudgetSpectrum;
    failed += report(1, "spectrum equals the minimal Cauchy sets", ok,
                     with_examples(std::to_string(t.instances) + " instances (all Θ for |P|<=3, " +
                                       std::to_string(kRandomPerSize) + " random Θ each for |P|=4,5), " +
                                       std::to_string(t.failures) + " mismatches, " + seconds(t.seconds) +
                                       " (budget " + seconds(kBudgetSpectrum) + ")",
                                   t));
  }
  failed += report(2, "degenerate-case equations", pop.degenerate.failures == 0,
                   with_examples(std::to_string(pop.degenerate.instances) + " instances, " +
                                     std::to_string(pop.degenerate.failures) + " violations",
                                 pop.degenerate));
  failed += report(3, "Wallman admissibility three-way agreement", pop.wallman.failures == 0,
                   with_examples(std::to_string(pop.wallman.instances) + " instances, " +
                                     std::to_string(pop.wallman.failures) + " disagreements",
                                 pop.wallman));

  {
    const Tally t = compact_criterion();
    const bool ok = t.failures == 0 && t.seconds < kBudgetCompact;
    failed += report(4, "cover and order criteria via the spectrum", ok,
                     with_examples(std::to_string(t.instances) + " instances (all Θ for |P|<=4, all C and pairs), " +
                                       std::to_string(t.failures) + " exceptions, " + seconds(t.seconds) +
                                       " (budget " + seconds(kBudgetCompact) + ")",
                                   t));
  }

  {
    const RoundTripTally rt = t1_criterion();
    const bool ok = rt.t.failures == 0 && rt.hypothesis_failed == 0;
    failed += report(5, "T1 round trip", ok,
                     with_examples(std::to_string(rt.families) + " T1 families (all on |X|<=3, " +
                                       std::to_string(kRandomT1) + " random on |X|=4), " +
                                       std::to_string(rt.t.instances) + " cover families, " +
                                       std::to_string(rt.hypothesis_failed) + " without the hypotheses, " +
                                       std::to_string(rt.t.failures) + " exceptions, " + seconds(rt.t.seconds),
                                   rt.t));
  }

  RestrictionTallies rest;
  for_each_literal(3, [&](const NearnessInstance& n) { rest.visit(n); });
  for_each_closed(4, [&](const NearnessInstance& n) { rest.visit(n); });
  for_each_random(4, kPatchingRandom, kSeed + 6, [&](const NearnessInstance& n) { rest.visit(n); });
  {
    const bool ok = rest.patching.failures == 0 && rest.empty_reproduced > 0;
    failed += report(6, "cover patching", ok,
                     with_examples(std::to_string(rest.patching.instances) +
                                       " instances (all Θ for |P|<=3, every refinement-closed Θ and " +
                                       std::to_string(kPatchingRandom) + " random Θ for |P|=4), " +
                                       "empty-family counterexample reproduced on " +
                                       std::to_string(rest.empty_reproduced) + " posets, " +
                                       std::to_string(rest.patching.failures) + " exceptions, " +
                                       seconds(rest.patching.seconds),
                                   rest.patching));
  }
  {
    const bool ok = rest.restrictions.failures == 0 && rest.directed_nondegenerate > 0;
    failed += report(7, "stars inside restrictions and closure inclusions", ok,
                     with_examples(std::to_string(rest.restrictions.instances) + " instances, equality cases on " +
                                       std::to_string(rest.directed_nondegenerate) +
                                       " directed non-degenerate instances, " +
                                       std::to_string(rest.restrictions.failures) + " exceptions, " +
                                       seconds(rest.restrictions.seconds),
                                   rest.restrictions));
  }

  {
    const FrameTally ft = frame_criterion();
    const bool ok = ft.t.failures == 0 && ft.t.seconds < kBudgetFrames;
    failed += report(8, "Picado-Pultr admissibility equals the sublocale condition", ok,
                     with_examples(std::to_string(ft.t.instances) + " (frame, up-set Θ) pairs over " +
                                       std::to_string(ft.lattices) + " distributive lattices (all Θ up to 5 elements, " +
                                       std::to_string(kFrameSamples) + " sampled per 6-element lattice), " +
                                       std::to_string(ft.pp_true) + " admissible, " + std::to_string(ft.t.failures) +
                                       " exceptions, " + seconds(ft.t.seconds) + " (budget " +
                                       seconds(kBudgetFrames) + ")",
                                   ft.t));
  }

  {
    const auto& held = pop.regular.held;
    const auto count = [&](const char* name) {
      auto it = held.find(name);
      return it == held.end() ? std::size_t{0} : it->second;
    };
    const bool ok = pop.star_regular.failures == 0 && named.failures == 0 &&
                    count("star-regular-spectrum") > 0 && count("regularisation-spectrum") > 0;
    Tally merged = pop.star_regular;
    for (const auto& e : named.examples) merged.fail(e);
    failed += report(9, "star-regular and regularised spectra", ok,
                     with_examples(std::to_string(pop.star_regular.instances) +
                                       " instances; hypotheses held: " + pop.regular.held_summary() +
                                       "; I1 and the single-cover I5 instance qualify: " +
                                       (named.failures == 0 ? "yes" : "no") + ", " +
                                       std::to_string(merged.failures) + " exceptions, " +
                                       seconds(pop.star_regular.seconds),
                                   merged));
  }

  {
    const SpaceTally st = space_criterion();
    failed += report(10, "concrete space propositions", st.t.failures == 0,
                     with_examples(std::to_string(st.spaces) + " spaces (every family on |X|<=3, " +
                                       std::to_string(kRandomSpaces) + " random on |X|=4), " +
                                       std::to_string(st.t.instances) + " families of covers; hypotheses held: " +
                                       st.held_summary() + "; " + std::to_string(st.t.failures) + " exceptions, " +
                                       seconds(st.t.seconds),
                                   st.t));
  }

  {
    const Tally t = cli_criterion();
    failed += report(11, "CLI golden files and exit codes", t.failures == 0 && t.instances > 0,
                     with_examples(std::to_string(t.instances) + " cases run twice, " + std::to_string(t.failures) +
                                       " mismatches, " + seconds(t.seconds),
                                   t));
  }

  {
    std::string detail = std::to_string(pop.priming.instances) + " instances, " + std::to_string(pop.divergent) +
                         " where the two primings give different families (informational), " +
                         seconds(pop.priming.seconds);
    for (std::size_t i = 0; i < pop.divergent_list.size() && i < 10; ++i) detail += "\n      " + pop.divergent_list[i];
    if (pop.divergent_list.size() > 10) detail += "\n      ...";
    std::ofstream out("priming_divergence.txt");
    for (const auto& d : pop.divergent_list) out << d << "\n";
    report(12, "regularisation priming probe", true, detail);
  }

  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
