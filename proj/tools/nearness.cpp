#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nearposet/admissibility.hpp"
#include "nearposet/error.hpp"
#include "nearposet/frames.hpp"
#include "nearposet/io.hpp"
#include "nearposet/propositions.hpp"
#include "nearposet/proximity.hpp"
#include "nearposet/spaces.hpp"

using namespace nearposet;

namespace {

enum Exit { kPass = 0, kViolated = 1, kInvalid = 2, kBound = 3 };

struct Loaded {
  io::Json json;
  io::FileKind kind;
  std::optional<io::InstanceFile> instance;
  std::optional<io::SpaceFile> space;

  const NearnessInstance& theta() const { return instance ? instance->instance : space->theta; }
};

Loaded load(const std::string& path) {
  Loaded l{io::read_json(path), io::FileKind::instance, std::nullopt, std::nullopt};
  l.kind = io::kind_of(l.json);
  if (l.kind == io::FileKind::space) {
    l.space.emplace(io::parse_space(l.json));
  } else {
    l.instance.emplace(io::parse_instance(l.json));
  }
  return l;
}

const io::SpaceFile& require_space(const Loaded& l) {
  if (!l.space) throw InvalidInput("this command needs a space file");
  return *l.space;
}

const char* yes(bool b) { return b ? "true" : "false"; }

// "{}" names the empty set.
Mask parse_set(const Poset& p, const std::string& list) {
  Mask m = 0;
  if (list == "{}") return m;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    m |= bit(p.require_index(name));
  }
  return m;
}

void print_members(std::ostream& out, const Poset& p, const std::vector<Mask>& members, const std::string& indent) {
  for (Mask c : members) out << indent << p.format(c) << "\n";
}

int cmd_check(const Loaded& l, bool json) {
  const NearnessInstance& n = l.theta();
  const AdmissibilityReport r = admissibility_report(n);
  const DegenerateReport d = classify_degenerate(n);
  if (json) {
    io::Json j;
    j["weakly_admissible"] = r.weakly_admissible;
    j["wallman"] = r.wallman;
    j["picado_pultr"] = r.picado_pultr;
    j["admissible"] = r.admissible;
    j["admissible_vacuous"] = r.admissible_vacuous;
    j["theta_in_order_covers"] = r.theta_in_order_covers;
    j["leq_equals_leq_theta"] = r.leq_equals_leq_theta;
    j["leq_equals_leq_theta_le"] = r.leq_equals_leq_theta_le;
    j["directed"] = is_theta_directed(n);
    j["upset"] = is_theta_upset(n);
    j["star_regular"] = is_star_regular(n);
    j["degenerate"] = d.fired;
    io::Json cx = io::Json::array();
    for (const auto& c : r.counterexamples) cx.push_back({{"property", c.property}, {"detail", c.detail}});
    j["counterexamples"] = cx;
    std::cout << j.dump(2) << "\n";
    return kPass;
  }
  std::cout << "elements: " << n.size() << "\n";
  std::cout << "listed members: " << n.generators().size() << "\n";
  std::cout << "closure: " << io::to_string(n.closure()) << "\n";
  for (const auto& f : d.fired) std::cout << "degenerate: " << f << "\n";
  std::cout << "weakly-admissible: " << yes(r.weakly_admissible) << "\n";
  std::cout << "wallman: " << yes(r.wallman) << "\n";
  std::cout << "picado-pultr: " << yes(r.picado_pultr) << "\n";
  std::cout << "admissible: " << yes(r.admissible) << "\n";
  std::cout << "admissible (vacuous empty join): " << yes(r.admissible_vacuous) << "\n";
  std::cout << "members are order covers: " << yes(r.theta_in_order_covers) << "\n";
  std::cout << "order equals theta order: " << yes(r.leq_equals_leq_theta) << "\n";
  std::cout << "order equals refined theta order: " << yes(r.leq_equals_leq_theta_le) << "\n";
  std::cout << "directed: " << yes(is_theta_directed(n)) << "\n";
  std::cout << "up-set: " << yes(is_theta_upset(n)) << "\n";
  std::cout << "star-regular: " << yes(is_star_regular(n)) << "\n";
  std::cout << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) std::cout << "  " << c.property << ": " << c.detail << "\n";
  return kPass;
}

int cmd_spectrum(const Loaded& l) {
  const NearnessInstance& n = l.theta();
  const Spectrum& sp = n.spectrum();
  std::cout << "points: " << sp.size() << "\n";
  for (std::size_t i = 0; i < sp.size(); ++i) std::cout << "  " << i << ": " << n.format(sp.masks[i]) << "\n";
  std::cout << "subbasic sets:\n";
  for (std::size_t p = 0; p < n.size(); ++p) {
    std::cout << "  " << n.poset().name(p) << ": [";
    bool first = true;
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (!sp.subbasic[p].test(i)) continue;
      std::cout << (first ? "" : ",") << i;
      first = false;
    }
    std::cout << "]\n";
  }
  return kPass;
}

int cmd_near(const Loaded& l, const std::string& set) {
  const NearnessInstance& n = l.theta();
  const Mask s = parse_set(n.poset(), set);
  const NearResult r = is_near(n, n.poset().set(s));
  std::cout << "set: " << n.format(s) << "\n";
  std::cout << "near: " << yes(r.near) << "\n";
  if (r.witness) std::cout << "witness: " << n.format(r.witness->bits()) << "\n";
  return kPass;
}

int cmd_star(const Loaded& l, std::size_t cover, const std::string& element) {
  const NearnessInstance& n = l.theta();
  if (cover >= n.generators().size()) {
    throw InvalidInput("--cover " + std::to_string(cover) + " is out of range; " +
                       std::to_string(n.generators().size()) + " listed members");
  }
  const std::size_t p = n.poset().require_index(element);
  const Mask c = n.generators()[cover];
  std::cout << "cover " << cover << ": " << n.format(c) << "\n";
  std::cout << "star at " << element << ": " << n.format(star_mask(n, c, p)) << "\n";
  return kPass;
}

int cmd_below(const Loaded& l) {
  const NearnessInstance& n = l.theta();
  const Poset& p = n.poset();
  const BelowRelation r = below_relations(n);
  std::size_t count = 0;
  std::cout << "uniformly below:\n";
  for (std::size_t a = 0; a < p.size(); ++a) {
    for_each_bit(r.above[a], [&](std::size_t b) {
      std::cout << "  " << p.name(a) << " ⊲ " << p.name(b) << "\n";
      ++count;
    });
  }
  std::cout << "pairs: " << count << "\n";
  std::cout << "lower preorder:\n";
  for (std::size_t a = 0; a < p.size(); ++a) {
    for_each_bit(r.lower_above[a], [&](std::size_t b) { std::cout << "  " << p.name(a) << " ⊴ " << p.name(b) << "\n"; });
  }
  std::cout << "transitive: " << yes(r.transitive()) << "\n";
  return kPass;
}

int cmd_restrict(const Loaded& l, const std::optional<std::string>& set, const std::optional<std::string>& star_of) {
  const NearnessInstance& n = l.theta();
  const Poset& p = n.poset();
  if (set.has_value() == star_of.has_value()) throw InvalidInput("restrict takes exactly one of --set and --star");
  if (star_of) {
    const std::size_t x = p.require_index(*star_of);
    std::vector<Mask> stars;
    for (const ElementSet& e : theta_star(n, x)) stars.push_back(e.bits());
    std::cout << "stars at " << *star_of << ": " << stars.size() << "\n";
    print_members(std::cout, p, stars, "  ");
    return kPass;
  }
  const Mask s = parse_set(p, *set);
  const RestrictedFamily r(n, s);
  const std::vector<Mask> members = r.members();
  std::cout << "restriction to " << p.format(s) << "\n";
  std::cout << "blocking sets (minimal):\n";
  print_members(std::cout, p, r.f_generators(), "  ");
  std::cout << "minimal members:\n";
  print_members(std::cout, p, r.minimal_members(), "  ");
  std::cout << "members: " << members.size() << "\n";
  print_members(std::cout, p, members, "  ");
  return kPass;
}

int cmd_regularize(const Loaded& l, const std::string& priming, const std::string& out_path) {
  const NearnessInstance& n = l.theta();
  Priming pr;
  if (priming == "stage-local") {
    pr = Priming::stage_local;
  } else if (priming == "original") {
    pr = Priming::original;
  } else {
    throw InvalidInput("--priming must be stage-local or original");
  }
  const Regularisation reg = regularise(n, pr);
  const std::string text = io::to_json(reg.instance(n)).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw InvalidInput("cannot write '" + out_path + "'");
    f << text;
    std::cout << "stages: " << reg.stages.size() << "\n";
    std::cout << "members: " << reg.family.size() << "\n";
  }
  return kPass;
}

int cmd_from_space(const Loaded& l) {
  const io::SpaceFile& s = require_space(l);
  std::cout << io::to_json(s.theta).dump(2) << "\n";
  return kPass;
}

int cmd_roundtrip(const Loaded& l, std::optional<std::size_t> sample, std::uint64_t seed) {
  const io::SpaceFile& s = require_space(l);
  std::optional<NearnessInstance> sampled;
  if (sample) {
    sampled.emplace(cover_family(s.space, CoverMode::sample(*sample, seed)));
    std::cout << "covers: sample with " << *sample << " extra, seed " << seed << "\n";
  } else {
    std::cout << "covers: " << (s.all_covers ? "all" : "listed") << "\n";
  }
  const NearnessInstance& n = sampled ? *sampled : s.theta;
  const RoundTripReport r = roundtrip_t1(s.space, n);
  std::cout << "t1: " << yes(r.t1) << "\n";
  std::cout << "members are covers: " << yes(r.theta_in_covers) << "\n";
  std::cout << "coinitial: " << yes(r.coinitial) << "\n";
  std::cout << "bijective: " << yes(r.bijective) << "\n";
  std::cout << "subbasis matches: " << yes(r.subbasis_matches) << "\n";
  std::cout << "order matches: " << yes(r.order_matches) << "\n";
  for (const auto& note : r.notes) std::cout << "note: " << note << "\n";
  if (!r.hypotheses()) {
    std::cout << "result: skipped: hypothesis\n";
    return kPass;
  }
  std::cout << "result: " << (r.recovered() ? "recovered" : "FAIL") << "\n";
  return r.recovered() ? kPass : kViolated;
}

void print_results(const std::vector<CheckResult>& results, std::size_t& failed, bool& bound) {
  for (const auto& r : results) {
    std::cout << r.name << ": ";
    if (r.outcome == Outcome::pass) {
      std::cout << "pass\n";
    } else if (r.outcome == Outcome::fail) {
      std::cout << "FAIL: " << r.detail << "\n";
      ++failed;
    } else {
      std::cout << "skipped: " << r.detail << "\n";
      if (r.detail.rfind("bound", 0) == 0) bound = true;
    }
  }
}

int cmd_frame_check(const Loaded& l) {
  if (!l.instance || !l.instance->frame) throw InvalidInput("frame-check needs an instance file with a frame field");
  const NearnessInstance& n = l.instance->instance;
  const FiniteFrame f(n.poset());
  const Poset& p = f.poset();
  std::cout << "bottom: " << p.name(f.bottom()) << "\n";
  std::cout << "top: " << p.name(f.top()) << "\n";
  std::cout << "implication:\n";
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < f.size(); ++b) {
      std::cout << "  " << p.name(a) << " -> " << p.name(b) << " = " << p.name(f.heyting(a, b)) << "\n";
    }
  }
  std::cout << "sublocales:\n";
  for (std::size_t a = 0; a < f.size(); ++a) {
    std::cout << "  closed " << p.name(a) << ": " << p.format(closed_sublocale(f, a).bits()) << "\n";
    std::cout << "  open " << p.name(a) << ": " << p.format(open_sublocale(f, a).bits()) << "\n";
  }
  const PPEquivReport r = pp_equiv_check(f, n);
  std::cout << "family is an up-set: " << yes(r.theta_upset) << "\n";
  std::cout << "picado-pultr: " << yes(r.picado_pultr) << "\n";
  std::cout << "members are frame covers: " << yes(r.theta_in_covers) << "\n";
  std::cout << "open sublocales match: " << yes(r.opens_match) << "\n";
  for (const auto& m : r.mismatches) std::cout << "  mismatch: " << m << "\n";
  std::size_t failed = 0;
  bool bound = false;
  print_results(run_frame_checks(f, n), failed, bound);
  return failed ? kViolated : bound ? kBound : kPass;
}

int cmd_props(const Loaded& l, std::uint64_t seed, std::size_t extra) {
  const CheckOptions options{seed, extra};
  std::cout << "seed: " << seed << "\n";
  std::size_t failed = 0;
  bool bound = false;
  print_results(run_instance_checks(l.theta(), options), failed, bound);
  if (l.space) print_results(run_space_checks(l.space->space, l.space->theta, options), failed, bound);
  if (l.instance && l.instance->frame) {
    print_results(run_frame_checks(FiniteFrame(l.instance->instance.poset()), l.instance->instance), failed, bound);
  }
  std::cout << "failed: " << failed << "\n";
  return failed ? kViolated : bound ? kBound : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite nearness posets: spectra, restrictions, admissibility and round trips."};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::string set, element, priming = "stage-local", out_path;
  std::optional<std::string> restrict_set, restrict_star;
  std::size_t cover = 0, extra = 2;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "instance or space file (JSON)")->required();
    return c;
  };
  auto* check = add("check", "admissibility report");
  check->add_flag("--json", json, "machine-readable output");
  auto* spectrum = add("spectrum", "points of the spectrum and the subbasic sets");
  auto* near = add("near", "decide whether a set is near");
  near->add_option("--set", set, "comma-separated element names, {} for none")->required();
  auto* star = add("star", "star of a listed member at an element");
  star->add_option("--cover", cover, "index of the listed member")->required();
  star->add_option("--element", element, "element name")->required();
  auto* below = add("below", "uniformly-below relation and its lower preorder");
  auto* restrict = add("restrict", "restricted family at a set, or the stars at an element");
  restrict->add_option("--set", restrict_set, "comma-separated element names");
  restrict->add_option("--star", restrict_star, "element name");
  auto* regularize = add("regularize", "instance file for the regularised family");
  regularize->add_option("--priming", priming, "stage-local or original")->capture_default_str();
  regularize->add_option("-o,--output", out_path, "write the instance file here");
  auto* from_space = add("from-space", "instance file for a space file");
  auto* roundtrip = add("roundtrip", "recover a T1 space from its spectrum");
  roundtrip->add_option("--sample", sample, "use a seeded coinitial sample with this many extra covers");
  roundtrip->add_option("--seed", seed, "seed for --sample")->capture_default_str();
  auto* frame_check = add("frame-check", "frame tables and the sublocale form of admissibility");
  auto* props = add("props", "run every applicable proposition check");
  props->add_option("--seed", seed, "seed for sampled cover families")->capture_default_str();
  props->add_option("--sample-extra", extra, "extra covers in sampled families")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    const Loaded l = load(file);
    if (*check) return cmd_check(l, json);
    if (*spectrum) return cmd_spectrum(l);
    if (*near) return cmd_near(l, set);
    if (*star) return cmd_star(l, cover, element);
    if (*below) return cmd_below(l);
    if (*restrict) return cmd_restrict(l, restrict_set, restrict_star);
    if (*regularize) return cmd_regularize(l, priming, out_path);
    if (*from_space) return cmd_from_space(l);
    if (*roundtrip) return cmd_roundtrip(l, sample, seed);
    if (*frame_check) return cmd_frame_check(l);
    if (*props) return cmd_props(l, seed, extra);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
