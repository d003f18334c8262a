#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearposet/admissibility.hpp"
#include "nearposet/frames.hpp"
#include "nearposet/proximity.hpp"
#include "nearposet/spaces.hpp"

// Named, hypothesis-aware checks of the structural results on one instance.
namespace nearposet {

enum class Outcome { pass, fail, skipped };

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string detail;  // counterexample on failure, reason when skipped
};

std::string to_string(Outcome o);

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t sample_extra = 2;  // covers added to sampled cover families
};

// Lazily computed tables shared by the checks on one instance.
class CheckContext {
 public:
  explicit CheckContext(NearnessInstance n, CheckOptions options = {});

  const NearnessInstance& instance() const { return n_; }
  const Poset& poset() const { return n_.poset(); }
  const CheckOptions& options() const { return options_; }

  const Spectrum& spectrum() const { return n_.spectrum(); }
  const NearTable& near() const { return n_.near_table(); }
  const BelowRelation& below();
  const AdmissibilityReport& report();
  bool directed();
  bool upset();
  bool filter();
  bool admissible();
  bool star_regular();
  const RestrictedFamily& restriction(Mask s);

 private:
  NearnessInstance n_;
  CheckOptions options_;
  std::optional<BelowRelation> below_;
  std::optional<AdmissibilityReport> report_;
  std::optional<bool> directed_, upset_, admissible_, star_regular_;
  std::map<Mask, std::unique_ptr<RestrictedFamily>> restrictions_;
};

struct NamedCheck {
  std::string name;
  std::function<CheckResult(CheckContext&)> run;
};

const std::vector<NamedCheck>& instance_checks();
const NamedCheck& find_instance_check(const std::string& name);

// Runs one check, turning BoundExceeded into a skipped result.
CheckResult run_check(const NamedCheck& check, CheckContext& ctx);

std::vector<CheckResult> run_instance_checks(const NearnessInstance& n, const CheckOptions& options = {});

// Checks tying a space and a family of member sets to the abstract side.
// The instance must be built over s.family().
struct SpaceCheck {
  std::string name;
  std::function<CheckResult(const FiniteSpace&, CheckContext&)> run;
};

const std::vector<SpaceCheck>& space_checks();
const SpaceCheck& find_space_check(const std::string& name);
CheckResult run_check(const SpaceCheck& check, const FiniteSpace& s, CheckContext& ctx);
std::vector<CheckResult> run_space_checks(const FiniteSpace& s, const NearnessInstance& n,
                                          const CheckOptions& options = {});

std::vector<CheckResult> run_frame_checks(const FiniteFrame& f, const NearnessInstance& n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nearposet
