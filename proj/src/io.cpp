#include "nearposet/io.hpp"

#include <fstream>

#include "nearposet/error.hpp"

namespace nearposet::io {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> strings(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidInput(what + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw InvalidInput("unknown field '" + key + "'");
  }
}

Mask names_to_mask(const Poset& p, const Json& j, const std::string& what) {
  Mask m = 0;
  for (const auto& name : strings(j, what)) {
    auto i = p.index_of(name);
    if (!i) throw InvalidInput(what + " names unknown element '" + name + "'");
    m |= bit(*i);
  }
  return m;
}

}  // namespace

ThetaClosure parse_closure(const std::string& s) {
  if (s == "none") return ThetaClosure::none;
  if (s == "superset") return ThetaClosure::superset;
  if (s == "refinement") return ThetaClosure::refinement;
  throw InvalidInput("closure must be none, superset or refinement, not '" + s + "'");
}

std::string to_string(ThetaClosure c) {
  switch (c) {
    case ThetaClosure::none:
      return "none";
    case ThetaClosure::superset:
      return "superset";
    case ThetaClosure::refinement:
      return "refinement";
  }
  return "none";
}

InstanceFile parse_instance(const Json& j) {
  if (!j.is_object()) throw InvalidInput("instance file must be a JSON object");
  reject_unknown(j, {"elements", "order", "theta", "closure", "frame"});
  std::vector<std::string> elements = strings(field(j, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("order")) {
    const Json& o = j["order"];
    if (!o.is_array()) throw InvalidInput("order must be a list of [p, q] pairs");
    for (const auto& pair : o) {
      const auto pq = strings(pair, "order pair");
      if (pq.size() != 2) throw InvalidInput("order pairs must have two entries");
      order.emplace_back(pq[0], pq[1]);
    }
  }
  Poset poset(std::move(elements), order);

  const Json& t = field(j, "theta");
  if (!t.is_array()) throw InvalidInput("theta must be a list of lists of element names");
  std::vector<Mask> theta;
  for (const auto& member : t) theta.push_back(names_to_mask(poset, member, "theta member"));

  ThetaClosure closure = ThetaClosure::none;
  if (j.contains("closure")) {
    if (!j["closure"].is_string()) throw InvalidInput("closure must be a string");
    closure = parse_closure(j["closure"].get<std::string>());
  }

  bool frame = false;
  if (j.contains("frame")) {
    const Json& f = j["frame"];
    if (!f.is_object()) throw InvalidInput("frame must be an object");
    reject_unknown(f, {"derive"});
    const Json& d = field(f, "derive");
    if (!d.is_boolean()) throw InvalidInput("frame.derive must be a boolean");
    if (!d.get<bool>()) throw InvalidInput("frame.derive = false: explicit meet/join tables are not supported");
    frame = true;
    FiniteFrame check(poset);  // validates the lattice
  }
  return {NearnessInstance(std::move(poset), std::move(theta), closure), frame};
}

SpaceFile parse_space(const Json& j) {
  if (!j.is_object()) throw InvalidInput("space file must be a JSON object");
  reject_unknown(j, {"points", "sets", "role", "theta"});
  std::vector<std::string> points = strings(field(j, "points"), "points");
  const Json& s = field(j, "sets");
  if (!s.is_object()) throw InvalidInput("sets must map names to lists of points");
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  for (const auto& [name, members] : s.items()) sets.emplace_back(name, strings(members, "set '" + name + "'"));
  const Json& r = field(j, "role");
  if (!r.is_string()) throw InvalidInput("role must be \"subbasis\" or \"basis\"");
  FamilyRole role;
  if (r == "subbasis") {
    role = FamilyRole::subbasis;
  } else if (r == "basis") {
    role = FamilyRole::basis;
  } else {
    throw InvalidInput("role must be \"subbasis\" or \"basis\"");
  }
  FiniteSpace space(std::move(points), sets, role);

  if (!j.contains("theta") || (j["theta"].is_string() && j["theta"] == "all-covers")) {
    NearnessInstance theta = cover_family(space);
    return {std::move(space), std::move(theta), true};
  }
  const Json& t = j["theta"];
  if (!t.is_array()) throw InvalidInput("theta must be \"all-covers\" or a list of lists of set names");
  std::vector<Mask> theta;
  for (const auto& member : t) theta.push_back(names_to_mask(space.family(), member, "theta member"));
  NearnessInstance inst = space_instance(space, std::move(theta));
  return {std::move(space), std::move(inst), false};
}

FileKind kind_of(const Json& j) {
  return j.is_object() && j.contains("points") ? FileKind::space : FileKind::instance;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json to_json(const NearnessInstance& n, bool frame) {
  const Poset& p = n.poset();
  Json j;
  j["elements"] = p.names();
  // Covering pairs only; the reader restores the transitive closure.
  Json order = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for_each_bit(p.up(a) & ~bit(a), [&](std::size_t b) {
      const Mask between = p.up(a) & p.down(b) & ~bit(a) & ~bit(b);
      if (between == 0) order.push_back({p.name(a), p.name(b)});
    });
  }
  j["order"] = order;
  Json theta = Json::array();
  for (Mask c : n.generators()) {
    Json member = Json::array();
    for_each_bit(c, [&](std::size_t x) { member.push_back(p.name(x)); });
    theta.push_back(member);
  }
  j["theta"] = theta;
  if (n.closure() != ThetaClosure::none) j["closure"] = to_string(n.closure());
  if (frame) j["frame"] = {{"derive", true}};
  return j;
}

}  // namespace nearposet::io
