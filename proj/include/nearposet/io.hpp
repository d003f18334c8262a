#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "nearposet/frames.hpp"
#include "nearposet/nearness.hpp"
#include "nearposet/spaces.hpp"

// JSON instance and space files.
namespace nearposet::io {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  NearnessInstance instance;
  bool frame = false;  // the file asks for the order to be read as a frame
};

struct SpaceFile {
  FiniteSpace space;
  NearnessInstance theta;  // every cover unless the file lists members
  bool all_covers = true;
};

// Both throw InvalidInput with the offending field in the message.
InstanceFile parse_instance(const Json& j);
SpaceFile parse_space(const Json& j);

enum class FileKind { instance, space };

// A space file is recognised by its "points" field.
FileKind kind_of(const Json& j);

Json read_json(const std::string& path);

Json to_json(const NearnessInstance& n, bool frame = false);

ThetaClosure parse_closure(const std::string& s);
std::string to_string(ThetaClosure c);

}  // namespace nearposet::io
