#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stepwise/server.hpp"
#include "stepwise/value.hpp"

namespace stepwise {

/// Name server state: name -> location. Later adds for the same name win.
struct NameDirectory {
  std::map<std::string, Value, std::less<>> places;

  friend bool operator==(const NameDirectory&, const NameDirectory&) = default;
};

/// "{BuckinghamPalace: London, EiffelTower: Paris}"
std::string render_state(const NameDirectory& directory);

/// add()place()state(name, place) and whereIs()state(name) over an
/// initially empty NameDirectory.
CallbackInstance make_name_server();

/// clearstate() and add()state(e) over a number memory starting at 0.
CallbackInstance make_calculator();

/// Fresh instance of a registered callback ("nameServer", "calculator").
/// Throws UnknownCallback otherwise.
CallbackInstance load_callback(std::string_view name);

std::vector<std::string> registered_callbacks();

}  // namespace stepwise
