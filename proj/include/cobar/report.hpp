#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cobar {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing; offending element otherwise

  bool operator==(const CheckItem&) const = default;
};

// Result of a machine-checked verification pass: one item per axiom/sweep.
struct Report {
  std::vector<CheckItem> items;

  void add(const std::string& name, bool pass, const std::string& witness = "");
  void merge(const Report& other);
  bool all_pass() const;
  const CheckItem* first_failure() const;

  std::string to_text() const;
  nlohmann::json to_json() const;

  bool operator==(const Report&) const = default;
};

}  // namespace cobar
