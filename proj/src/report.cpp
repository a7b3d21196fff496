#include "cobar/report.hpp"

#include <sstream>

namespace cobar {

void Report::add(const std::string& name, bool pass, const std::string& witness) {
  items.push_back({name, pass, witness});
}

void Report::merge(const Report& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

bool Report::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

const CheckItem* Report::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return &it;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "  ok   " : "  FAIL ") << it.name;
    if (!it.pass && !it.witness.empty()) os << "  [witness: " << it.witness << "]";
    os << "\n";
  }
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& it : items) {
    nlohmann::json o;
    o["name"] = it.name;
    o["pass"] = it.pass;
    if (!it.witness.empty()) o["witness"] = it.witness;
    arr.push_back(o);
  }
  return arr;
}

}  // namespace cobar
