#include "mdslab/report.hpp"

namespace mdslab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unverified: return "unverified";
  }
  return "fail";
}

void CheckReport::absorb(const CheckReport& sub) {
  cases += sub.cases;
  if (sub.status == Status::Fail)
    fail(sub.name.empty() ? sub.witness.value_or("") : sub.name + ": " + sub.witness.value_or(""));
  if (sub.status == Status::Unverified) {
    if (status == Status::Pass) status = Status::Unverified;
  }
  for (const auto& n : sub.notes) notes.push_back(n);
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = to_string(status);
  j["cases"] = cases;
  if (witness) j["witness"] = *witness;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace mdslab
