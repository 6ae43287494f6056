#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mdslab {

enum class Status { Pass, Fail, Unverified };

std::string to_string(Status s);

/// Outcome of one named check. Keeps the first failure as witness.
struct CheckReport {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Pass;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
  long cases = 0;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  bool passed() const { return status != Status::Fail; }
  void fail(const std::string& w) {
    if (status != Status::Fail) witness = w;
    status = Status::Fail;
  }
  /// Counts one case; builds the witness only on failure.
  void expect(bool ok, const std::function<std::string()>& witness_fn) {
    ++cases;
    if (!ok) fail(witness_fn());
  }
  void unverified(const std::string& why) {
    if (status == Status::Pass) status = Status::Unverified;
    notes.push_back(why);
  }
  /// Folds a sub-report in: failures and unverified notes propagate.
  void absorb(const CheckReport& sub);

  nlohmann::ordered_json to_json() const;
};

}  // namespace mdslab
