#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fusionlab::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2 };

/// Bad arguments; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct VerifyOptions {
  int p = 3;
  bool skip_pentagon = false;
  int tau_sign = 1;
  int max_group_order = 338;  // 2·13²
};

struct Section {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  nlohmann::json payload;
  double elapsed_ms = 0;
  std::string summary;
};

struct Report {
  int p = 0;
  std::vector<Section> sections;
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Throws UsageError unless p is an odd prime with 2p² <= max_group_order.
void check_prime(int p, int max_group_order);

Report cmd_verify(const VerifyOptions& opt);
nlohmann::json cmd_modcats(int p, int max_group_order = 338);
nlohmann::json cmd_pentagon(int p, int tau_sign, int max_group_order = 338);
nlohmann::json cmd_profile(int p, int max_group_order = 338);

/// Group spec: factors "Z<n>" or "D<2n>" joined by 'x', e.g. "D6xZ3".
/// Descriptor spec: whitespace-separated generator labels plus an optional
/// "mu=<c>" selecting the canonical multiplier class on the subgroup.
nlohmann::json cmd_rank(const std::string& group_spec, const std::string& d1, const std::string& d2);

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionlab::cli
