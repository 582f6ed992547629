#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace cpvi {

enum class Status { pass, pass_mod_relation, fail, skipped };
enum class Method { symbolic, sampled, numeric };

std::string_view to_string(Status s);
std::string_view to_string(Method m);

/// Worst of the given statuses: fail > pass_mod_relation > pass. Skipped
/// entries are ignored unless every entry is skipped.
Status combine(const std::vector<Status>& parts);

struct VerificationReport {
  std::string check_id;
  Method method = Method::symbolic;
  Status status = Status::skipped;
  std::string detail;
  double elapsed_ms = 0;
  /// Per-component outcomes when the check has natural parts.
  std::vector<Status> parts;

  bool ok() const { return status == Status::pass || status == Status::pass_mod_relation; }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cpvi
