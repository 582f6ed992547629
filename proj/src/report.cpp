#include "cpvi/report.hpp"

namespace cpvi {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::pass_mod_relation:
      return "pass-mod-relation";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::symbolic:
      return "symbolic";
    case Method::sampled:
      return "sampled";
    case Method::numeric:
      return "numeric";
  }
  return "?";
}

Status combine(const std::vector<Status>& parts) {
  bool any = false;
  Status worst = Status::pass;
  for (Status s : parts) {
    if (s == Status::skipped) continue;
    any = true;
    if (s == Status::fail) return Status::fail;
    if (s == Status::pass_mod_relation) worst = s;
  }
  return any ? worst : Status::skipped;
}

}  // namespace cpvi
