#include "ncdiff/report.hpp"

namespace ncd {

const char* to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "PASS";
  case Status::Fail:
    return "FAIL";
  case Status::Inconclusive:
    return "INCONCLUSIVE";
  }
  return "?";
}

void ValidationReport::add(std::string key, Status status, std::string detail) {
  lines_.push_back({std::move(key), status, std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

Status ValidationReport::verdict() const {
  Status v = Status::Pass;
  for (const auto& l : lines_) {
    if (l.status == Status::Fail)
      return Status::Fail;
    if (l.status == Status::Inconclusive)
      v = Status::Inconclusive;
  }
  return v;
}

const ReportLine* ValidationReport::first_failure() const {
  for (const auto& l : lines_)
    if (l.status != Status::Pass)
      return &l;
  return nullptr;
}

} // namespace ncd
