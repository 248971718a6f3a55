#pragma once

#include <string>
#include <vector>

namespace ncd {

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);

struct ReportLine {
  std::string key;
  Status status = Status::Pass;
  std::string detail;
};

/// Ordered sequence of check results. The overall verdict is PASS only when
/// every line passes; any INCONCLUSIVE line (and no FAIL) makes it INCONCLUSIVE.
class ValidationReport {
public:
  void add(std::string key, Status status, std::string detail = {});
  void append(const ValidationReport& other);

  const std::vector<ReportLine>& lines() const { return lines_; }
  Status verdict() const;
  bool ok() const { return verdict() == Status::Pass; }

  /// First line that is not PASS, or nullptr.
  const ReportLine* first_failure() const;

private:
  std::vector<ReportLine> lines_;
};

} // namespace ncd
