#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace lbw {

struct ReportItem {
  std::string identity;
  std::string formula;  // the identity as an equation, for traceability
  bool pass = true;
  std::vector<std::size_t> witness;  // basis indices of the first failure
  std::string residual;              // nonzero residual at the witness
  bool diagnostic = false;           // informational; not part of the verdict
  std::string note;
};

// Verdict of a check. Overall pass iff every non-diagnostic item passes.
class Report {
 public:
  explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

  ReportItem& add(std::string identity, std::string formula);
  ReportItem& add_diagnostic(std::string identity, std::string formula);
  // One item summarizing a sub-report; witness/residual come from the first
  // failing item of `sub`.
  ReportItem& add_from(std::string identity, std::string formula, const Report& sub);
  ReportItem& add_verdict(std::string identity, std::string formula, bool pass,
                          std::string note = {});

  // Marks the item failed. Only the first witness is kept.
  static void fail(ReportItem& item, std::vector<std::size_t> witness, std::string residual);

  bool pass() const;
  const std::string& subject() const { return subject_; }
  const std::deque<ReportItem>& items() const { return items_; }

  // Throws std::out_of_range if no item carries this identity.
  const ReportItem& item(const std::string& identity) const;
  bool has(const std::string& identity) const;
  const ReportItem* first_failure() const;

  std::string to_text() const;

 private:
  std::string subject_;
  std::deque<ReportItem> items_;
};

}  // namespace lbw
