#include "lbw/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbw {

ReportItem& Report::add(std::string identity, std::string formula) {
  ReportItem it;
  it.identity = std::move(identity);
  it.formula = std::move(formula);
  items_.push_back(std::move(it));
  return items_.back();
}

ReportItem& Report::add_diagnostic(std::string identity, std::string formula) {
  ReportItem& it = add(std::move(identity), std::move(formula));
  it.diagnostic = true;
  return it;
}

ReportItem& Report::add_from(std::string identity, std::string formula, const Report& sub) {
  ReportItem& it = add(std::move(identity), std::move(formula));
  if (const ReportItem* f = sub.first_failure()) {
    it.pass = false;
    it.witness = f->witness;
    it.residual = f->residual;
    it.note = f->identity;
  }
  return it;
}

ReportItem& Report::add_verdict(std::string identity, std::string formula, bool pass,
                                std::string note) {
  ReportItem& it = add(std::move(identity), std::move(formula));
  it.pass = pass;
  it.note = std::move(note);
  return it;
}

void Report::fail(ReportItem& item, std::vector<std::size_t> witness, std::string residual) {
  if (!item.pass) return;
  item.pass = false;
  item.witness = std::move(witness);
  item.residual = std::move(residual);
}

bool Report::pass() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const ReportItem& it) { return it.diagnostic || it.pass; });
}

const ReportItem& Report::item(const std::string& identity) const {
  for (const auto& it : items_)
    if (it.identity == identity) return it;
  throw std::out_of_range("report has no item \"" + identity + "\"");
}

bool Report::has(const std::string& identity) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const ReportItem& it) { return it.identity == identity; });
}

const ReportItem* Report::first_failure() const {
  for (const auto& it : items_)
    if (!it.diagnostic && !it.pass) return &it;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out = (subject_.empty() ? std::string("report") : subject_) + ": " +
                    (pass() ? "PASS" : "FAIL") + "\n";
  for (const auto& it : items_) {
    out += "  [";
    out += it.diagnostic ? (it.pass ? "info pass" : "info fail") : (it.pass ? "pass" : "FAIL");
    out += "] " + it.identity;
    if (!it.formula.empty()) out += "    " + it.formula;
    out += "\n";
    if (!it.pass) {
      if (!it.witness.empty()) {
        out += "      witness (";
        for (std::size_t i = 0; i < it.witness.size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(it.witness[i]);
        }
        out += ")\n";
      }
      if (!it.residual.empty()) out += "      residual " + it.residual + "\n";
    }
    if (!it.note.empty()) out += "      note: " + it.note + "\n";
  }
  return out;
}

}  // namespace lbw
