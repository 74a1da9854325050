#pragma once

#include <string>
#include <vector>

namespace chev {

enum class Status { Pass, Inconclusive, Fail };

std::string_view status_name(Status s);

/// One checked claim: which statement, at which parameters, the outcome,
/// and the values that decided it.
struct ReportEntry {
  std::string claim;
  std::string params;
  Status status = Status::Pass;
  std::string witness;
};

class VerifyReport {
 public:
  explicit VerifyReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void add(std::string claim, std::string params, bool ok, std::string witness = {}) {
    add({std::move(claim), std::move(params), ok ? Status::Pass : Status::Fail, std::move(witness)});
  }
  /// Appends every entry of other (the suite name of *this is kept).
  void merge(const VerifyReport& other);
  /// Free-form lines printed before the entries (scope notes and the like).
  void note(std::string line) { notes_.push_back(std::move(line)); }
  const std::vector<std::string>& notes() const { return notes_; }

  std::size_t count(Status s) const;
  Status worst() const;
  bool ok() const { return worst() != Status::Fail; }

  /// Stable sort by claim id, keeping insertion order inside a claim.
  void sort();

  std::string to_json() const;
  std::string to_table() const;
  std::string to_csv() const;

 private:
  std::string suite_;
  std::vector<std::string> notes_;
  std::vector<ReportEntry> entries_;
};

}  // namespace chev
