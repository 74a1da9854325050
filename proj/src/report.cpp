#include "chev/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace chev {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::Fail:
      return "fail";
  }
  return "?";
}

void VerifyReport::merge(const VerifyReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const auto& e) { return e.status == s; }));
}

Status VerifyReport::worst() const {
  Status w = Status::Pass;
  for (const auto& e : entries_) w = std::max(w, e.status);
  return w;
}

void VerifyReport::sort() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const auto& a, const auto& b) { return a.claim < b.claim; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = status_name(worst());
  j["pass"] = count(Status::Pass);
  j["fail"] = count(Status::Fail);
  j["inconclusive"] = count(Status::Inconclusive);
  j["notes"] = notes_;
  auto& arr = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    arr.push_back({{"claim", e.claim},
                   {"params", e.params},
                   {"status", status_name(e.status)},
                   {"witness", e.witness}});
  }
  return j.dump(2);
}

std::string VerifyReport::to_table() const {
  std::size_t wc = 5, wp = 6;
  for (const auto& e : entries_) {
    wc = std::max(wc, e.claim.size());
    wp = std::max(wp, e.params.size());
  }
  std::ostringstream os;
  os << "suite: " << suite_ << "\n";
  for (const auto& n : notes_) os << "note: " << n << "\n";
  auto row = [&](std::string_view c, std::string_view p, std::string_view s, std::string_view w) {
    os << c << std::string(wc - c.size() + 2, ' ') << p << std::string(wp - p.size() + 2, ' ') << s
       << std::string(14 - std::min<std::size_t>(s.size(), 12), ' ') << w << "\n";
  };
  row("claim", "params", "status", "witness");
  for (const auto& e : entries_) row(e.claim, e.params, status_name(e.status), e.witness);
  os << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
     << count(Status::Inconclusive) << " inconclusive\n";
  return os.str();
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string VerifyReport::to_csv() const {
  std::ostringstream os;
  os << "suite,claim,params,status,witness\n";
  for (const auto& e : entries_) {
    os << csv_field(suite_) << ',' << csv_field(e.claim) << ',' << csv_field(e.params) << ','
       << status_name(e.status) << ',' << csv_field(e.witness) << "\n";
  }
  return os.str();
}

}  // namespace chev
