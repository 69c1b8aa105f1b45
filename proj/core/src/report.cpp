#include "mdlie/report.hpp"

#include <utility>

namespace mdlie {

std::size_t VerificationReport::violation_count(std::string_view law) const {
  auto it = counts_.find(law);
  return it == counts_.end() ? 0 : it->second;
}

void VerificationReport::record(Violation v) {
  ++total_;
  auto it = counts_.find(v.law);
  if (it == counts_.end())
    counts_.emplace(v.law, 1);
  else
    ++it->second;
  if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(v));
}

bool VerificationReport::check(std::string_view law, std::vector<std::size_t> args, const Vector& lhs,
                               const Vector& rhs) {
  if (lhs == rhs) return true;
  record({std::string(law), std::move(args), lhs, rhs});
  return false;
}

void VerificationReport::merge(const VerificationReport& other) {
  total_ += other.total_;
  for (const auto& [law, n] : other.counts_) counts_[law] += n;
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= kMaxWitnesses) break;
    witnesses_.push_back(w);
  }
}

}  // namespace mdlie
