#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdlie/scalar.hpp"

namespace mdlie {

/// One failing instance of an identity: the law's name, the basis indices
/// (0-based) it was evaluated on, and both sides' values.
struct Violation {
  std::string law;
  std::vector<std::size_t> args;
  Vector lhs;
  Vector rhs;
};

/// Outcome of checking a family of identities on basis tuples. Every failure
/// is counted per law; only the first kMaxWitnesses are kept verbatim.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 64;

  bool valid() const noexcept { return total_ == 0; }
  std::size_t violation_count() const noexcept { return total_; }
  std::size_t violation_count(std::string_view law) const;
  bool failed(std::string_view law) const { return violation_count(law) > 0; }

  const std::vector<Violation>& witnesses() const noexcept { return witnesses_; }
  const std::map<std::string, std::size_t, std::less<>>& counts() const noexcept { return counts_; }

  void record(Violation v);
  /// Records a violation only when lhs != rhs; returns whether they agreed.
  bool check(std::string_view law, std::vector<std::size_t> args, const Vector& lhs, const Vector& rhs);
  void merge(const VerificationReport& other);

 private:
  std::size_t total_ = 0;
  std::map<std::string, std::size_t, std::less<>> counts_;
  std::vector<Violation> witnesses_;
};

}  // namespace mdlie
