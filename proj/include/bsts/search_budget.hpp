#pragma once

#include <cstdint>
#include <string_view>

namespace bsts {

inline constexpr std::string_view kBudgetEnvVar = "BSTS_NODE_BUDGET";
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Node cap for the exhaustive searches. The default comes from the
/// BSTS_NODE_BUDGET environment variable, else 10^8.
struct SearchBudget {
  std::uint64_t nodes = default_nodes();

  static std::uint64_t default_nodes();
};

/// Counts search nodes and throws `Error{SearchBudgetExceeded}` at the cap.
class NodeCounter {
 public:
  NodeCounter(const SearchBudget& budget, std::string_view what) : limit_(budget.nodes), what_(what) {}
  void tick();
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string_view what_;
};

}  // namespace bsts
