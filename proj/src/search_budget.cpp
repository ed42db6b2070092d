#include "bsts/search_budget.hpp"

#include <cstdlib>
#include <string>

#include "bsts/error.hpp"

namespace bsts {

std::uint64_t SearchBudget::default_nodes() {
  if (const char* env = std::getenv(std::string(kBudgetEnvVar).c_str())) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodeBudget;
}

void NodeCounter::tick() {
  if (++used_ > limit_) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                std::string(what_) + " exceeded the node budget of " + std::to_string(limit_));
  }
}

}  // namespace bsts
