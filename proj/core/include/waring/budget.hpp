#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Step counter shared by exhaustive sweeps. Default limit is 1e7 steps;
// overridable per command (--budget) or via the WARING_BUDGET env var.
class Budget {
  public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    Budget() : limit_(from_env()) {}
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void charge(std::uint64_t steps, const char* where) {
        used_ += steps;
        if (used_ > limit_)
            throw BudgetExceeded(std::string("step budget exceeded in ") + where + " (limit " +
                                 std::to_string(limit_) + ")");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    static std::uint64_t from_env();

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace waring
