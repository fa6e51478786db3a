#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace borel {

// Library-level error. `kind` is a stable machine-readable tag used by the
// CLI to build error JSON; `position` is a byte offset for parse errors.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(std::move(kind)), position_(position) {}

  const std::string& kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::string kind_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace borel
