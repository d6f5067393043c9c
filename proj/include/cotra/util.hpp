#pragma once

#include <stdexcept>
#include <string>

namespace cotra {

// Engine-level invariant violation: raised when a construction that is
// guaranteed to succeed (section solves, induced structure maps, chain map
// validation) fails.  Always indicates a bug or malformed input, never a
// mathematically negative verdict.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw EngineError(msg);
}

}  // namespace cotra
