// Shared error types and the search budget used by every exhaustive kernel.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lir {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a search kernel runs out of its node budget. Distinct from a
// definitive answer: callers must treat it as "unknown", never as "no".
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

struct search_budget {
    long long max_nodes = 200'000'000;
};

struct search_stats {
    long long nodes = 0;
    bool exhausted = false;  // true when the whole tree was explored
};

// Colors are small positive integers; 0 marks an uncolored copy.
inline constexpr int RED = 1;
inline constexpr int BLUE = 2;
inline constexpr int GREEN = 3;
inline constexpr int YELLOW = 4;

}  // namespace lir
