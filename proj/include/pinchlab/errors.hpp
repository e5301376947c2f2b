#ifndef PINCHLAB_ERRORS_HPP
#define PINCHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pinchlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested at (or within tolerance of) a pole.
struct PoleError : Error {
    using Error::Error;
};

// translation_length on an element with |tr| <= 2.
struct NotHyperbolicError : Error {
    using Error::Error;
};

// Surface construction failed (trace equations unsolvable or the
// discreteness certificate did not hold).
struct ConstructionError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct FitError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Non-fatal diagnostics carried alongside computed values.
using WarningList = std::vector<std::string>;

inline void merge_warnings(WarningList& into, const WarningList& from) {
    for (const auto& w : from) {
        bool seen = false;
        for (const auto& v : into)
            if (v == w) { seen = true; break; }
        if (!seen) into.push_back(w);
    }
}

}  // namespace pinchlab

#endif
