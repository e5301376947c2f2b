#ifndef PINCHLAB_IO_HPP
#define PINCHLAB_IO_HPP

#include <string>

#include "pinchlab/errors.hpp"

namespace pinchlab {

// All emitted numbers use 17 significant digits ("%.17g"): value-preserving
// and byte-deterministic for identical inputs.
std::string format_sig17(double x);

// Minimal JSON string escaping for warning texts and paths.
std::string json_escape(const std::string& s);

// "a; b; c" for CSV cells.
std::string join_warnings(const WarningList& w);

}  // namespace pinchlab

#endif
