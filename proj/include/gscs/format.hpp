#pragma once

#include <string>

#include "gscs/types.hpp"

namespace gscs {

/// printf %.17g — value-preserving text for CSV cells.
std::string format_double(Scalar v);

} // namespace gscs
