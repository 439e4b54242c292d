#pragma once

// Text-level entry points shared by the command-line tool and the Python
// module. Objects go in and out in the formats of io.hpp.

#include <string>
#include <vector>

namespace gtam {

/// Families accepted by enumerate_family and count_family.
const std::vector<std::string>& family_names();
/// Every object of a family, serialized. `max` < 0 keeps the default cap.
std::vector<std::string> enumerate_family(const std::string& family, const std::vector<int>& params, int max = -1);
/// Size of a family; the formula* families are evaluated, not enumerated.
std::string count_family(const std::string& family, const std::vector<int>& params, int max = -1);

const std::vector<std::string>& bijection_names();
/// Applies a named bijection to a serialized object.
std::string apply_bijection(const std::string& name, const std::string& text);

/// Canonical rewrite of any object (`format` "text"), or DOT (`format` "dot").
std::string render(const std::string& text, const std::string& format);

}  // namespace gtam
