#pragma once

#include <string>

#include "arraycode/code_model.hpp"

namespace arraycode {

/// JSON code-spec document: `q`, `row_labels`, `col_labels`, optional `mask`
/// as an array of 0/1 rows. Round-trips losslessly.
std::string spec_to_json(const ArrayCodeSpec& spec);
ArrayCodeSpec spec_from_json(const std::string& text);

ArrayCodeSpec load_spec_file(const std::string& path);
void save_spec_file(const std::string& path, const ArrayCodeSpec& spec);

}  // namespace arraycode
