#pragma once

#include <map>
#include <string>
#include <string_view>

#include "argeq/framework.hpp"
#include "argeq/related_models.hpp"
#include "argeq/semantics.hpp"

namespace argeq {

enum class FrameworkFormat {
  /// `arg(a).` and `att(a,b).` statements, `%` comments.
  apx,
  /// Argument names one per line, then a `#` marker line, then `src tgt` lines.
  edge_list,
};

/// .apx maps to apx; everything else is read as an edge list.
FrameworkFormat format_for_path(std::string_view path);
/// "apx" or "edge-list"/"tgf"; throws InputError otherwise.
FrameworkFormat parse_framework_format(std::string_view name);

/// Argument order is first-appearance order. Throws ParseError (with a line
/// number) on syntax errors, duplicate declarations and undeclared endpoints.
Framework parse_framework(std::string_view text, FrameworkFormat format);

std::string write_framework(const Framework& fw, FrameworkFormat format);

/// Lines `<name> <value>` or `<name>,<value>`, an optional `default <value>`
/// line (1/2 when absent), `#` comments.
Valuation parse_initial_values(std::string_view text, const Framework& fw);

/// Lines `<src> <tgt> <weight>`.
std::map<Attack, double> parse_weights(std::string_view text, const Framework& fw);

/// Lines `arg <name> <pos> <neg>` (one per argument) and optional
/// `att <src> <tgt> <pos> <neg>`.
SocialFramework parse_votes(std::string_view text, const Framework& fw, double epsilon);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace argeq
