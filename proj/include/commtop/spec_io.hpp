#pragma once

#include "commtop/cocycle.hpp"
#include "commtop/group.hpp"
#include "commtop/torus.hpp"

#include <string>
#include <string_view>

namespace commtop {

// JSON spec documents. Parse failures throw ParseError naming the offending
// field ("action.tau[0][1]: expected an integer"); failed mathematical checks
// on otherwise well-formed input keep their InvalidArgument message, prefixed
// by the field.

/// {"format": "catalog", "name": "Q8"}
/// {"format": "table", "order": n, "table": [[...], ...], "names": [...]}
/// {"format": "perm", "degree": d, "generators": [[...], ...], "generator_names": [...]}
/// All three accept an optional "label".
FiniteGroup parse_group_spec(std::string_view text);

/// {"rank": k, "finite": <group spec>, "action": {"tau": [[-1]]},
///  "quotient": [{"t": ["1/2"], "f": "w^2"}], "label": "..."}
/// or {"format": "catalog", "name": "O2"}.
TorusExtension parse_extension_spec(std::string_view text);

/// {"a12": [{"time": "0", "t": ["0"], "f": "1"}, ...], "a13": [...], "a23": [...]}
/// or a construction: {"construction": "alpha", "p": "1", "q": "tau", "u": [1], "v": [0], "end": "1"}
/// or {"construction": "qx", "q": "tau", "x": [<breakpoints>]}.
PatchCocycle parse_cocycle_spec(std::string_view text, const TorusExtension& e);

/// Lossless serializations; the group is written in table format.
std::string group_spec(const FiniteGroup& g);
std::string extension_spec(const TorusExtension& e);
std::string cocycle_spec(const PatchCocycle& c, const TorusExtension& e);

/// Reads a whole file, ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace commtop
