#pragma once

#include <string>
#include <string_view>

#include "p1kit/matrix.hpp"
#include "p1kit/pencil.hpp"

namespace p1kit {

// Matrix:  {"field": "Q" | "Fp:<p>", "rows": n, "cols": m, "entries": [["3/2", ...], ...]}
// Pencil:  {"field": ..., "D": D, "r": r, "A": entries, "B": entries}
// Entries may be strings ("num/den", decimal residues) or JSON integers.
// Parsing failures throw JsonError carrying the byte offset.

std::string matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(std::string_view text);

std::string pencil_to_json(const Pencil& p);
/// `default_field` applies when the document has no "field" key.
Pencil pencil_from_json(std::string_view text, const Field& default_field = Field::rationals());

}  // namespace p1kit
