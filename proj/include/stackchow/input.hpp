#pragma once

#include <string>

#include "stackchow/stacky.hpp"

namespace stackchow {

// Parsed input document.  Structural checks only; semantic validation stays
// with the fan and stacky layers.  In fantastack mode the fan data lives on
// Z^target.rank and the lift columns are the images of the basis of
// Z^lattice_rank.
struct InputDocument {
    bool fantastack = false;
    int lattice_rank = 0;
    std::vector<std::vector<mpz_class>> rays;
    std::vector<ConeSet> max_cones;
    FgAbelianGroup target = FgAbelianGroup(0, {});
    IntMatrix lift = IntMatrix(0, 0);
};

// Strict schema: top-level fields exactly lattice_rank, rays, max_cones,
// target {rank, torsion}, lift, optional mode ("stacky" | "fantastack").
// Unknown fields are rejected.  Throws std::invalid_argument.
InputDocument parse_input(const std::string& text);

// parse_input on the contents of a file.
InputDocument load_input(const std::string& path);

// The stacky fan the document denotes: the fan and lift as given, or the
// induced stacky fan of the image columns in fantastack mode.
StackyFan document_stacky_fan(const InputDocument& doc, bool check_fan = true);

// Canonical fixture documents.  Names: p64, blowupA3, bg, fanta.
std::string example_json(const std::string& name);
InputDocument example_document(const std::string& name);

}  // namespace stackchow
