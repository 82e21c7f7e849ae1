#pragma once

#include "latfill/lattice.hpp"

#include <string>

namespace latfill {

// Lattice text format: either "name:<tag>" or "gram:" followed by rank lines
// of rank space-separated integers. Emission mirrors ingestion.
Lattice parse_lattice_text(const std::string& text);
std::string emit_lattice_text(const Lattice& l);

// "2,4,6,3,5" -> coordinates.
IntVec parse_int_csv(const std::string& text);
std::string format_int_csv(const IntVec& v);

std::string rat_to_string(const Rat& r);

}  // namespace latfill
