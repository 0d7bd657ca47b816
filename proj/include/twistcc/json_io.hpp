#pragma once

#include <string>

#include "twistcc/colex.hpp"

namespace twistcc {

// Lattice JSON schema:
// {vertices:[{id,x,y}], edges:[{id,u,v,color}], faces:[{id,vertices,color}], outer_face}
// Round trips losslessly; output is byte-stable for a given lattice.
std::string lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace twistcc
