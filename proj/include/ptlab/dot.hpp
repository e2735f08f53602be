#pragma once

#include <string>

#include "ptlab/fpt.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"

namespace ptlab {

// DOT digraphs with deterministic node ids n0, n1, ... in preorder (trees,
// approximants) or state order (rational trees). Edges carry child positions.
std::string render_dot(const Fpt& t);
std::string render_dot(const Rpt& r);
std::string render_dot(const BohmApprox& b);

}  // namespace ptlab
