#pragma once

#include <iosfwd>
#include <string>

#include "dqlin/matrix.hpp"

namespace dqlin {

/// Text form of a dual quaternion matrix, one entry per line:
///   row col  b1re b1im  b2re b2im  b3re b3im  b4re b4im
/// with 1-based indices and a `# dqmatrix <rows> <cols>` header.
void save_matrix(const DQMatrix& q, const std::string& path);
DQMatrix load_matrix(const std::string& path);

void write_matrix(std::ostream& os, const DQMatrix& q);

}  // namespace dqlin
