#pragma once

#include <vector>

#include "klrw/cartan.hpp"

namespace klrw {

using Partition = std::vector<int>;  // weakly decreasing row lengths

struct Multipartition {
  std::vector<Partition> components;
  std::vector<int> charges;  // one per component

  static Multipartition single(Partition p, int charge = 0) { return {{std::move(p)}, {charge}}; }
  int size() const;
};

// component -> row -> entries
using Tableau = std::vector<std::vector<std::vector<int>>>;

// m-th letter is the residue (col - row + charge) mod e of the box holding m.
// Throws std::invalid_argument for a non-standard filling.
std::vector<int> residue_word(int e, const Multipartition& shape, const Tableau& t);
RootVec residue_content(int e, const Multipartition& shape);

std::vector<Partition> partitions(int n);
Tableau row_reading_tableau(const Multipartition& shape);

}  // namespace klrw
