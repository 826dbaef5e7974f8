// Text persistence for decoder table sets.
//
// Format (version 1), whitespace separated:
//   polarq-tables 1 <N> <levels> <design_ebn0_db> <grid_levels> <grid_lo> <grid_step>
//   channel-quantizer <M> <distortion>
//   boundaries <cells+1 ints, 0 .. M>
//   recon <cells doubles>
//   node <path over {f,g}, "-" for the root> <alphabet size A>
//   recon <A doubles>
//   f                      (internal nodes only)
//   <A rows of A ints>
//   g
//   <A rows of 2A ints, u=0 and u=1 interleaved per column>
//   ...nodes in depth order, position order...
//   end
#pragma once

#include <iosfwd>
#include <string>

#include "polarq/density_evolution.hpp"
#include "polarq/errors.hpp"

namespace polarq {

void export_tables(const LutSet& luts, std::ostream& out);
void export_tables(const LutSet& luts, const std::string& path);

// Validates structure on load: version, node order, strictly ascending recon
// arrays, table entries inside the child alphabets. Throws
// table_format_error with the offending line and node path.
LutSet import_tables(std::istream& in, const std::string& name = "<stream>");
LutSet import_tables(const std::string& path);

}  // namespace polarq
