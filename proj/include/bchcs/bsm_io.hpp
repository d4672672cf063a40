#ifndef BCHCS_BSM_IO_HPP
#define BCHCS_BSM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bchcs/sensing_matrix.hpp"

namespace bchcs {

/// BSM v1, bit-exact:
///   line 1: "BSM1 <KIND> <rows> <cols>", KIND in {PM1, BIN, TERN};
///   optional "#"-comments: one "# key=value ..." params line and
///   "# orbit <rep_col> <mu>" records;
///   then exactly `rows` lines of exactly `cols` characters from {+,-,0},
///   row-major, unnormalized. Normalization (value = sign/sqrt(nnz)) is
///   implied, never stored.
void write_bsm(std::ostream& os, const SensingMatrix& A);
void write_bsm_file(const std::string& path, const SensingMatrix& A);

SensingMatrix read_bsm(std::istream& is);            // throws ParseError with line number
SensingMatrix read_bsm_file(const std::string& path);

/// Plain-text vectors: one decimal per line, '#' comments allowed; written
/// with 17 significant digits.
void write_vector_file(const std::string& path, const std::vector<double>& v);
std::vector<double> read_vector_file(const std::string& path);

}  // namespace bchcs

#endif
