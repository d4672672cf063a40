#ifndef BCHCS_SENSING_MATRIX_HPP
#define BCHCS_SENSING_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchcs/codes.hpp"

namespace bchcs {

enum class MatrixKind { PM1, BIN, TERN };

std::string kind_name(MatrixKind k);
MatrixKind kind_from_name(const std::string& s);

/// One cyclic-shift orbit of columns: cols[t] is the column equal to the
/// representative rotated left by t rows; cols[0] == rep_col and mu divides
/// the row count.
struct OrbitRecord {
    uint32_t rep_col = 0;
    uint32_t mu = 0;
    std::vector<uint32_t> cols;
};

/// Column matrix over {-1, 0, +1}, stored as two bit planes per column
/// (positive and negative), so integer inner products reduce to popcounts.
/// Normalization is implicit: value = trit / sqrt(nnz(column)).
class SensingMatrix {
  public:
    SensingMatrix() = default;
    SensingMatrix(MatrixKind kind, uint32_t rows, uint32_t cols);

    MatrixKind kind() const { return kind_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    size_t words_per_col() const { return wpc_; }

    int trit(uint32_t r, uint32_t c) const;
    void set_trit(uint32_t r, uint32_t c, int v);

    uint32_t nnz(uint32_t c) const { return nnz_[c]; }
    double norm_factor(uint32_t c) const;  // 1 / sqrt(nnz)

    /// Unnormalized integer inner product of two columns.
    int64_t dot(uint32_t c1, uint32_t c2) const;

    /// Normalized column as dense doubles.
    std::vector<double> column(uint32_t c) const;

    /// Column equal to `c` rotated left by `shift` rows, or -1 if absent.
    int64_t find_rotated_column(uint32_t c, uint32_t shift) const;

    const uint64_t* pos_words(uint32_t c) const { return pos_.data() + wpc_ * c; }
    const uint64_t* neg_words(uint32_t c) const { return neg_.data() + wpc_ * c; }

    void recompute_nnz();

    std::optional<std::vector<OrbitRecord>> orbits;
    /// Construction parameters carried into the BSM comment line, in order.
    std::vector<std::pair<std::string, std::string>> params;

  private:
    MatrixKind kind_ = MatrixKind::PM1;
    uint32_t rows_ = 0, cols_ = 0;
    size_t wpc_ = 0;
    std::vector<uint64_t> pos_, neg_;
    std::vector<uint32_t> nnz_;
};

/// Columns are the even-parity codewords (message-ascending) with 0 -> -1;
/// populates the cyclic-orbit table. m = n_tilde, n = 2^{k_tilde - 1}.
SensingMatrix build_pm1(const CodeSpec& spec);

/// Fills in OrbitRecord::cols for records that only carry (rep, mu), e.g.
/// after a BSM load, by rotating each representative and locating the matching
/// stored column. Validates mu and shift-closure along the way.
void rebuild_orbit_columns(SensingMatrix& A);

}  // namespace bchcs

#endif
