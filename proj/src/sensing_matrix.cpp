#include "bchcs/sensing_matrix.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "bchcs/errors.hpp"

namespace bchcs {

std::string kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::PM1: return "PM1";
        case MatrixKind::BIN: return "BIN";
        case MatrixKind::TERN: return "TERN";
    }
    return "?";
}

MatrixKind kind_from_name(const std::string& s) {
    if (s == "PM1") return MatrixKind::PM1;
    if (s == "BIN") return MatrixKind::BIN;
    if (s == "TERN") return MatrixKind::TERN;
    throw ValidationError("unknown matrix kind: " + s);
}

SensingMatrix::SensingMatrix(MatrixKind kind, uint32_t rows, uint32_t cols)
    : kind_(kind), rows_(rows), cols_(cols), wpc_((rows + 63) / 64) {
    pos_.assign(wpc_ * cols, 0);
    neg_.assign(wpc_ * cols, 0);
    nnz_.assign(cols, 0);
}

int SensingMatrix::trit(uint32_t r, uint32_t c) const {
    const size_t w = wpc_ * c + r / 64;
    const uint64_t bit = uint64_t(1) << (r % 64);
    if (pos_[w] & bit) return 1;
    if (neg_[w] & bit) return -1;
    return 0;
}

void SensingMatrix::set_trit(uint32_t r, uint32_t c, int v) {
    const size_t w = wpc_ * c + r / 64;
    const uint64_t bit = uint64_t(1) << (r % 64);
    const bool was = (pos_[w] | neg_[w]) & bit;
    pos_[w] &= ~bit;
    neg_[w] &= ~bit;
    if (v > 0) pos_[w] |= bit;
    if (v < 0) neg_[w] |= bit;
    if (v != 0 && !was) ++nnz_[c];
    if (v == 0 && was) --nnz_[c];
}

double SensingMatrix::norm_factor(uint32_t c) const {
    return 1.0 / std::sqrt(static_cast<double>(nnz_[c]));
}

int64_t SensingMatrix::dot(uint32_t c1, uint32_t c2) const {
    const uint64_t *p1 = pos_words(c1), *n1 = neg_words(c1);
    const uint64_t *p2 = pos_words(c2), *n2 = neg_words(c2);
    int64_t agree = 0, differ = 0;
    for (size_t w = 0; w < wpc_; ++w) {
        agree += std::popcount(p1[w] & p2[w]) + std::popcount(n1[w] & n2[w]);
        differ += std::popcount(p1[w] & n2[w]) + std::popcount(n1[w] & p2[w]);
    }
    return agree - differ;
}

std::vector<double> SensingMatrix::column(uint32_t c) const {
    std::vector<double> v(rows_, 0.0);
    const double s = norm_factor(c);
    const uint64_t *p = pos_words(c), *n = neg_words(c);
    for (size_t w = 0; w < wpc_; ++w) {
        uint64_t bits = p[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            v[w * 64 + static_cast<size_t>(b)] = s;
        }
        bits = n[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            v[w * 64 + static_cast<size_t>(b)] = -s;
        }
    }
    return v;
}

int64_t SensingMatrix::find_rotated_column(uint32_t c, uint32_t shift) const {
    std::vector<int> want(rows_);
    for (uint32_t r = 0; r < rows_; ++r) want[r] = trit((r + shift) % rows_, c);
    for (uint32_t j = 0; j < cols_; ++j) {
        bool match = true;
        for (uint32_t r = 0; r < rows_ && match; ++r) match = (trit(r, j) == want[r]);
        if (match) return j;
    }
    return -1;
}

void SensingMatrix::recompute_nnz() {
    for (uint32_t c = 0; c < cols_; ++c) {
        uint32_t count = 0;
        const uint64_t *p = pos_words(c), *n = neg_words(c);
        for (size_t w = 0; w < wpc_; ++w)
            count += std::popcount(p[w]) + std::popcount(n[w]);
        nnz_[c] = count;
    }
}

SensingMatrix build_pm1(const CodeSpec& spec) {
    const std::vector<Codeword> words = enumerate_even_codewords(spec);
    const uint32_t m = spec.n_tilde;
    const uint32_t n = static_cast<uint32_t>(words.size());
    SensingMatrix A(MatrixKind::PM1, m, n);
    for (uint32_t c = 0; c < n; ++c)
        for (uint32_t r = 0; r < m; ++r)
            A.set_trit(r, c, words[c].bits.test(r) ? 1 : -1);

    // Orbit decomposition: the even-parity subcode is shift-closed, so walking
    // rotations from each unvisited column must land on stored columns.
    std::map<Gf2Poly, uint32_t> index;
    for (uint32_t c = 0; c < n; ++c) index.emplace(words[c].bits, c);
    std::vector<bool> visited(n, false);
    std::vector<OrbitRecord> orbits;
    for (uint32_t c = 0; c < n; ++c) {
        if (visited[c]) continue;
        OrbitRecord orb;
        orb.rep_col = c;
        Gf2Poly cur = words[c].bits;
        do {
            const auto it = index.find(cur);
            if (it == index.end())
                throw InternalError("even-parity subcode is not closed under cyclic shift");
            visited[it->second] = true;
            orb.cols.push_back(it->second);
            cur = rotate_bits(cur, m, 1);
        } while (cur != words[c].bits);
        orb.mu = static_cast<uint32_t>(orb.cols.size());
        if (m % orb.mu != 0) throw InternalError("orbit size does not divide row count");
        orbits.push_back(std::move(orb));
    }
    A.orbits = std::move(orbits);

    A.params = {{"mtilde", std::to_string(spec.field->m())},
                {"i", std::to_string(spec.i)},
                {"primpoly", spec.field->primitive_poly().to_hex()},
                {"parity", "even"}};
    return A;
}

void rebuild_orbit_columns(SensingMatrix& A) {
    if (!A.orbits) throw ValidationError("matrix carries no orbit metadata");
    std::map<std::vector<int>, uint32_t> index;
    std::vector<int> trits(A.rows());
    for (uint32_t c = 0; c < A.cols(); ++c) {
        for (uint32_t r = 0; r < A.rows(); ++r) trits[r] = A.trit(r, c);
        index.emplace(trits, c);
    }
    for (OrbitRecord& orb : *A.orbits) {
        if (!orb.cols.empty()) continue;
        std::vector<int> rep(A.rows());
        for (uint32_t r = 0; r < A.rows(); ++r) rep[r] = A.trit(r, orb.rep_col);
        orb.cols.reserve(orb.mu);
        for (uint32_t t = 0; t < orb.mu; ++t) {
            for (uint32_t r = 0; r < A.rows(); ++r) trits[r] = rep[(r + t) % A.rows()];
            const auto it = index.find(trits);
            if (it == index.end())
                throw ValidationError("orbit record inconsistent with matrix columns");
            orb.cols.push_back(it->second);
        }
        // One more rotation must return to the representative.
        for (uint32_t r = 0; r < A.rows(); ++r) trits[r] = rep[(r + orb.mu) % A.rows()];
        if (index.find(trits) == index.end() || index.at(trits) != orb.rep_col)
            throw ValidationError("orbit size does not close the rotation cycle");
    }
}

}  // namespace bchcs
