#include "bchcs/bsm_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "bchcs/errors.hpp"

namespace bchcs {

void write_bsm(std::ostream& os, const SensingMatrix& A) {
    os << "BSM1 " << kind_name(A.kind()) << ' ' << A.rows() << ' ' << A.cols() << '\n';
    if (!A.params.empty()) {
        os << '#';
        for (const auto& [k, v] : A.params) os << ' ' << k << '=' << v;
        os << '\n';
    }
    if (A.orbits)
        for (const OrbitRecord& orb : *A.orbits)
            os << "# orbit " << orb.rep_col << ' ' << orb.mu << '\n';
    std::string line(A.cols(), '0');
    for (uint32_t r = 0; r < A.rows(); ++r) {
        for (uint32_t c = 0; c < A.cols(); ++c) {
            const int t = A.trit(r, c);
            line[c] = (t > 0) ? '+' : (t < 0) ? '-' : '0';
        }
        os << line << '\n';
    }
}

void write_bsm_file(const std::string& path, const SensingMatrix& A) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    write_bsm(f, A);
    if (!f) throw IoError("write failed: " + path);
}

SensingMatrix read_bsm(std::istream& is) {
    std::string line;
    size_t lineno = 0;
    if (!std::getline(is, line)) throw ParseError("empty input", 1);
    ++lineno;
    std::istringstream hdr(line);
    std::string magic, kind_s;
    uint32_t rows = 0, cols = 0;
    if (!(hdr >> magic >> kind_s >> rows >> cols) || magic != "BSM1")
        throw ParseError("bad BSM1 header", lineno);
    MatrixKind kind;
    try {
        kind = kind_from_name(kind_s);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), lineno);
    }
    if (rows == 0 || cols == 0) throw ParseError("zero matrix dimension", lineno);

    SensingMatrix A(kind, rows, cols);
    std::vector<OrbitRecord> orbits;
    uint32_t r = 0;
    while (r < rows) {
        if (!std::getline(is, line)) throw ParseError("unexpected end of file", lineno + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            std::istringstream cs(line.substr(1));
            std::string tok;
            cs >> tok;
            if (tok == "orbit") {
                OrbitRecord orb;
                if (!(cs >> orb.rep_col >> orb.mu) || orb.rep_col >= cols || orb.mu == 0 ||
                    rows % orb.mu != 0)
                    throw ParseError("bad orbit record", lineno);
                orbits.push_back(std::move(orb));
            } else if (!tok.empty()) {
                do {
                    const size_t eq = tok.find('=');
                    if (eq == std::string::npos || eq == 0)
                        throw ParseError("bad key=value comment token: " + tok, lineno);
                    A.params.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
                } while (cs >> tok);
            }
            continue;
        }
        if (line.size() != cols)
            throw ParseError("expected " + std::to_string(cols) + " characters, got " +
                                 std::to_string(line.size()),
                             lineno);
        for (uint32_t c = 0; c < cols; ++c) {
            switch (line[c]) {
                case '+': A.set_trit(r, c, 1); break;
                case '-': A.set_trit(r, c, -1); break;
                case '0': break;
                default: throw ParseError(std::string("bad entry character '") + line[c] + "'", lineno);
            }
        }
        ++r;
    }
    for (uint32_t c = 0; c < cols; ++c)
        if (A.nnz(c) == 0) throw ParseError("column " + std::to_string(c) + " is all zero", lineno);
    if (kind == MatrixKind::PM1)
        for (uint32_t c = 0; c < cols; ++c)
            if (A.nnz(c) != rows) throw ParseError("PM1 matrix has a zero entry", lineno);
    if (kind == MatrixKind::BIN)
        for (uint32_t c = 0; c < cols; ++c)
            for (uint32_t rr = 0; rr < rows; ++rr)
                if (A.trit(rr, c) < 0) throw ParseError("BIN matrix has a negative entry", lineno);
    if (kind == MatrixKind::TERN)
        for (uint32_t c = 0; c < cols; ++c)
            if (A.nnz(c) != A.nnz(0))
                throw ParseError("TERN matrix has mixed column weights", lineno);
    if (!orbits.empty()) {
        A.orbits = std::move(orbits);
        rebuild_orbit_columns(A);
    }
    return A;
}

SensingMatrix read_bsm_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    return read_bsm(f);
}

void write_vector_file(const std::string& path, const std::vector<double>& v) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << std::setprecision(17);
    for (double x : v) f << x << '\n';
    if (!f) throw IoError("write failed: " + path);
}

std::vector<double> read_vector_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::vector<double> v;
    std::string line;
    size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double x;
        std::string rest;
        if (ls >> x) {
            if (ls >> rest) throw ParseError("trailing content after value", lineno);
            v.push_back(x);
        } else if (std::istringstream(line) >> rest) {
            throw ParseError("not a number: " + rest, lineno);
        }
    }
    return v;
}

}  // namespace bchcs
