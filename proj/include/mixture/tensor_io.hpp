#pragma once
// plain-text table serialization for the algebra tensors and the matrix
// quadruple of the first-order wave operator. One entry per line, indices
// first, then real and imaginary parts printed with 17 significant digits;
// zero entries are omitted and the round-trip is bit-exact.

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mixture/dirac.hpp"
#include "mixture/errors.hpp"
#include "mixture/linalg.hpp"
#include "mixture/mixture_tensor.hpp"

namespace mixture {

namespace detail {

inline std::string io_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// whitespace-split a line, dropping everything after a '#'
inline std::vector<std::string> io_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline double io_parse_real(const std::string& tok, int line_no) {
    const char* s = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw ConfigError("line " + std::to_string(line_no) + ": expected a number, got '" +
                          tok + "'");
    return v;
}

inline int io_parse_index(const std::string& tok, int line_no, int bound) {
    const char* s = tok.c_str();
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 0 || v >= bound)
        throw ConfigError("line " + std::to_string(line_no) + ": expected an index in [0, " +
                          std::to_string(bound - 1) + "], got '" + tok + "'");
    return static_cast<int>(v);
}

inline void io_write_tensor3(std::ostream& os, const Tensor3& t) {
    for (int g = 0; g < 4; ++g)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const cplx v = t[g][a][b];
                if (v == cplx(0.0, 0.0)) continue;
                os << g << ' ' << a << ' ' << b << ' ' << io_real(v.real()) << ' '
                   << io_real(v.imag()) << '\n';
            }
}

inline void io_write_mat4(std::ostream& os, const Mat4& m) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const cplx v = m[r][c];
            if (v == cplx(0.0, 0.0)) continue;
            os << r << ' ' << c << ' ' << io_real(v.real()) << ' ' << io_real(v.imag())
               << '\n';
        }
}

// one parsed data line: up to three leading indices and a complex value
struct IoEntry {
    std::array<int, 3> idx{};
    int rank = 0;
    cplx value;
    int line_no = 0;
};

inline IoEntry io_parse_entry(const std::vector<std::string>& toks, int line_no, int rank) {
    if (static_cast<int>(toks.size()) != rank + 2)
        throw ConfigError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(rank) + " indices and two values, got " +
                          std::to_string(toks.size()) + " fields");
    IoEntry e;
    e.rank = rank;
    e.line_no = line_no;
    for (int i = 0; i < rank; ++i) e.idx[i] = io_parse_index(toks[i], line_no, 4);
    e.value = cplx(io_parse_real(toks[rank], line_no), io_parse_real(toks[rank + 1], line_no));
    return e;
}

} // namespace detail

// ---------------------------------------------------------------------------
// algebra: sections `lower`, `upper` (three indices) and `mirror` (one index,
// one real weight)

inline void write_algebra(std::ostream& os, const Algebra& alg) {
    os << "lower\n";
    detail::io_write_tensor3(os, alg.lower);
    os << "upper\n";
    detail::io_write_tensor3(os, alg.upper);
    os << "mirror\n";
    for (int a = 0; a < 4; ++a) {
        if (alg.mirror_weight[a] == 0.0) continue;
        os << a << ' ' << detail::io_real(alg.mirror_weight[a]) << '\n';
    }
}

inline std::string algebra_to_string(const Algebra& alg) {
    std::ostringstream os;
    write_algebra(os, alg);
    return os.str();
}

inline Algebra read_algebra(std::istream& is) {
    Algebra alg{};
    alg.lower = Tensor3{};
    alg.upper = Tensor3{};
    alg.mirror_weight = {0.0, 0.0, 0.0, 0.0};

    enum class Section { None, Lower, Upper, Mirror };
    Section sec = Section::None;
    std::array<std::array<std::array<bool, 4>, 4>, 4> seen_lower{}, seen_upper{};
    std::array<bool, 4> seen_mirror{};

    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto toks = detail::io_tokens(line);
        if (toks.empty()) continue;
        if (toks.size() == 1 && !std::isdigit(static_cast<unsigned char>(toks[0][0]))) {
            if (toks[0] == "lower") sec = Section::Lower;
            else if (toks[0] == "upper") sec = Section::Upper;
            else if (toks[0] == "mirror") sec = Section::Mirror;
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section '" +
                                  toks[0] + "'");
            continue;
        }
        if (sec == Section::None)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": data before any section header");
        if (sec == Section::Mirror) {
            if (toks.size() != 2)
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": mirror entries carry one index and one weight");
            const int a = detail::io_parse_index(toks[0], line_no, 4);
            if (seen_mirror[a])
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": duplicate mirror entry for index " + std::to_string(a));
            seen_mirror[a] = true;
            alg.mirror_weight[a] = detail::io_parse_real(toks[1], line_no);
            continue;
        }
        const detail::IoEntry e = detail::io_parse_entry(toks, line_no, 3);
        auto& seen = (sec == Section::Lower) ? seen_lower : seen_upper;
        if (seen[e.idx[0]][e.idx[1]][e.idx[2]])
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate entry");
        seen[e.idx[0]][e.idx[1]][e.idx[2]] = true;
        auto& t = (sec == Section::Lower) ? alg.lower : alg.upper;
        t[e.idx[0]][e.idx[1]][e.idx[2]] = e.value;
    }
    return alg;
}

inline Algebra algebra_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_algebra(is);
}

// ---------------------------------------------------------------------------
// wave-operator matrix set: sections `eta` (leading channel index plus a row
// and column), `H` and `Hhat` (row and column), and `N` (a single complex
// scale on one line)

inline void write_dirac_set(std::ostream& os, const DiracSet& d) {
    os << "eta\n";
    for (int g = 0; g < 4; ++g)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const cplx v = d.eta[g][r][c];
                if (v == cplx(0.0, 0.0)) continue;
                os << g << ' ' << r << ' ' << c << ' ' << detail::io_real(v.real()) << ' '
                   << detail::io_real(v.imag()) << '\n';
            }
    os << "H\n";
    detail::io_write_mat4(os, d.H);
    os << "Hhat\n";
    detail::io_write_mat4(os, d.Hhat);
    os << "N\n";
    os << detail::io_real(d.N.real()) << ' ' << detail::io_real(d.N.imag()) << '\n';
}

inline std::string dirac_set_to_string(const DiracSet& d) {
    std::ostringstream os;
    write_dirac_set(os, d);
    return os.str();
}

inline DiracSet read_dirac_set(std::istream& is) {
    DiracSet d{};
    d.eta = {};
    d.H = Mat4{};
    d.Hhat = Mat4{};
    d.N = cplx(0.0, 0.0);

    enum class Section { None, Eta, H, Hhat, N };
    Section sec = Section::None;
    bool seen_n = false;
    std::array<std::array<std::array<bool, 4>, 4>, 4> seen_eta{};
    std::array<std::array<bool, 4>, 4> seen_h{}, seen_hhat{};

    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto toks = detail::io_tokens(line);
        if (toks.empty()) continue;
        if (toks.size() == 1 && !std::isdigit(static_cast<unsigned char>(toks[0][0]))) {
            if (toks[0] == "eta") sec = Section::Eta;
            else if (toks[0] == "H") sec = Section::H;
            else if (toks[0] == "Hhat") sec = Section::Hhat;
            else if (toks[0] == "N") sec = Section::N;
            else
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section '" +
                                  toks[0] + "'");
            continue;
        }
        switch (sec) {
            case Section::None:
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": data before any section header");
            case Section::Eta: {
                const detail::IoEntry e = detail::io_parse_entry(toks, line_no, 3);
                if (seen_eta[e.idx[0]][e.idx[1]][e.idx[2]])
                    throw ConfigError("line " + std::to_string(line_no) + ": duplicate entry");
                seen_eta[e.idx[0]][e.idx[1]][e.idx[2]] = true;
                d.eta[e.idx[0]][e.idx[1]][e.idx[2]] = e.value;
                break;
            }
            case Section::H:
            case Section::Hhat: {
                const detail::IoEntry e = detail::io_parse_entry(toks, line_no, 2);
                auto& seen = (sec == Section::H) ? seen_h : seen_hhat;
                if (seen[e.idx[0]][e.idx[1]])
                    throw ConfigError("line " + std::to_string(line_no) + ": duplicate entry");
                seen[e.idx[0]][e.idx[1]] = true;
                auto& m = (sec == Section::H) ? d.H : d.Hhat;
                m[e.idx[0]][e.idx[1]] = e.value;
                break;
            }
            case Section::N: {
                if (seen_n)
                    throw ConfigError("line " + std::to_string(line_no) +
                                      ": duplicate scale entry");
                const detail::IoEntry e = detail::io_parse_entry(toks, line_no, 0);
                seen_n = true;
                d.N = e.value;
                break;
            }
        }
    }
    return d;
}

inline DiracSet dirac_set_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_dirac_set(is);
}

} // namespace mixture
