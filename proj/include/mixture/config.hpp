#pragma once
// scenario configuration: a plain-text `key = value` format with `#`
// comments, dotted keys, and repeatable polynomial lines. Parsing keeps the
// file order and line numbers; validation rejects unknown keys and checks
// the physical constraints before anything runs.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mixture/errors.hpp"
#include "mixture/fd.hpp"
#include "mixture/weakfield.hpp"

namespace mixture {

struct ConfigEntry {
    std::string key;
    std::vector<std::string> tokens;
    int line = 0;
};

struct ScenarioConfig {
    std::vector<ConfigEntry> entries;

    bool has(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return true;
        return false;
    }

    const ConfigEntry* find(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }

    std::vector<const ConfigEntry*> find_all(const std::string& key) const {
        std::vector<const ConfigEntry*> out;
        for (const auto& e : entries)
            if (e.key == key) out.push_back(&e);
        return out;
    }
};

namespace detail {

inline std::string cfg_trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool cfg_key_ok(const std::string& k) {
    if (k.empty()) return false;
    for (char ch : k)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.')
            return false;
    return true;
}

inline double cfg_double(const ConfigEntry& e, std::size_t i) {
    const std::string& tok = e.tokens[i];
    const char* s = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                          "' expects a number, got '" + tok + "'");
    return v;
}

inline long long cfg_integer(const ConfigEntry& e, std::size_t i) {
    const std::string& tok = e.tokens[i];
    const char* s = tok.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0')
        throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                          "' expects an integer, got '" + tok + "'");
    return v;
}

inline std::uint64_t cfg_u64(const ConfigEntry& e, std::size_t i) {
    const std::string& tok = e.tokens[i];
    const char* s = tok.c_str();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || tok[0] == '-')
        throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                          "' expects an unsigned integer, got '" + tok + "'");
    return static_cast<std::uint64_t>(v);
}

// schema row: expected token count and value kind per key
//   u unsigned integer, i integer, d real, v list of reals,
//   e algebra name, o stencil order, p polynomial term
struct CfgKeySpec {
    const char* key;
    int arity;
    char kind;
    bool repeatable;
};

inline const std::vector<CfgKeySpec>& cfg_schema() {
    static const std::vector<CfgKeySpec> schema = {
        {"seed", 1, 'u', false},       {"algebra", 1, 'e', false},
        {"samples", 1, 'i', false},    {"tolerance", 1, 'd', false},
        {"fd.h", 1, 'd', false},       {"fd.order", 1, 'o', false},
        {"c", 1, 'd', false},          {"mu_e", 1, 'd', false},
        {"rho", 1, 'd', false},        {"guard", 1, 'd', false},
        {"psi.poly", 5, 'p', true},    {"phi.poly", 5, 'p', true},
        {"ax.poly", 5, 'p', true},     {"ay.poly", 5, 'p', true},
        {"az.poly", 5, 'p', true},     {"particle.m", 1, 'd', false},
        {"particle.e", 1, 'd', false}, {"particle.x", 4, 'v', false},
        {"particle.v", 3, 'v', false}, {"dt", 1, 'd', false},
        {"steps", 1, 'i', false},
    };
    return schema;
}

} // namespace detail

// syntax pass: split lines into entries; no schema knowledge yet
inline ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::cfg_trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected `key = value`, got '" + line + "'");
        ConfigEntry e;
        e.line = line_no;
        e.key = detail::cfg_trim(line.substr(0, eq));
        if (!detail::cfg_key_ok(e.key))
            throw ConfigError("line " + std::to_string(line_no) + ": malformed key '" +
                              e.key + "'");
        std::istringstream vs(line.substr(eq + 1));
        std::string tok;
        while (vs >> tok) e.tokens.push_back(tok);
        if (e.tokens.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": key '" + e.key +
                              "' has no value");
        cfg.entries.push_back(std::move(e));
    }
    return cfg;
}

inline ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IOError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

// schema pass: unknown keys, arities, types, ranges, and the coupling and
// speed constraints; throws ConfigError with the offending line number
inline void validate_config(const ScenarioConfig& cfg) {
    const auto& schema = detail::cfg_schema();
    std::vector<const ConfigEntry*> seen_once;
    for (const auto& e : cfg.entries) {
        const detail::CfgKeySpec* spec = nullptr;
        for (const auto& s : schema)
            if (e.key == s.key) {
                spec = &s;
                break;
            }
        if (!spec)
            throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + e.key +
                              "'");
        if (static_cast<int>(e.tokens.size()) != spec->arity)
            throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                              "' expects " + std::to_string(spec->arity) + " value(s), got " +
                              std::to_string(e.tokens.size()));
        if (!spec->repeatable) {
            for (const ConfigEntry* p : seen_once)
                if (p->key == e.key)
                    throw ConfigError("line " + std::to_string(e.line) + ": key '" + e.key +
                                      "' already set on line " + std::to_string(p->line));
            seen_once.push_back(&e);
        }
        switch (spec->kind) {
            case 'u':
                detail::cfg_u64(e, 0);
                break;
            case 'i':
                detail::cfg_integer(e, 0);
                break;
            case 'd':
                detail::cfg_double(e, 0);
                break;
            case 'v':
                for (std::size_t i = 0; i < e.tokens.size(); ++i) detail::cfg_double(e, i);
                break;
            case 'e':
                if (e.tokens[0] != "natural" && e.tokens[0] != "planar")
                    throw ConfigError("line " + std::to_string(e.line) +
                                      ": algebra must be 'natural' or 'planar'");
                break;
            case 'o': {
                const long long v = detail::cfg_integer(e, 0);
                if (v != 2 && v != 4)
                    throw ConfigError("line " + std::to_string(e.line) +
                                      ": fd.order must be 2 or 4");
                break;
            }
            case 'p': {
                detail::cfg_double(e, 0);
                for (std::size_t i = 1; i < 5; ++i) {
                    const long long p = detail::cfg_integer(e, i);
                    if (p < 0 || p > 8)
                        throw ConfigError("line " + std::to_string(e.line) +
                                          ": polynomial exponents must lie in [0, 8]");
                }
                break;
            }
            default:
                break;
        }
    }

    if (!cfg.has("seed")) throw ConfigError("missing required key 'seed'");

    // simple positivity and range checks
    const auto positive = [&](const char* key) {
        if (const ConfigEntry* e = cfg.find(key)) {
            const double v = detail::cfg_double(*e, 0);
            if (!std::isfinite(v) || v <= 0.0)
                throw ConfigError("line " + std::to_string(e->line) + ": key '" +
                                  std::string(key) + "' must be positive");
        }
    };
    positive("tolerance");
    positive("fd.h");
    positive("c");
    positive("guard");
    positive("particle.m");
    positive("dt");
    if (const ConfigEntry* e = cfg.find("samples")) {
        if (detail::cfg_integer(*e, 0) <= 0)
            throw ConfigError("line " + std::to_string(e->line) +
                              ": key 'samples' must be positive");
    }
    if (const ConfigEntry* e = cfg.find("steps")) {
        if (detail::cfg_integer(*e, 0) < 0)
            throw ConfigError("line " + std::to_string(e->line) +
                              ": key 'steps' must be non-negative");
    }

    // coupling constraint: the slow-motion reduction needs rho * mu_e = 1/c^2;
    // rho may be omitted, in which case it is derived from mu_e and c
    const double c = cfg.find("c") ? detail::cfg_double(*cfg.find("c"), 0) : 1.0;
    const double mu_e = cfg.find("mu_e") ? detail::cfg_double(*cfg.find("mu_e"), 0) : 1.0;
    if (mu_e == 0.0) {
        const ConfigEntry* e = cfg.find("mu_e");
        throw ConfigError("line " + std::to_string(e ? e->line : 0) +
                          ": key 'mu_e' must be nonzero");
    }
    if (const ConfigEntry* e = cfg.find("rho")) {
        const double rho = detail::cfg_double(*e, 0);
        if (std::abs(rho * mu_e * c * c - 1.0) > kWeakCouplingTol)
            throw ConfigError("line " + std::to_string(e->line) +
                              ": couplings must satisfy rho * mu_e = 1/c^2 "
                              "(omit rho to derive it from mu_e and c)");
    }

    // slow-motion bound on the initial speed, in units of c
    if (const ConfigEntry* e = cfg.find("particle.v")) {
        double n2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double vi = detail::cfg_double(*e, i);
            n2 += vi * vi;
        }
        if (!(std::sqrt(n2) < 1.0))
            throw ConfigError("line " + std::to_string(e->line) +
                              ": particle speed must stay below 1 (units of c)");
    }
}

// ---------------------------------------------------------------------------
// typed readers (assume validate_config has passed)

inline std::uint64_t seed_from_config(const ScenarioConfig& cfg) {
    const ConfigEntry* e = cfg.find("seed");
    if (!e) throw ConfigError("missing required key 'seed'");
    return detail::cfg_u64(*e, 0);
}

inline double config_double(const ScenarioConfig& cfg, const std::string& key,
                            double fallback) {
    const ConfigEntry* e = cfg.find(key);
    return e ? detail::cfg_double(*e, 0) : fallback;
}

inline int config_int(const ScenarioConfig& cfg, const std::string& key, int fallback) {
    const ConfigEntry* e = cfg.find(key);
    return e ? static_cast<int>(detail::cfg_integer(*e, 0)) : fallback;
}

inline Fd fd_from_config(const ScenarioConfig& cfg) {
    Fd fd{};
    fd.h = config_double(cfg, "fd.h", fd.h);
    fd.order = config_int(cfg, "fd.order", fd.order);
    return fd;
}

// sum of monomial terms c * p0^e0 p1^e1 p2^e2 p3^e3 from repeated `key` lines;
// an empty field (no lines) stands for identically zero
inline ScalarField poly_field_from_config(const ScenarioConfig& cfg, const std::string& key) {
    struct Term {
        double coeff;
        std::array<int, 4> expo;
    };
    std::vector<Term> terms;
    for (const ConfigEntry* e : cfg.find_all(key)) {
        Term t{};
        t.coeff = detail::cfg_double(*e, 0);
        for (int i = 0; i < 4; ++i) t.expo[i] = static_cast<int>(detail::cfg_integer(*e, i + 1));
        terms.push_back(t);
    }
    if (terms.empty()) return ScalarField();
    return [terms](const Point4& p) {
        double sum = 0.0;
        for (const auto& t : terms) {
            double m = t.coeff;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < t.expo[i]; ++k) m *= p[i];
            sum += m;
        }
        return sum;
    };
}

inline WeakFieldConfig weakfield_from_config(const ScenarioConfig& cfg) {
    WeakFieldConfig w{};
    w.c = config_double(cfg, "c", 1.0);
    w.mu_g = 2.0 / (w.c * w.c);
    w.mu_e = config_double(cfg, "mu_e", 1.0);
    w.rho = config_double(cfg, "rho", 1.0 / (w.mu_e * w.c * w.c));
    w.guard = config_double(cfg, "guard", 1e-3);
    w.psi = poly_field_from_config(cfg, "psi.poly");
    w.phi = poly_field_from_config(cfg, "phi.poly");
    w.A = {poly_field_from_config(cfg, "ax.poly"), poly_field_from_config(cfg, "ay.poly"),
           poly_field_from_config(cfg, "az.poly")};
    return w;
}

inline TestParticle particle_from_config(const ScenarioConfig& cfg) {
    TestParticle p{};
    p.m = config_double(cfg, "particle.m", 1.0);
    p.e = config_double(cfg, "particle.e", 0.0);
    if (const ConfigEntry* e = cfg.find("particle.x"))
        for (int i = 0; i < 4; ++i) p.x[i] = detail::cfg_double(*e, i);
    if (const ConfigEntry* e = cfg.find("particle.v"))
        for (int i = 0; i < 3; ++i) p.v[i] = detail::cfg_double(*e, i);
    return p;
}

} // namespace mixture
