#include "wqed/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wqed/errors.hpp"

namespace wqed {

namespace {

constexpr double kPi = std::numbers::pi;

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw BadConfig("config: " + msg); }

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) bad("unknown key \"" + it.key() + "\" in " + where);
    }
}

const json* member(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double number_or(const json& obj, const std::string& where, const char* key,
                 double fallback) {
    const json* v = member(obj, key);
    if (!v) return fallback;
    if (!v->is_number()) bad(where + "." + key + " must be a number");
    return v->get<double>();
}

int integer_or(const json& obj, const std::string& where, const char* key,
               int fallback) {
    const json* v = member(obj, key);
    if (!v) return fallback;
    if (!v->is_number_integer()) bad(where + "." + key + " must be an integer");
    return v->get<int>();
}

bool boolean_or(const json& obj, const std::string& where, const char* key,
                bool fallback) {
    const json* v = member(obj, key);
    if (!v) return fallback;
    if (!v->is_boolean()) bad(where + "." + key + " must be a boolean");
    return v->get<bool>();
}

std::string string_or(const json& obj, const std::string& where, const char* key,
                      const std::string& fallback) {
    const json* v = member(obj, key);
    if (!v) return fallback;
    if (!v->is_string()) bad(where + "." + key + " must be a string");
    return v->get<std::string>();
}

double positive_gamma(const json& obj, const std::string& where) {
    const double gamma = number_or(obj, where, "gamma", 1.0);
    if (!(gamma > 0.0)) bad(where + ".gamma must be > 0");
    return gamma;
}

// File values are in units of gamma (distances in 1/gamma); the returned
// structs carry absolute units ready for the library.
SystemParams4LS parse_params_4ls(const json& obj) {
    const std::string where = "params";
    reject_unknown_keys(obj, where,
                        {"gamma", "gamma_prime", "omega12", "omega32", "omega34",
                         "a", "omega0", "omega1", "detuning_floor", "cond_tol",
                         "node_floor"});
    const SystemParams4LS ref = default_params_4ls();
    const double gamma = positive_gamma(obj, where);

    SystemParams4LS p;
    p.gamma = gamma;
    p.gamma_prime = gamma * number_or(obj, where, "gamma_prime", ref.gamma_prime);
    p.omega12 = gamma * number_or(obj, where, "omega12", ref.omega12);
    p.omega32 = gamma * number_or(obj, where, "omega32", ref.omega32);
    // The protocol pins omega34 and omega1 to omega12, so omitting them
    // follows a supplied omega12 instead of the built-in one.
    p.omega34 = gamma * number_or(obj, where, "omega34",
                                  number_or(obj, where, "omega12", ref.omega34));
    p.omega1 = gamma * number_or(obj, where, "omega1",
                                 number_or(obj, where, "omega12", ref.omega1));
    p.omega0 = gamma * number_or(obj, where, "omega0", ref.omega0);
    p.a = number_or(obj, where, "a", ref.a) / gamma;
    p.detuning_floor = number_or(obj, where, "detuning_floor", ref.detuning_floor);
    p.cond_tol = number_or(obj, where, "cond_tol", ref.cond_tol);
    p.node_floor = number_or(obj, where, "node_floor", ref.node_floor);
    return p;
}

SystemParams3LS parse_params_3ls(const json& obj) {
    const std::string where = "params";
    reject_unknown_keys(obj, where,
                        {"gamma", "gamma_prime", "omega_eg", "a", "omega0",
                         "omega1", "detuning_floor", "cond_tol", "node_floor"});
    const SystemParams3LS ref = default_params_3ls();
    const double gamma = positive_gamma(obj, where);

    SystemParams3LS p;
    p.gamma = gamma;
    p.gamma_prime = gamma * number_or(obj, where, "gamma_prime", ref.gamma_prime);
    p.omega_eg = gamma * number_or(obj, where, "omega_eg", ref.omega_eg);
    p.omega1 = gamma * number_or(obj, where, "omega1",
                                 number_or(obj, where, "omega_eg", ref.omega1));
    p.omega0 = gamma * number_or(obj, where, "omega0", ref.omega0);
    p.a = number_or(obj, where, "a", ref.a) / gamma;
    p.detuning_floor = number_or(obj, where, "detuning_floor", ref.detuning_floor);
    p.cond_tol = number_or(obj, where, "cond_tol", ref.cond_tol);
    p.node_floor = number_or(obj, where, "node_floor", ref.node_floor);
    return p;
}

MemoryParams parse_params_memory(const json& obj) {
    const std::string where = "params";
    reject_unknown_keys(obj, where,
                        {"gamma", "gamma_prime", "omega_e0g", "omega_e1g",
                         "omega_es", "a", "detuning_floor", "cond_tol",
                         "node_floor"});
    const MemoryParams ref = default_params_memory();
    const double gamma = positive_gamma(obj, where);

    MemoryParams mp;
    mp.gamma = gamma;
    mp.gamma_prime = gamma * number_or(obj, where, "gamma_prime", ref.gamma_prime);
    mp.omega_e0g = gamma * number_or(obj, where, "omega_e0g", ref.omega_e0g);
    mp.omega_e1g = gamma * number_or(obj, where, "omega_e1g", ref.omega_e1g);
    mp.omega_es = gamma * number_or(obj, where, "omega_es", ref.omega_es);
    mp.a = number_or(obj, where, "a", ref.a) / gamma;
    mp.detuning_floor = number_or(obj, where, "detuning_floor", ref.detuning_floor);
    mp.cond_tol = number_or(obj, where, "cond_tol", ref.cond_tol);
    mp.node_floor = number_or(obj, where, "node_floor", ref.node_floor);
    return mp;
}

QuadratureGrid parse_grid(const json& obj) {
    const std::string where = "grid";
    reject_unknown_keys(obj, where, {"half_width", "points_per_dim", "scheme"});
    QuadratureGrid grid;
    grid.half_width = number_or(obj, where, "half_width", grid.half_width);
    grid.points_per_dim =
        integer_or(obj, where, "points_per_dim", grid.points_per_dim);
    const json* v = member(obj, "scheme");
    if (v) {
        if (!v->is_string()) bad("grid.scheme must be a string");
        grid.scheme = quad_scheme_from_string(v->get<std::string>());
    }
    return grid;
}

}  // namespace

SystemParams4LS default_params_4ls() {
    SystemParams4LS p;
    p.gamma = 1.0;
    p.gamma_prime = 0.0;
    p.omega12 = 310.0 * kPi;
    p.omega32 = 190.0 * kPi;
    p.omega34 = p.omega12;
    p.omega1 = p.omega12;
    p.omega0 = 230.0 * kPi;
    p.a = 0.05;
    return p;
}

SystemParams3LS default_params_3ls() {
    SystemParams3LS p;
    p.gamma = 1.0;
    p.gamma_prime = 0.0;
    p.omega_eg = 310.0 * kPi;
    p.omega1 = p.omega_eg;
    p.a = 1.0 / 620.0;
    p.omega0 = 501.0 * p.omega_eg;
    return p;
}

MemoryParams default_params_memory() {
    MemoryParams mp;
    mp.gamma = 1.0;
    mp.gamma_prime = 0.0;
    mp.omega_e0g = 610.0 * kPi;
    mp.omega_e1g = 730.0 * kPi;
    mp.omega_es = 190.0 * kPi;
    mp.a = 0.05;
    return mp;
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "4ls") return Scheme::four_ls;
    if (s == "3ls") return Scheme::three_ls;
    if (s == "memory") return Scheme::memory;
    throw BadConfig("config: unknown scheme \"" + s +
                    "\" (expected 4ls, 3ls, or memory)");
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw BadConfig("config: unknown format \"" + s +
                    "\" (expected csv or json)");
}

QuadScheme quad_scheme_from_string(const std::string& s) {
    if (s == "gauss-legendre") return QuadScheme::gauss_legendre;
    if (s == "trapezoid") return QuadScheme::trapezoid;
    throw BadConfig("config: unknown grid scheme \"" + s +
                    "\" (expected gauss-legendre or trapezoid)");
}

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::four_ls: return "4ls";
        case Scheme::three_ls: return "3ls";
        case Scheme::memory: return "memory";
    }
    return "?";
}

const char* to_string(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

const char* to_string(QuadScheme s) {
    return s == QuadScheme::gauss_legendre ? "gauss-legendre" : "trapezoid";
}

RunConfig parse_config(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) bad("not valid JSON");
    if (!root.is_object()) bad("top level must be an object");
    reject_unknown_keys(root, "top level",
                        {"scheme", "params", "grid", "flags", "output"});

    RunConfig cfg;
    if (const json* v = member(root, "scheme")) {
        if (!v->is_string()) bad("scheme must be a string");
        cfg.scheme = scheme_from_string(v->get<std::string>());
    }

    if (const json* v = member(root, "params")) {
        if (!v->is_object()) bad("params must be an object");
        switch (cfg.scheme) {
            case Scheme::four_ls: cfg.params4 = parse_params_4ls(*v); break;
            case Scheme::three_ls: cfg.params3 = parse_params_3ls(*v); break;
            case Scheme::memory: cfg.memory = parse_params_memory(*v); break;
        }
    }

    if (const json* v = member(root, "grid")) {
        if (!v->is_object()) bad("grid must be an object");
        cfg.grid = parse_grid(*v);
    }

    if (const json* v = member(root, "flags")) {
        if (!v->is_object()) bad("flags must be an object");
        reject_unknown_keys(*v, "flags", {"c_trivial_phase"});
        cfg.flags.c_trivial_phase =
            boolean_or(*v, "flags", "c_trivial_phase", cfg.flags.c_trivial_phase);
    }

    if (const json* v = member(root, "output")) {
        if (!v->is_object()) bad("output must be an object");
        reject_unknown_keys(*v, "output", {"path", "format"});
        cfg.out_path = string_or(*v, "output", "path", cfg.out_path);
        if (const json* f = member(*v, "format")) {
            if (!f->is_string()) bad("output.format must be a string");
            cfg.format = format_from_string(f->get<std::string>());
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadConfig("config: cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace wqed
