#pragma once

#include <optional>
#include <string>

#include "wqed/params.hpp"
#include "wqed/pipeline.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

enum class Scheme { four_ls, three_ls, memory };

enum class OutputFormat { csv, json };

// Built-in operating points: gate conditions met exactly, rails clear of
// mirror nodes, lossless until a Purcell factor is applied on top.
SystemParams4LS default_params_4ls();
SystemParams3LS default_params_3ls();
MemoryParams default_params_memory();

// One run's worth of settings with parameters already in absolute units.
// Config files give rates and frequencies in units of gamma and distances
// in units of 1/gamma; parsing applies the scale once. Only the selected
// scheme's parameter block is read from the file, the others stay at the
// built-in defaults.
struct RunConfig {
    Scheme scheme = Scheme::four_ls;
    SystemParams4LS params4 = default_params_4ls();
    SystemParams3LS params3 = default_params_3ls();
    MemoryParams memory = default_params_memory();
    QuadratureGrid grid;
    ProtocolOptions flags;
    std::string out_path = "-";  // "-" writes to stdout
    std::optional<OutputFormat> format;  // unset: subcommand default applies
};

// Accepted spellings: "4ls", "3ls", "memory"; "csv", "json";
// "gauss-legendre", "trapezoid". Anything else throws BadConfig.
Scheme scheme_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);
QuadScheme quad_scheme_from_string(const std::string& s);

const char* to_string(Scheme s);
const char* to_string(OutputFormat f);
const char* to_string(QuadScheme s);

// Strict JSON config reader: unknown keys and wrong value types are
// errors, missing keys fall back to the defaults above.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace wqed
