#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nkz/pbw.hpp"
#include "nkz/presentation.hpp"

namespace nkz {

struct ParsedDocument {
    Presentation presentation;
    std::optional<PhiMap> phi;
};

/// Parses the structured presentation document. Coefficients are strings
/// ("p/q" or integers) or JSON integers; floating-point coefficients are
/// rejected to preserve exactness. Syntax errors carry line/position,
/// semantic errors name the violated invariant.
ParsedDocument parse_presentation(const std::string& text);

/// Canonical document for a presentation (and optional deformation); parsing
/// the result reproduces an identical Presentation.
std::string emit_presentation(const Presentation& p, const std::optional<PhiMap>& phi = {});

nlohmann::json tensor_to_json(const Tensor& t);
nlohmann::json subspace_to_json(const Subspace& s);

struct JobSpec {
    std::string command;
    std::string input_text;        // presentation document (already loaded)
    std::string second_input_text; // for free-product
    int series_degree = 6;
    int m_max = -1; // distributivity bound; -1 = N + 2
    int probe_limit = 6;
    Limits limits;
    std::size_t lattice_cap = 20000;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
    std::string format = "json"; // json | text
    int census_n = 0, census_N = 0, census_p = 0;
};

struct Report {
    nlohmann::json doc;
    std::string render(const std::string& format) const;
};

/// Dispatches a parsed job to the analysis modules. Mathematical "false"
/// verdicts are successes; only malformed input or cap exhaustion throw.
Report run_job(const JobSpec& job);

} // namespace nkz
