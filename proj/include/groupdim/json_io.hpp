#pragma once

#include <json.hpp>

#include <string>

#include "groupdim/group.hpp"
#include "groupdim/numeric.hpp"
#include "groupdim/oracle.hpp"

namespace groupdim {

using Json = nlohmann::ordered_json;

/// Job file: ambient_dim, generators (table of expression strings), optional
/// force_I ("k" -> 1-based coordinate list), optional mode "exact" | "float".
struct JobInput {
    std::size_t n = 0;
    std::vector<std::vector<std::string>> generators;
    std::map<std::size_t, std::vector<std::size_t>> force_I;  // 1-based, as given
    std::string mode = "exact";
};

/// Validates shape and field types; throws InvalidInput with a reason.
JobInput parse_job(const Json& j);
JobInput parse_job_text(const std::string& text);

/// Exact-mode group from a job (parses every entry); throws on float mode.
GroupSpec job_to_group(const JobInput& job);

/// Reports. All exact values are strings (rationals "a/b", reals as grammar
/// expressions, integers decimal); indices and dimensions are 1-based JSON
/// numbers; every report carries schema_version, command, mode, heuristic.
Json run_dim(const JobInput& job, const NumericOptions& nopts = {});
Json run_dense(const JobInput& job, const NumericOptions& nopts = {});
Json run_mh(const JobInput& job, const NumericOptions& nopts = {});
Json run_densify(const JobInput& job);
Json run_closure(const JobInput& job);

/// Morphism job: domain/codomain closed groups (E_basis, D_gens expression
/// tables), A (expression matrix), B (integer matrix).
Json run_morphism(const Json& input);

/// Relation job: xs (numbers), optional scale_digits / max_coeff / delta.
Json run_relation(const Json& input, int default_scale = 12,
                  const Int& default_max_coeff = Int(1000000),
                  const Rational& lll_delta = Rational(99, 100));

/// Oracle section for a dim/dense report: axes are 1-based in the input.
Json oracle_report(const JobInput& job, const std::vector<std::size_t>& axes_1based,
                   const OracleOptions& opts);

}  // namespace groupdim
