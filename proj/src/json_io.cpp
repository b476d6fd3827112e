#include "groupdim/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "groupdim/closed_group.hpp"
#include "groupdim/errors.hpp"
#include "groupdim/linalg.hpp"
#include "groupdim/lll.hpp"
#include "groupdim/parse.hpp"

namespace groupdim {

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void bad(const std::string& what) { throw InvalidInput(what); }

std::size_t get_size(const Json& j, const char* field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(field) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

Json vec_str(const std::vector<RealElement>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(render(x));
    return a;
}

Json vec_dbl(const std::vector<RealElement>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_double());
    return a;
}

Json int_rows(const MatrixZ& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

JobInput parse_job(const Json& j) {
    if (!j.is_object()) bad("job must be a JSON object");
    JobInput job;
    if (!j.contains("ambient_dim")) bad("missing ambient_dim");
    job.n = get_size(j.at("ambient_dim"), "ambient_dim");

    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        bad("generators must be a nonempty array of rows");
    for (const auto& row : j.at("generators")) {
        if (!row.is_array()) bad("each generator must be an array of expression strings");
        std::vector<std::string> entries;
        for (const auto& e : row) {
            if (e.is_string())
                entries.push_back(e.get<std::string>());
            else if (e.is_number())
                entries.push_back(Json(e).dump());  // allow bare numbers
            else
                bad("generator entries must be strings (or numbers)");
        }
        if (entries.size() != job.n) bad("generator rows must have ambient_dim entries");
        job.generators.push_back(std::move(entries));
    }

    if (j.contains("force_I")) {
        if (!j.at("force_I").is_object()) bad("force_I must map generator index to coordinate list");
        for (const auto& [key, val] : j.at("force_I").items()) {
            std::size_t k = 0;
            try {
                k = std::stoull(key);
            } catch (...) {
                bad("force_I keys must be 1-based generator indices");
            }
            if (k < 1 || k > job.generators.size()) bad("force_I key out of range: " + key);
            if (!val.is_array()) bad("force_I values must be coordinate arrays");
            std::vector<std::size_t> coords;
            for (const auto& c : val) {
                std::size_t ci = get_size(c, "force_I coordinate");
                if (ci < 1) bad("force_I coordinates are 1-based");
                coords.push_back(ci);
            }
            job.force_I.emplace(k, std::move(coords));
        }
    }

    if (j.contains("mode")) {
        if (!j.at("mode").is_string()) bad("mode must be a string");
        job.mode = j.at("mode").get<std::string>();
        if (job.mode != "exact" && job.mode != "float") bad("mode must be \"exact\" or \"float\"");
    }
    return job;
}

JobInput parse_job_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return parse_job(j);
}

GroupSpec job_to_group(const JobInput& job) {
    if (job.mode != "exact") bad("this operation requires exact mode");
    GroupSpec G;
    G.n = job.n;
    for (const auto& row : job.generators) {
        std::vector<RealElement> gen;
        for (const auto& e : row) gen.push_back(parse_real(e));
        G.generators.push_back(std::move(gen));
    }
    for (const auto& [k, coords] : job.force_I) {
        std::vector<std::size_t> zero_based;
        for (std::size_t c : coords) zero_based.push_back(c - 1);
        G.forced_I.emplace(k - 1, std::move(zero_based));
    }
    G.validate();
    return G;
}

namespace {

std::vector<std::vector<double>> job_to_floats(const JobInput& job) {
    std::vector<std::vector<double>> gens;
    for (const auto& row : job.generators) {
        std::vector<double> gen;
        for (const auto& e : row) gen.push_back(parse_double(e));
        gens.push_back(std::move(gen));
    }
    return gens;
}

MHReport job_report(const JobInput& job, const NumericOptions& nopts) {
    if (job.mode == "float") {
        if (!job.force_I.empty()) bad("force_I requires exact mode");
        return build_mh_float(job.n, job_to_floats(job), nopts);
    }
    return build_mh(job_to_group(job));
}

Json report_header(const char* command, const JobInput& job, const MHReport& rep) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["mode"] = job.mode;
    out["heuristic"] = rep.heuristic;
    out["q"] = rep.span.q;
    out["rank_MH"] = rep.rank;
    out["p"] = rep.rank;
    out["r"] = rep.span.q - rep.rank;
    out["dense_in_span"] = rep.rank == rep.span.q;
    out["dense_in_ambient"] = rep.rank == rep.span.q && rep.span.q == job.n;
    return out;
}

Json basis_indices_json(const MHReport& rep) {
    Json a = Json::array();
    for (std::size_t b : rep.span.basis_indices) a.push_back(b + 1);
    return a;
}

Json I_json(const MHReport& rep) {
    Json I = Json::object();
    for (const auto& g : rep.per_gen) {
        Json coords = Json::array();
        for (std::size_t j : g.I) coords.push_back(j + 1);
        I[std::to_string(g.k + 1)] = std::move(coords);
    }
    return I;
}

Json rational_map_json(const std::map<std::size_t, Rational>& m) {
    Json o = Json::object();
    for (const auto& [i, v] : m) o[std::to_string(i + 1)] = v.str();
    return o;
}

Json int_map_json(const std::map<std::size_t, Int>& m) {
    Json o = Json::object();
    for (const auto& [i, v] : m) o[std::to_string(i + 1)] = v.str();
    return o;
}

}  // namespace

Json run_dim(const JobInput& job, const NumericOptions& nopts) {
    MHReport rep = job_report(job, nopts);
    Json out = report_header("dim", job, rep);
    out["basis_indices"] = basis_indices_json(rep);
    out["I"] = I_json(rep);
    out["MH"] = int_rows(rep.MH);
    return out;
}

Json run_dense(const JobInput& job, const NumericOptions& nopts) {
    MHReport rep = job_report(job, nopts);
    return report_header("dense", job, rep);
}

Json run_mh(const JobInput& job, const NumericOptions& nopts) {
    MHReport rep = job_report(job, nopts);
    Json out = report_header("mh", job, rep);
    out["basis_indices"] = basis_indices_json(rep);
    out["MH"] = int_rows(rep.MH);

    Json gens = Json::array();
    for (const auto& g : rep.per_gen) {
        Json item;
        item["k"] = g.k + 1;
        item["alpha"] = rep.heuristic ? vec_dbl(rep.span.coords[g.k]) : vec_str(g.alpha);
        Json I = Json::array();
        for (std::size_t j : g.I) I.push_back(j + 1);
        item["I"] = std::move(I);
        item["d"] = g.d.str();
        item["t"] = rational_map_json(g.t);
        Json gamma = Json::object();
        for (const auto& [i, row] : g.gamma) {
            Json inner = Json::object();
            for (const auto& [j, v] : row) inner[std::to_string(j + 1)] = v.str();
            gamma[std::to_string(i + 1)] = std::move(inner);
        }
        item["gamma"] = std::move(gamma);
        Json mc = Json::object();
        for (const auto& [i, row] : g.m_coeffs) {
            Json inner = Json::object();
            for (const auto& [j, v] : row) inner[std::to_string(j + 1)] = v.str();
            mc[std::to_string(i + 1)] = std::move(inner);
        }
        item["m"] = std::move(mc);
        item["p_coeffs"] = int_map_json(g.p_coeffs);
        Json cols = Json::array();
        for (const auto& col : g.u_prime) {
            Json c = Json::array();
            for (const Int& x : col) c.push_back(x.str());
            cols.push_back(std::move(c));
        }
        item["u_prime"] = std::move(cols);
        gens.push_back(std::move(item));
    }
    out["generators"] = std::move(gens);
    return out;
}

Json run_densify(const JobInput& job) {
    if (job.mode != "exact") bad("densify requires exact mode");
    DensifyResult res = densify(job_to_group(job));
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "densify";
    out["mode"] = job.mode;
    out["heuristic"] = false;
    out["u"] = vec_str(res.u);
    out["dim"] = Json{{"p", res.dim.p}, {"r", res.dim.r}};
    out["verified"] = true;
    return out;
}

Json run_closure(const JobInput& job) {
    if (job.mode != "exact") bad("closure structure requires exact mode");
    ClosureStructure cs = closure_structure(job_to_group(job));
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "closure";
    out["mode"] = job.mode;
    out["heuristic"] = false;
    out["candidate"] = true;
    out["q"] = cs.q;
    out["p"] = cs.F_basis.size();
    Json fb = Json::array();
    for (const auto& col : cs.F_basis) {
        Json c = Json::array();
        for (const Int& x : col) c.push_back(x.str());
        fb.push_back(std::move(c));
    }
    out["F_basis"] = std::move(fb);
    Json di = Json::array();
    for (std::size_t k : cs.discrete_indices) di.push_back(k + 1);
    out["discrete_indices"] = std::move(di);
    Json dg = Json::array();
    for (const auto& gen : cs.discrete_gens) dg.push_back(vec_str(gen));
    out["discrete_gens"] = std::move(dg);
    return out;
}

namespace {

std::vector<std::vector<RealElement>> parse_vector_table(const Json& j, std::size_t n,
                                                         const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of vectors");
    std::vector<std::vector<RealElement>> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            bad(std::string(what) + " vectors must have ambient_dim entries");
        std::vector<RealElement> v;
        for (const auto& e : row) {
            if (!e.is_string()) bad(std::string(what) + " entries must be expression strings");
            v.push_back(parse_real(e.get<std::string>()));
        }
        out.push_back(std::move(v));
    }
    return out;
}

ClosedGroup parse_closed_group(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("ambient_dim"))
        bad(std::string(what) + " must be an object with ambient_dim");
    std::size_t n = get_size(j.at("ambient_dim"), "ambient_dim");
    std::vector<std::vector<RealElement>> E, D;
    if (j.contains("E_basis")) E = parse_vector_table(j.at("E_basis"), n, "E_basis");
    if (j.contains("D_gens")) D = parse_vector_table(j.at("D_gens"), n, "D_gens");
    return ClosedGroup(n, std::move(E), std::move(D));
}

Json closed_group_json(const ClosedGroup& G) {
    Json out;
    out["ambient_dim"] = G.n();
    Json E = Json::array();
    for (const auto& v : G.E_basis()) E.push_back(vec_str(v));
    out["E_basis"] = std::move(E);
    Json D = Json::array();
    for (const auto& v : G.D_gens()) D.push_back(vec_str(v));
    out["D_gens"] = std::move(D);
    ComplexDim d = cdim(G);
    out["dim"] = Json{{"p", d.p}, {"r", d.r}};
    return out;
}

}  // namespace

Json run_morphism(const Json& input) {
    if (!input.is_object()) bad("morphism job must be a JSON object");
    if (!input.contains("domain") || !input.contains("codomain"))
        bad("morphism job needs domain and codomain");
    ClosedGroup dom = parse_closed_group(input.at("domain"), "domain");
    ClosedGroup cod = parse_closed_group(input.at("codomain"), "codomain");

    auto parse_matrix_f = [&](const Json& j, std::size_t rows, std::size_t cols, const char* what) {
        MatrixF M(rows, cols);
        if (!j.is_array() || j.size() != rows)
            bad(std::string(what) + " must have one row per codomain coordinate");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!j[i].is_array() || j[i].size() != cols)
                bad(std::string(what) + " rows must match the domain coordinate count");
            for (std::size_t c = 0; c < cols; ++c) {
                if (!j[i][c].is_string()) bad(std::string(what) + " entries must be strings");
                M(i, c) = parse_real(j[i][c].get<std::string>());
            }
        }
        return M;
    };
    auto parse_matrix_z = [&](const Json& j, std::size_t rows, std::size_t cols, const char* what) {
        MatrixZ M(rows, cols);
        if (!j.is_array() || j.size() != rows)
            bad(std::string(what) + " must have one row per codomain coordinate");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!j[i].is_array() || j[i].size() != cols)
                bad(std::string(what) + " rows must match the domain coordinate count");
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& e = j[i][c];
                if (e.is_number_integer())
                    M(i, c) = Int(e.get<long long>());
                else if (e.is_string())
                    M(i, c) = Int(e.get<std::string>());
                else
                    bad(std::string(what) + " entries must be integers");
            }
        }
        return M;
    };

    MatrixF A(cod.E_basis().size(), dom.E_basis().size());
    if (input.contains("A"))
        A = parse_matrix_f(input.at("A"), cod.E_basis().size(), dom.E_basis().size(), "A");
    else if (!dom.E_basis().empty() && !cod.E_basis().empty())
        bad("morphism job needs A");
    MatrixZ B(cod.D_gens().size(), dom.D_gens().size());
    if (input.contains("B"))
        B = parse_matrix_z(input.at("B"), cod.D_gens().size(), dom.D_gens().size(), "B");
    else if (!dom.D_gens().empty() && !cod.D_gens().empty())
        bad("morphism job needs B");

    ClosedHom f(std::move(dom), std::move(cod), std::move(A), std::move(B));

    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "morphism";
    ComplexDim dd = cdim(f.domain()), dc = cdim(f.codomain());
    out["dim_domain"] = Json{{"p", dd.p}, {"r", dd.r}};
    out["dim_codomain"] = Json{{"p", dc.p}, {"r", dc.r}};
    out["injective"] = is_injective(f);
    out["surjective"] = is_surjective(f);
    out["image"] = closed_group_json(image(f));
    out["kernel"] = closed_group_json(kernel(f));
    return out;
}

Json run_relation(const Json& input, int default_scale, const Int& default_max_coeff,
                  const Rational& lll_delta) {
    if (!input.is_object() || !input.contains("xs") || !input.at("xs").is_array())
        bad("relation job needs an xs array");
    std::vector<double> xs;
    for (const auto& x : input.at("xs")) {
        if (!x.is_number()) bad("xs entries must be numbers");
        xs.push_back(x.get<double>());
    }
    int scale = default_scale;
    if (input.contains("scale_digits")) scale = static_cast<int>(get_size(input.at("scale_digits"), "scale_digits"));
    Int max_coeff = default_max_coeff;
    if (input.contains("max_coeff")) {
        const Json& mc = input.at("max_coeff");
        if (mc.is_number_integer())
            max_coeff = Int(mc.get<long long>());
        else if (mc.is_string())
            max_coeff = Int(mc.get<std::string>());
        else
            bad("max_coeff must be an integer");
    }
    Rational delta = lll_delta;
    if (input.contains("delta")) {
        const Json& dj = input.at("delta");
        if (!dj.is_string()) bad("delta must be a rational string like \"99/100\"");
        RealElement d = parse_real(dj.get<std::string>());
        if (!d.is_rational()) bad("delta must be rational");
        delta = d.rational_part();
    }

    RelationSearch rs = find_integer_relation_detail(xs, scale, max_coeff, delta);
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "relation";
    out["scale_digits"] = scale;
    out["max_coeff"] = max_coeff.str();
    out["delta"] = delta.str();
    out["found"] = rs.relation.has_value();
    if (rs.relation) {
        Json coeffs = Json::array();
        for (const Int& c : rs.relation->coefficients) coeffs.push_back(c.str());
        out["coefficients"] = std::move(coeffs);
        out["residual"] = rs.relation->residual;
    }
    return out;
}

Json oracle_report(const JobInput& job, const std::vector<std::size_t>& axes_1based,
                   const OracleOptions& opts) {
    GroupSpec G;
    if (job.mode == "exact") {
        G = job_to_group(job);
    } else {
        G.n = job.n;
        for (const auto& row : job_to_floats(job)) {
            std::vector<RealElement> gen;
            for (double x : row) gen.push_back(RealElement(Rational::from_double(x)));
            G.generators.push_back(std::move(gen));
        }
    }
    std::vector<std::size_t> axes;
    for (std::size_t a : axes_1based) {
        if (a < 1) bad("oracle axes are 1-based");
        axes.push_back(a - 1);
    }
    Json out;
    out["epsilon"] = opts.epsilon;
    out["coefficient_bound"] = opts.coefficient_bound;
    Json ax = Json::array();
    for (std::size_t a : axes_1based) ax.push_back(a);
    out["axes"] = std::move(ax);
    out["dense"] = epsilon_net_oracle(G, axes, opts);
    return out;
}

}  // namespace groupdim
