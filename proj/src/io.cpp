#include "nkz/io.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "nkz/classification.hpp"
#include "nkz/distributivity.hpp"
#include "nkz/hilbert.hpp"
#include "nkz/koszul.hpp"
#include "nkz/monomial.hpp"
#include "nkz/rewriting.hpp"

namespace nkz {

using nlohmann::json;

namespace {

std::pair<int, int> line_of_offset(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational coeff_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("coefficient must be an integer or a \"p/q\" string (" + where + ")");
}

Tensor tensor_from_json(const json& terms, int n, int degree, const std::string& where) {
    if (!terms.is_array()) throw InvalidInput("expected an array of terms (" + where + ")");
    std::vector<std::pair<Word, Rational>> entries;
    std::size_t idx = 0;
    for (const auto& term : terms) {
        const std::string at = where + ", term " + std::to_string(idx++);
        if (!term.is_object() || !term.contains("word") || !term.contains("coeff"))
            throw InvalidInput("term must be {\"word\": [...], \"coeff\": ...} (" + at + ")");
        Word w;
        for (const auto& letter : term["word"]) {
            if (!letter.is_number_integer())
                throw InvalidInput("word letters must be integers (" + at + ")");
            const int v = letter.get<int>();
            if (v < 0 || v >= n)
                throw InvalidInput("generator index " + std::to_string(v) +
                                   " >= n = " + std::to_string(n) + " (" + at + ")");
            w.push_back(v);
        }
        if (degree >= 0 && static_cast<int>(w.size()) != degree)
            throw InvalidInput("word of degree " + std::to_string(w.size()) + ", expected " +
                               std::to_string(degree) + " (" + at + ")");
        entries.emplace_back(std::move(w), coeff_from_json(term["coeff"], at));
    }
    return tensor_from_words<Rational>(n, degree, entries);
}

} // namespace

ParsedDocument parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InvalidInput("syntax error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw InvalidInput("missing integer field \"n\"");
    if (!doc.contains("N") || !doc["N"].is_number_integer())
        throw InvalidInput("missing integer field \"N\"");

    ParsedDocument out;
    out.presentation.n = doc["n"].get<int>();
    out.presentation.N = doc["N"].get<int>();
    if (out.presentation.n < 0) throw InvalidInput("n must be >= 0");
    if (out.presentation.N < 2) throw InvalidInput("N must be >= 2");

    if (doc.contains("relation") && doc.contains("relations"))
        throw InvalidInput("use either \"relation\" or \"relations\", not both");
    if (doc.contains("relation")) {
        out.presentation.relations.push_back(tensor_from_json(
            doc["relation"], out.presentation.n, out.presentation.N, "relation"));
    } else if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw InvalidInput("\"relations\" must be an array");
        std::size_t i = 0;
        for (const auto& rel : doc["relations"])
            out.presentation.relations.push_back(
                tensor_from_json(rel, out.presentation.n, out.presentation.N,
                                 "relation " + std::to_string(i++)));
    }
    for (const auto& rel : out.presentation.relations)
        if (rel.is_zero()) throw InvalidInput("relation tensor is zero");
    validate_presentation(out.presentation);

    if (doc.contains("phi")) {
        if (!doc["phi"].is_array()) throw InvalidInput("\"phi\" must be an array of components");
        std::vector<Tensor> components(static_cast<std::size_t>(out.presentation.N));
        for (std::size_t j = 0; j < components.size(); ++j) {
            components[j].n = out.presentation.n;
            components[j].degree = static_cast<int>(j);
        }
        for (const auto& comp : doc["phi"]) {
            if (!comp.is_object() || !comp.contains("degree") || !comp.contains("terms"))
                throw InvalidInput("phi component must be {\"degree\": j, \"terms\": [...]}");
            const int j = comp["degree"].get<int>();
            if (j < 0 || j >= out.presentation.N)
                throw InvalidInput("phi component degree " + std::to_string(j) +
                                   " outside 0..N-1");
            components[static_cast<std::size_t>(j)] = tensor_from_json(
                comp["terms"], out.presentation.n, j, "phi component " + std::to_string(j));
        }
        out.phi = make_phi(out.presentation.n, out.presentation.N, std::move(components));
    }
    return out;
}

json tensor_to_json(const Tensor& t) {
    json terms = json::array();
    for (const auto& [w, c] : t.terms) {
        json term;
        term["word"] = decode_word(w, t.degree, t.n);
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back(tensor_to_json(r));
    return rows;
}

std::string emit_presentation(const Presentation& p, const std::optional<PhiMap>& phi) {
    json doc;
    doc["n"] = p.n;
    doc["N"] = p.N;
    json rels = json::array();
    for (const auto& f : p.relations) rels.push_back(tensor_to_json(f));
    doc["relations"] = std::move(rels);
    if (phi) {
        json comps = json::array();
        for (int j = 0; j < phi->N; ++j) {
            if (phi->component(j).is_zero()) continue;
            json comp;
            comp["degree"] = j;
            comp["terms"] = tensor_to_json(phi->component(j));
            comps.push_back(std::move(comp));
        }
        doc["phi"] = std::move(comps);
    }
    return doc.dump(2);
}

namespace {

json verdict_entry(const json& value, const std::string& module, const std::string& criterion) {
    json e;
    e["value"] = value;
    e["module"] = module;
    e["criterion"] = criterion;
    return e;
}

/// Random invertible matrix with small entries, as a product of two unit
/// triangular matrices.
std::vector<std::vector<Rational>> random_change_of_basis(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<std::vector<Rational>> lo(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n)));
    auto up = lo;
    for (int i = 0; i < n; ++i) {
        lo[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        up[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < i; ++j) {
            lo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
            up[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = entry(rng);
        }
    }
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n),
                                           std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    lo[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    up[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return out;
}

json series_to_json(const SeriesExpansion& s) {
    json out = json::array();
    for (const auto& c : s.coeffs) out.push_back(c.get_str());
    return out;
}

json cmd_check_koszul(const ParsedDocument& doc, const JobSpec& job) {
    json res;
    const Presentation& p = doc.presentation;
    const Subspace r = relation_space(p);
    if (r.dim() == 1) {
        const KoszulVerdict v = criterion_check(p, job.limits);
        const KoszulVerdict v2 = criterion_check_equalform(p, job.limits);
        res["is_koszul"] =
            verdict_entry(v.is_koszul, "koszul", "single-relation overlap criterion");
        res["equal_form_agrees"] = verdict_entry(v2.is_koszul == v.is_koszul, "koszul",
                                                 "overlap criterion, equality form");
        if (!v.is_koszul) {
            res["failing_m"] = *v.failing_m;
            if (v.witness) res["witness"] = tensor_to_json(*v.witness);
        } else {
            const GlobalDimension g = global_dimension(p, job.probe_limit, job.limits);
            json gd;
            if (g.is_two())
                gd = 2;
            else if (g.is_infinite())
                gd = "infinite";
            else
                gd = json{{"at_least", g.bound}};
            res["global_dimension"] =
                verdict_entry(gd, "koszul", "W-space vanishing along the Koszul complex");
        }
    } else {
        // monomial sets are the other decidable family
        std::vector<Word> words;
        bool monomial = true;
        for (const auto& row : r.rows) {
            if (row.terms.size() != 1) {
                monomial = false;
                break;
            }
            words.push_back(decode_word(row.lead_word(), row.degree, row.n));
        }
        if (!monomial)
            throw InvalidInput("check-koszul handles dim R = 1 or monomial relation sets");
        const MonomialVerdict v = is_koszul_set(make_monomial_set(p.n, p.N, words));
        res["is_koszul"] = verdict_entry(v.is_koszul, "monomial", "monomial overlap criterion");
        if (v.counterexample) res["counterexample_word"] = *v.counterexample;
    }
    return res;
}

json cmd_distributivity(const ParsedDocument& doc, const JobSpec& job) {
    const Presentation& p = doc.presentation;
    const int m_max = job.m_max > 0 ? job.m_max : p.N + 2;
    const GerasimovReport rep = gerasimov_suite(p, m_max, job.lattice_cap, job.limits);
    json res;
    res["single_relation_hypothesis"] = rep.single_relation_hypothesis;
    res["all_distributive"] =
        verdict_entry(rep.all_distributive, "distributivity", "distributive triple identity");
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json entry;
        entry["m"] = e.m;
        entry["lattice_size"] = e.lattice_size;
        entry["distributive"] = e.distributive;
        entries.push_back(std::move(entry));
    }
    res["levels"] = std::move(entries);
    if (rep.violating_triple) {
        json triple = json::array();
        for (const auto& s : *rep.violating_triple) triple.push_back(subspace_to_json(s));
        res["violating_triple"] = std::move(triple);
    }
    return res;
}

json cmd_hilbert(const ParsedDocument& doc, const JobSpec& job) {
    const Presentation& p = doc.presentation;
    json res;
    const SeriesExpansion s = koszul_series(p, job.series_degree, job.limits);
    res["coefficients"] =
        verdict_entry(series_to_json(s), "hilbert", "alternating W-dimension series inverse");
    const SeriesExpansion q = quotient_series(p, job.series_degree, job.limits);
    res["quotient_dims"] =
        verdict_entry(series_to_json(q), "presentation", "exact quotient dimensions");
    res["agreement"] = s.coeffs == q.coeffs;
    return res;
}

json cmd_classify(const ParsedDocument& doc, const JobSpec& job, std::uint64_t seed) {
    const Presentation& p = doc.presentation;
    const Subspace r = relation_space(p);
    if (r.dim() != 1) throw InvalidInput("classify requires a single relation");
    const Tensor& f = r.rows.front();
    json res;
    if (p.N == 2) {
        const QuadraticProfile q = classify_quadratic(p);
        json prof;
        prof["rank"] = q.rank;
        prof["symmetric"] = q.symmetric;
        prof["antisymmetric"] = q.antisymmetric;
        prof["nondegenerate"] = q.nondegenerate;
        prof["P1"] = q.p1;
        prof["P2"] = q.p2;
        prof["koszul"] = q.koszul;
        prof["global_dimension"] = q.gldim_infinite ? json("infinite") : json(2);
        prof["as_gorenstein"] = q.as_gorenstein;
        prof["calabi_yau"] = q.calabi_yau;
        res["quadratic"] =
            verdict_entry(prof, "classification", "coefficient-matrix rank classification");
        // seeded congruence invariance spot check
        std::mt19937_64 rng(seed);
        bool stable = true;
        for (int trial = 0; trial < 5 && stable; ++trial) {
            Presentation tp = p;
            tp.relations = {substitute_generators(f, random_change_of_basis(rng, p.n))};
            const QuadraticProfile q2 = classify_quadratic(tp);
            stable = q2.rank == q.rank && q2.symmetric == q.symmetric &&
                     q2.antisymmetric == q.antisymmetric &&
                     q2.as_gorenstein == q.as_gorenstein && q2.calabi_yau == q.calabi_yau &&
                     q2.gldim_infinite == q.gldim_infinite;
        }
        res["congruence_invariant"] =
            verdict_entry(stable, "classification", "congruence invariance of the profile");
    }
    if (is_antisymmetric(f) && 2 <= p.N && p.N <= p.n) {
        const AntisymProfile a = classify_antisymmetric(p, job.limits);
        json prof;
        prof["koszul"] = a.koszul;
        prof["global_dimension"] = a.global_dimension;
        prof["as_gorenstein"] = a.as_gorenstein;
        prof["calabi_yau"] = a.calabi_yau;
        prof["verified_zero_overlaps"] = a.verified_zero_overlaps;
        res["antisymmetric"] =
            verdict_entry(prof, "classification", "antisymmetric relation classification");
    }
    if (res.empty())
        throw InvalidInput("classify: no classification applies (need N = 2 or an antisymmetric relation)");
    return res;
}

json cmd_monomial(const ParsedDocument& doc, const JobSpec& job) {
    const Presentation& p = doc.presentation;
    const Subspace r = relation_space(p);
    json res;
    if (r.dim() == 1 && r.rows.front().terms.size() == 1) {
        const Word f = decode_word(r.rows.front().lead_word(), p.N, p.n);
        const bool k = is_koszul_single(f);
        res["word"] = f;
        res["is_koszul"] = verdict_entry(k, "monomial", "single-monomial period criterion");
        if (k) {
            const MonomialProfile prof = monomial_profile(p.n, f);
            json pj;
            pj["global_dimension"] = prof.gldim_infinite ? json("infinite") : json(2);
            pj["gk_dimension"] = prof.gk_dimension < 0 ? json("infinite") : json(prof.gk_dimension);
            pj["as_gorenstein"] = prof.as_gorenstein;
            const RationalSeries rs = prof.pure_power ? power_denominator(p.n, p.N)
                                                      : regular_denominator(p.n, p.N);
            json den = json::array();
            for (const auto& c : rs.denominator) den.push_back(c.get_str());
            json num = json::array();
            for (const auto& c : rs.numerator) num.push_back(c.get_str());
            pj["series_numerator"] = num;
            pj["series_denominator"] = den;
            const int gk_num = gk_dimension(rs, GkMode::numeric, job.tolerance);
            pj["gk_dimension_numeric"] = gk_num < 0 ? json("infinite") : json(gk_num);
            res["profile"] = verdict_entry(pj, "monomial", "single-monomial closed forms");
            res["gk_modes_agree"] =
                gk_num == gk_dimension(rs, GkMode::closed_form, job.tolerance);
        }
        json counts = json::array();
        for (int d = 0; d <= job.series_degree; ++d) counts.push_back(avoid_count(f, p.n, d, job.limits));
        res["avoid_counts"] = verdict_entry(counts, "monomial", "factor-automaton word count");
    } else {
        std::vector<Word> words;
        for (const auto& row : r.rows) {
            if (row.terms.size() != 1) throw InvalidInput("monomial command requires monomial relations");
            words.push_back(decode_word(row.lead_word(), row.degree, row.n));
        }
        const MonomialVerdict v = is_koszul_set(make_monomial_set(p.n, p.N, words));
        res["is_koszul"] = verdict_entry(v.is_koszul, "monomial", "monomial overlap criterion");
        if (v.counterexample) res["counterexample_word"] = *v.counterexample;
    }
    return res;
}

json cmd_pbw(const ParsedDocument& doc, const JobSpec& job) {
    if (!doc.phi) throw InvalidInput("pbw command requires a \"phi\" section");
    const Presentation& p = doc.presentation;
    const PbwVerdict v = pbw_check(p, *doc.phi, job.limits);
    json res;
    res["is_pbw"] = verdict_entry(v.is_pbw, "pbw", "deformation conditions on W_{N+1}");
    if (!v.is_pbw) {
        res["failed_condition"] = *v.failed_condition;
        if (v.witness) res["witness"] = tensor_to_json(*v.witness);
    }
    const Subspace r = relation_space(p);
    if (r.dim() == 1 && r.rows.front().terms.size() == 1 &&
        is_letter_power(decode_word(r.rows.front().lead_word(), p.N, p.n)) &&
        r.rows.front().lead_word() == 0) {
        const bool closed = pbw_power_closed_form(p.n, p.N, *doc.phi);
        res["power_closed_form"] =
            verdict_entry(closed, "pbw", "pure-power deformation closed form");
        res["closed_form_agrees"] = closed == v.is_pbw;
    }
    return res;
}

} // namespace

std::string Report::render(const std::string& format) const {
    if (format == "json") return doc.dump(2) + "\n";
    // text rendering: flat key: value lines
    std::ostringstream os;
    std::function<void(const json&, std::string)> walk = [&](const json& node, std::string prefix) {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
                walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        } else {
            os << prefix << ": " << node.dump() << "\n";
        }
    };
    walk(doc, "");
    return os.str();
}

Report run_job(const JobSpec& job) {
    const auto start = std::chrono::steady_clock::now();
    json doc;
    doc["command"] = job.command;

    if (job.command == "census") {
        doc["input"] = json{{"n", job.census_n}, {"N", job.census_N}, {"p", job.census_p}};
        doc["results"]["count"] =
            verdict_entry(koszul_census(job.census_n, job.census_N, job.census_p, job.limits),
                          "monomial", "exhaustive monomial-set enumeration");
        const auto stop0 = std::chrono::steady_clock::now();
        doc["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop0 - start).count();
        return {std::move(doc)};
    }

    const ParsedDocument parsed = parse_presentation(job.input_text);
    doc["input"] = json::parse(emit_presentation(parsed.presentation, parsed.phi));

    if (job.command == "check-koszul") {
        doc["results"] = cmd_check_koszul(parsed, job);
    } else if (job.command == "distributivity") {
        doc["results"] = cmd_distributivity(parsed, job);
    } else if (job.command == "hilbert") {
        doc["results"] = cmd_hilbert(parsed, job);
    } else if (job.command == "classify") {
        doc["results"] = cmd_classify(parsed, job, job.seed);
    } else if (job.command == "monomial") {
        doc["results"] = cmd_monomial(parsed, job);
    } else if (job.command == "pbw") {
        doc["results"] = cmd_pbw(parsed, job);
    } else if (job.command == "free-product") {
        const ParsedDocument second = parse_presentation(job.second_input_text);
        const Presentation prod = free_product(parsed.presentation, second.presentation);
        doc["results"]["presentation"] = json::parse(emit_presentation(prod));
        doc["results"]["n"] = prod.n;
    } else if (job.command == "report-all") {
        json all;
        all["koszul"] = cmd_check_koszul(parsed, job);
        const Subspace r = relation_space(parsed.presentation);
        all["distributivity"] = cmd_distributivity(parsed, job);
        bool koszul_known = false;
        try {
            koszul_known = r.dim() == 1
                               ? criterion_check(parsed.presentation, job.limits).is_koszul
                               : true;
        } catch (const InvalidInput&) {
            koszul_known = false;
        }
        if (koszul_known) {
            try {
                all["hilbert"] = cmd_hilbert(parsed, job);
            } catch (const InvalidInput&) {
                // series only for verifiable-Koszul presentations
            }
        }
        if (parsed.presentation.N == 2 && r.dim() == 1)
            all["classification"] = cmd_classify(parsed, job, job.seed);
        if (parsed.phi) all["pbw"] = cmd_pbw(parsed, job);
        doc["results"] = std::move(all);
    } else {
        throw InvalidInput("unknown command: " + job.command);
    }

    const auto stop = std::chrono::steady_clock::now();
    doc["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return {std::move(doc)};
}

} // namespace nkz
