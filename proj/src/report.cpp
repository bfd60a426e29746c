#include "matchfab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "matchfab/stats.hpp"

namespace matchfab {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerifyResult::any_failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const auto& kv) { return kv.second == CheckStatus::fail; });
}

bool VerifyResult::any_skipped() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const auto& kv) { return kv.second == CheckStatus::skipped; });
}

namespace {

Json rational_json(const Rational& r) {
    return Json{{"exact", to_string(r)}, {"approx", to_double(r)}};
}

std::string compact_count(const BigInt& v) {
    if (auto e = exact_log2(v); e && *e >= 16) return "2^" + std::to_string(*e);
    const std::string dec = to_decimal(v);
    if (dec.size() <= 18) return dec;
    return "~" + dec.substr(0, 1) + "." + dec.substr(1, 3) + "e+" + std::to_string(dec.size() - 1);
}

Graph generate(Family family, int g, const Caps& caps) {
    switch (family) {
        case Family::fractal: return gen_fractal(g, caps.max_generation);
        case Family::nonfractal: return gen_nonfractal(g, caps.max_generation);
        case Family::sierpinski: return gen_sierpinski_ext(g, caps.max_generation);
    }
    throw Error("unknown family");
}

struct CheckSink {
    VerifyResult& out;

    void record(const std::string& name, bool pass, Json detail = {}) {
        out.verdicts[name] = pass ? CheckStatus::pass : CheckStatus::fail;
        if (!detail.is_null()) out.detail[name] = std::move(detail);
    }
    void skip(const std::string& name, const std::string& why) {
        out.verdicts[name] = CheckStatus::skipped;
        out.detail[name] = Json{{"skipped", why}};
    }
};

void check_counts_formulas(CheckSink& sink, Family family, int g, const Graph& graph) {
    const auto fc = counts(family, g);
    bool ok = BigInt(graph.vertex_count()) == fc.n && BigInt(graph.edge_count()) == fc.e;
    if (family != Family::sierpinski) {
        // degree multiset implied by lv/degree_of, and the two sum rules
        std::map<long long, BigInt> expected;
        BigInt vertex_sum = 0, degree_sum = 0;
        for (const auto& [t, cnt] : fc.lv) {
            expected[fc.degree_of.at(t).get_si()] += cnt;
            vertex_sum += cnt;
            degree_sum += cnt * fc.degree_of.at(t);
        }
        ok = ok && vertex_sum == fc.n && degree_sum == 2 * fc.e;
        std::map<long long, BigInt> actual;
        for (int v = 0; v < graph.vertex_count(); ++v) ++actual[graph.degree(v)];
        ok = ok && actual == expected;
        // creation iterations recorded by the generator agree with lv
        std::map<int, BigInt> by_iteration;
        for (int v = 0; v < graph.vertex_count(); ++v)
            ++by_iteration[graph.meta(v).gen_iteration];
        for (const auto& [t, cnt] : fc.lv) ok = ok && by_iteration[t] == cnt;
    }
    sink.record("counts_formulas", ok,
                Json{{"n", to_decimal(fc.n)}, {"e", to_decimal(fc.e)},
                     {"generated_n", graph.vertex_count()}, {"generated_e", graph.edge_count()}});
}

void check_constructions_agree(CheckSink& sink, Family family, int g, const Graph& amalgam,
                               const Caps& caps) {
    const Graph other = family == Family::fractal
                            ? gen_fractal_edge_replacement(g, caps.max_generation)
                            : gen_nonfractal_edge_replacement(g, caps.max_generation);
    sink.record("constructions_agree_degrees", amalgam.degree_multiset() == other.degree_multiset());
    if (amalgam.vertex_count() > caps.empirical_vertices) {
        sink.skip("constructions_agree_distances", "vertex count above empirical cap");
        return;
    }
    const auto da = distance_stats(amalgam);
    const auto db = distance_stats(other);
    sink.record("constructions_agree_distances",
                da.multiset_digest == db.multiset_digest && da.average == db.average &&
                    da.diameter == db.diameter,
                Json{{"amalgam_digest", da.multiset_digest}, {"edge_replacement_digest", db.multiset_digest}});
}

void check_degree_sequence_identity(CheckSink& sink, Family family, int g, const Graph& graph,
                                    const Caps& caps) {
    const Graph other = family == Family::fractal ? gen_nonfractal(g, caps.max_generation)
                                                  : gen_fractal(g, caps.max_generation);
    sink.record("degree_sequence_identity", graph.degree_multiset() == other.degree_multiset());
}

void check_structural(CheckSink& sink, Family family, int g, const Graph& graph,
                      const Caps& caps) {
    const auto rep = degree_stats(graph);

    // knn: empirical map vs closed form, exact rationals
    {
        const auto closed = knn_closed(family, g);
        bool ok = rep.knn.size() == closed.size();
        for (const auto& [d, val] : rep.knn) {
            auto it = closed.find(d);
            ok = ok && it != closed.end() && it->second == val;
        }
        Json detail;
        for (const auto& [d, val] : rep.knn) detail[std::to_string(d)] = to_string(val);
        sink.record("knn_closed_form", ok, detail);
    }

    // Pearson: undefined at g=1 (regular), exact closed form beyond
    if (g == 1) {
        sink.record("pearson_undefined_at_g1", !rep.pearson.has_value());
    } else if (family == Family::fractal) {
        const Rational closed = pearson_closed_fractal(g);
        sink.record("pearson_closed_form", rep.pearson && *rep.pearson == closed,
                    Json{{"empirical", rep.pearson ? to_string(*rep.pearson) : "undefined"},
                         {"closed", to_string(closed)}});
    } else {
        sink.record("pearson_zero", rep.pearson && *rep.pearson == 0,
                    Json{{"empirical", rep.pearson ? to_string(*rep.pearson) : "undefined"}});
    }

    if (graph.vertex_count() > caps.empirical_vertices) {
        sink.skip("average_distance_closed_form", "vertex count above empirical cap");
    } else {
        const auto ds = distance_stats(graph);
        const Rational closed = avg_distance_closed(family, g);
        sink.record("average_distance_closed_form", ds.average == closed,
                    Json{{"empirical", to_string(ds.average)}, {"closed", to_string(closed)}});
    }
}

void verify_fractal(CheckSink& sink, int g, const Caps& caps) {
    const Graph f = gen_fractal(g, caps.max_generation);
    check_counts_formulas(sink, Family::fractal, g, f);
    check_constructions_agree(sink, Family::fractal, g, f, caps);
    check_degree_sequence_identity(sink, Family::fractal, g, f, caps);
    check_structural(sink, Family::fractal, g, f, caps);

    const auto sizes = fractal_matching_sizes(g);
    if (f.vertex_count() > caps.empirical_vertices) {
        sink.skip("matching_number_closed_form", "vertex count above empirical cap");
        sink.skip("hub_deleted_matching_sizes", "vertex count above empirical cap");
        sink.skip("no_perfect_matching", "vertex count above empirical cap");
    } else {
        const int v1 = *f.hub(HubRole::v1), v2 = *f.hub(HubRole::v2);
        const Matching mm = maximum_matching(f);
        const int nu = mm.size();
        Json detail{{"solver", nu}, {"closed", to_decimal(sizes.c)}};
        if (f.vertex_count() <= 256) detail["maximum_matching"] = matching_to_json(mm);
        sink.record("matching_number_closed_form", BigInt(nu) == sizes.c, detail);
        const int nu_b = matching_number(remove_vertices(f, {v1}).graph);
        const int nu_a = matching_number(remove_vertices(f, {v1, v2}).graph);
        sink.record("hub_deleted_matching_sizes",
                    BigInt(nu_b) == sizes.b && BigInt(nu_a) == sizes.a,
                    Json{{"solver_b", nu_b}, {"closed_b", to_decimal(sizes.b)},
                         {"solver_a", nu_a}, {"closed_a", to_decimal(sizes.a)}});
        // F_1 is the quadrangle and perfectly matched; g >= 2 never is.
        const bool has_pm = 2 * nu == f.vertex_count();
        sink.record("no_perfect_matching", has_pm == (g == 1));
    }

    const auto cnt = fractal_matching_counts(g);
    if (f.edge_count() > caps.enum_edges) {
        sink.skip("maximum_matching_count_bruteforce", "edge count above enumeration cap");
        sink.skip("hub_deleted_matching_counts", "edge count above enumeration cap");
    } else {
        const int v1 = *f.hub(HubRole::v1), v2 = *f.hub(HubRole::v2);
        const BigInt theta = count_maximum_matchings_bruteforce(f, caps.enum_edges);
        sink.record("maximum_matching_count_bruteforce", theta == cnt.theta,
                    Json{{"bruteforce", to_decimal(theta)}, {"recursion", to_decimal(cnt.theta)}});
        const BigInt varphi =
            count_maximum_matchings_bruteforce(remove_vertices(f, {v1}).graph, caps.enum_edges);
        const BigInt phi =
            count_maximum_matchings_bruteforce(remove_vertices(f, {v1, v2}).graph, caps.enum_edges);
        sink.record("hub_deleted_matching_counts", varphi == cnt.varphi && phi == cnt.phi,
                    Json{{"bruteforce_varphi", to_decimal(varphi)},
                         {"recursion_varphi", to_decimal(cnt.varphi)},
                         {"bruteforce_phi", to_decimal(phi)},
                         {"recursion_phi", to_decimal(cnt.phi)}});
    }
}

void verify_nonfractal(CheckSink& sink, int g, const Caps& caps) {
    const Graph h = gen_nonfractal(g, caps.max_generation);
    check_counts_formulas(sink, Family::nonfractal, g, h);
    check_constructions_agree(sink, Family::nonfractal, g, h, caps);
    check_degree_sequence_identity(sink, Family::nonfractal, g, h, caps);
    check_structural(sink, Family::nonfractal, g, h, caps);

    const OrientedGraph he = gen_nonfractal_oriented(g, caps.max_generation);
    sink.record("orientation_covers_graph", he.base() == h);

    const BigInt exponent = nonfractal_pm_exponent(g);
    if (h.vertex_count() > caps.empirical_vertices) {
        sink.skip("perfect_matching_exists", "vertex count above empirical cap");
    } else {
        const Matching mm = maximum_matching(h);
        Json detail = Json::object();
        if (h.vertex_count() <= 256) detail["perfect_matching"] = matching_to_json(mm);
        sink.record("perfect_matching_exists", mm.perfect, detail);
    }

    if (h.edge_count() > caps.enum_edges) {
        sink.skip("pm_count_bruteforce", "edge count above enumeration cap");
    } else {
        const BigInt brute = count_perfect_matchings_bruteforce(h, caps.enum_edges).count;
        sink.record("pm_count_bruteforce", brute == nonfractal_pm_count(g),
                    Json{{"bruteforce", to_decimal(brute)}, {"closed", "2^" + to_decimal(exponent)}});
    }

    if (h.vertex_count() > caps.det_order) {
        sink.skip("pm_count_determinant", "matrix order above determinant cap");
    } else {
        const BigInt via_det = pm_count_via_determinant(he);
        sink.record("pm_count_determinant", via_det == nonfractal_pm_count(g),
                    Json{{"sqrt_det", compact_count(via_det)}, {"closed", "2^" + to_decimal(exponent)}});
    }

    {
        PfaffianVerdict pv = verify_pfaffian(he, caps.cycle_count);
        if (pv.indeterminate)
            sink.skip("pfaffian_certification", "cycle cap exceeded");
        else
            sink.record("pfaffian_certification", pv.pfaffian,
                        Json{{"nice_cycles_checked", pv.cycles_checked}});
    }

    const BigInt next_order = counts(Family::nonfractal, g + 1).n;
    if (g + 1 > caps.max_generation || next_order > caps.det_order) {
        sink.skip("determinant_lemmas", "next-generation matrix order above determinant cap");
    } else {
        const auto lemmas = verify_determinant_lemmas(g);
        bool ok = true;
        Json detail;
        for (const auto& [name, chk] : lemmas) {
            ok = ok && chk.pass;
            detail[name] = Json{{"pass", chk.pass}, {"lhs", chk.lhs}, {"rhs", chk.rhs}};
        }
        sink.record("determinant_lemmas", ok, detail);
    }
}

void verify_sierpinski(CheckSink& sink, int g, const Caps& caps) {
    const Graph s = gen_sierpinski_ext(g, caps.max_generation);
    check_counts_formulas(sink, Family::sierpinski, g, s);
    const auto degrees = s.degree_multiset();
    sink.record("three_regular",
                std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 3; }));
    sink.record("connected", is_connected(s));

    if (s.edge_count() > caps.enum_edges) {
        sink.skip("pm_count_bruteforce", "edge count above enumeration cap");
    } else {
        const BigInt brute = count_perfect_matchings_bruteforce(s, caps.enum_edges).count;
        const BigInt expected = (g == 1) ? BigInt(3) : sierpinski_pm_count(g);
        sink.record("pm_count_bruteforce", brute == expected,
                    Json{{"bruteforce", to_decimal(brute)}, {"expected", to_decimal(expected)}});
    }

    if (g >= 2) {
        // Route through the line-graph count: S++_g = L(B(S++_{g-1})) and all
        // degrees of B(S++_{g-1}) are <= 3, so the count is 2^{E-N+1} there.
        const auto prev = counts(Family::sierpinski, g - 1);
        const BigInt lemma_exponent = 2 * prev.e - (prev.n + prev.e) + 1;
        sink.record("pm_count_line_graph_rule", lemma_exponent == sierpinski_pm_exponent(g),
                    Json{{"line_graph_exponent", to_decimal(lemma_exponent)},
                         {"closed_exponent", to_decimal(sierpinski_pm_exponent(g))}});
    }
}

} // namespace

VerifyResult run_verify(Family family, int g, const Caps& caps) {
    VerifyResult out;
    CheckSink sink{out};
    switch (family) {
        case Family::fractal: verify_fractal(sink, g, caps); break;
        case Family::nonfractal: verify_nonfractal(sink, g, caps); break;
        case Family::sierpinski: verify_sierpinski(sink, g, caps); break;
    }
    return out;
}

Json verify_to_json(Family family, int g, const VerifyResult& r) {
    Json verdicts;
    for (const auto& [name, status] : r.verdicts) verdicts[name] = to_string(status);
    return Json{{"family", to_string(family)},
                {"g", g},
                {"verdicts", verdicts},
                {"detail", r.detail}};
}

Json report_row(Family family, int g, const Caps& caps) {
    Json row;
    row["family"] = to_string(family);
    row["g"] = g;
    const auto fc = counts(family, g);
    row["n"] = to_decimal(fc.n);
    row["e"] = to_decimal(fc.e);

    Json cnt;
    if (family == Family::fractal) {
        const auto sizes = fractal_matching_sizes(g);
        const auto triple = fractal_matching_counts(g);
        row["matching_number"] = to_decimal(sizes.c);
        cnt["maximum_matchings"] = to_decimal(triple.theta);
        cnt["phi"] = to_decimal(triple.phi);
        cnt["varphi"] = to_decimal(triple.varphi);
        row["counts"] = cnt;
        row["entropy"] = nullptr; // no perfect matchings beyond g = 1
    } else {
        const BigInt exponent = family == Family::nonfractal
                                    ? nonfractal_pm_exponent(g)
                                    : (g == 1 ? BigInt(-1) : sierpinski_pm_exponent(g));
        const BigInt psi = (family == Family::sierpinski && g == 1)
                               ? BigInt(3)
                               : pow2(exponent.get_ui());
        row["matching_number"] = to_decimal(fc.n / 2);
        cnt["perfect_matchings"] = to_decimal(psi);
        if (exponent >= 0) cnt["log2_perfect_matchings"] = to_decimal(exponent);
        row["counts"] = cnt;
        const auto est = entropy_estimate(psi, fc.n.get_si());
        row["entropy"] = Json{{"log2_count", est.log2_count}, {"z", est.z}};
    }

    if (family == Family::sierpinski) {
        row["mu"] = nullptr;
        row["pearson"] = nullptr;
        row["knn"] = nullptr;
    } else {
        row["mu"] = rational_json(avg_distance_closed(family, g));
        if (family == Family::fractal)
            row["pearson"] = (g == 1) ? Json(nullptr) : rational_json(pearson_closed_fractal(g));
        else
            row["pearson"] = (g == 1) ? Json(nullptr) : rational_json(Rational(0));
        Json knn;
        for (const auto& [d, val] : knn_closed(family, g))
            knn[std::to_string(d)] = to_string(val);
        row["knn"] = knn;
    }

    // Empirical columns where the caps allow, with agreement verdicts.
    Json verdicts = Json::object();
    if (fc.n <= caps.empirical_vertices) {
        const Graph graph = generate(family, g, caps);
        const int nu = matching_number(graph);
        row["matching_number_empirical"] = nu;
        verdicts["matching_number"] =
            (to_decimal(BigInt(nu)) == row["matching_number"].get<std::string>()) ? "pass" : "fail";
        if (family != Family::sierpinski) {
            const auto ds = distance_stats(graph);
            row["mu_empirical"] = rational_json(ds.average);
            verdicts["mu"] =
                (ds.average == avg_distance_closed(family, g)) ? "pass" : "fail";
            const auto rep = degree_stats(graph);
            if (rep.pearson) row["pearson_empirical"] = rational_json(*rep.pearson);
            if (g >= 2) {
                const Rational expect = family == Family::fractal ? pearson_closed_fractal(g)
                                                                  : Rational(0);
                verdicts["pearson"] = (rep.pearson && *rep.pearson == expect) ? "pass" : "fail";
            }
        }
    }
    row["verdicts"] = verdicts;
    return row;
}

std::string report_table(Family family, int g_min, int g_max, const Caps& caps) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-3s %-10s %-10s %-10s %-22s %-10s %-12s %-10s\n", "g",
                  "N", "E", "nu", family == Family::fractal ? "theta" : "psi", "z", "mu", "r");
    os << line;
    for (int g = g_min; g <= g_max; ++g) {
        const Json row = report_row(family, g, caps);
        const std::string count = family == Family::fractal
                                      ? compact_count(from_decimal(
                                            row["counts"]["maximum_matchings"].get<std::string>()))
                                      : compact_count(from_decimal(
                                            row["counts"]["perfect_matchings"].get<std::string>()));
        std::string z = "-", mu = "-", r = "-";
        if (!row["entropy"].is_null()) {
            char zb[32];
            std::snprintf(zb, sizeof zb, "%.6f", row["entropy"]["z"].get<double>());
            z = zb;
        }
        if (!row["mu"].is_null()) {
            char mb[32];
            std::snprintf(mb, sizeof mb, "%.6f", row["mu"]["approx"].get<double>());
            mu = mb;
        }
        if (!row["pearson"].is_null()) {
            char rb[32];
            std::snprintf(rb, sizeof rb, "%.6f", row["pearson"]["approx"].get<double>());
            r = rb;
        }
        std::snprintf(line, sizeof line, "%-3d %-10s %-10s %-10s %-22s %-10s %-12s %-10s\n", g,
                      row["n"].get<std::string>().c_str(), row["e"].get<std::string>().c_str(),
                      row["matching_number"].get<std::string>().c_str(), count.c_str(), z.c_str(),
                      mu.c_str(), r.c_str());
        os << line;
    }
    return os.str();
}

Json matching_to_json(const Matching& m) {
    Json edges = Json::array();
    for (const auto& e : m.edges) edges.push_back(Json::array({e.u, e.v}));
    return edges;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (g.family_tag()) j["family"] = to_string(*g.family_tag());
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = edges;
    Json iterations = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) iterations.push_back(g.meta(v).gen_iteration);
    j["gen_iteration"] = iterations;
    Json hubs;
    for (HubRole role : {HubRole::v1, HubRole::v2, HubRole::v3, HubRole::v4})
        if (auto v = g.hub(role)) hubs[to_string(role)] = *v;
    if (!hubs.is_null()) j["hubs"] = hubs;
    return j;
}

std::string orientation_sidecar(const OrientedGraph& og) {
    std::ostringstream os;
    for (const auto& de : og.directed_edges()) os << de.tail << ' ' << de.head << '\n';
    return os.str();
}

} // namespace matchfab
