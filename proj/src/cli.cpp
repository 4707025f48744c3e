#include "stabdiv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabdiv/division.hpp"
#include "stabdiv/groebner.hpp"
#include "stabdiv/norms.hpp"
#include "stabdiv/operators.hpp"
#include "stabdiv/parse.hpp"
#include "stabdiv/stability.hpp"

namespace stabdiv {

namespace {

using json = nlohmann::ordered_json;

struct ExitWith {
    int code;
    std::string message;
};

std::vector<std::uint32_t> parse_weights(const std::string& text) {
    std::vector<std::uint32_t> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v <= 0) throw ExitWith{1, "weights must be positive integers"};
        w.push_back(static_cast<std::uint32_t>(v));
    }
    if (w.empty()) throw ExitWith{1, "empty weight list"};
    return w;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint32_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return v;
}

Rational parse_t(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw ExitWith{1, std::string("bad rational for --t: ") + e.what()};
    }
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitWith{1, "cannot open input file: " + path};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<Polynomial> parse_gens(const std::vector<std::string>& texts, const std::string& file,
                                   std::size_t dim) {
    std::vector<std::string> all = texts;
    if (!file.empty())
        for (auto& l : read_lines(file)) all.push_back(l);
    if (all.empty()) throw ExitWith{1, "no generators given (use --gens or --gens-file)"};
    std::vector<Polynomial> gens;
    for (const auto& s : all) {
        try {
            gens.push_back(parse_polynomial(s, dim));
        } catch (const ParseError& e) {
            throw ExitWith{1, "syntax error in '" + s + "': " + e.what()};
        }
    }
    return gens;
}

std::vector<VectorPolynomial> parse_vector_gens(const std::vector<std::string>& texts,
                                                const std::string& file, std::size_t dim) {
    std::vector<std::string> all = texts;
    if (!file.empty())
        for (auto& l : read_lines(file)) all.push_back(l);
    if (all.empty()) throw ExitWith{1, "no generators given (use --gens or --gens-file)"};
    std::vector<VectorPolynomial> gens;
    for (const auto& s : all) {
        try {
            gens.push_back(parse_vector_polynomial(s, dim));
        } catch (const ParseError& e) {
            throw ExitWith{1, "syntax error in '" + s + "': " + e.what()};
        }
    }
    return gens;
}

void warn_section3_range(const Rational& t) {
    if (t < Rational(-2))
        std::cerr << "note: t = " << to_string(t)
                  << " lies outside the range t >= -2 covered by the bivariate stability "
                     "guarantees; results are exploratory\n";
}

void warn_normality_range(const Rational& t) {
    if (t <= Rational(-3))
        std::cerr << "note: t = " << to_string(t)
                  << " lies outside the range t > -3 covered by the essential-normality "
                     "transfer; results are exploratory\n";
}

std::string emit(const json& j, const std::string& format, const std::string& csv) {
    if (format == "csv") return csv;
    if (format == "text") {
        std::string out = j.dump(2);
        return out + "\n";
    }
    return j.dump() + "\n";
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::string path = out_path;
    const char* dir = std::getenv("STABDIV_OUTPUT_DIR");
    if (dir && *dir && out_path.front() != '/') path = std::string(dir) + "/" + out_path;
    std::ofstream f(path);
    if (!f) throw ExitWith{1, "cannot write to " + path};
    f << content;
}

json division_json(const DivisionResult& dr, std::size_t dim, bool with_trace) {
    json j;
    json quots = json::array();
    for (const auto& q : dr.quotients) quots.push_back(format(q));
    j["quotients"] = quots;
    j["remainder"] = format(dr.remainder);
    if (with_trace) j["trace"] = json::parse(trace_to_json(dr.trace, dim));
    return j;
}

json vector_division_json(const VectorDivisionResult& dr, std::size_t dim, bool with_trace) {
    json j;
    json quots = json::array();
    for (const auto& q : dr.quotients) quots.push_back(format(q));
    j["quotients"] = quots;
    j["remainder"] = format(dr.remainder);
    if (with_trace) j["trace"] = json::parse(trace_to_json(dr.trace, dim));
    return j;
}

json report_json(const StabilityReport& rep, const std::vector<Polynomial>& gens,
                 const WeightedOrder& ord, const SpaceParams& sp) {
    json j;
    json params;
    params["d"] = sp.d;
    params["weights"] = ord.weights;
    params["t"] = to_string(sp.t);
    params["q_min"] = rep.q_min;
    params["q_max"] = rep.q_max;
    params["samples"] = rep.samples_per_slice;
    params["seed"] = rep.seed;
    json gtexts = json::array();
    for (const auto& g : gens) gtexts.push_back(format(g, ord));
    params["generators"] = gtexts;
    j["params"] = params;
    json records = json::array();
    for (const auto& r : rep.records) {
        json rec;
        rec["degree"] = r.degree;
        rec["dim"] = r.slice_dim;
        rec["max_ratio_sq"] = to_string(r.max_ratio_sq);
        rec["mean_ratio_sq"] = to_string(r.mean_ratio_sq);
        rec["nonzero_remainders"] = r.nonzero_remainders;
        if (r.max_minimal_ratio_sq) rec["max_minimal_ratio_sq"] = to_string(*r.max_minimal_ratio_sq);
        records.push_back(std::move(rec));
    }
    j["records"] = records;
    j["sup_ratio_sq"] = to_string(rep.sup_ratio_sq);
    j["linear_constant_A"] = rep.linear_constant_A;
    j["verdict"] = to_string(rep.verdict);
    j["seed"] = rep.seed;
    return j;
}

std::string report_csv(const StabilityReport& rep) {
    std::ostringstream out;
    out << "degree,dim,max_ratio_sq,mean_ratio_sq,nonzero_remainders\n";
    for (const auto& r : rep.records)
        out << r.degree << "," << r.slice_dim << "," << r.max_ratio_sq.get_d() << ","
            << r.mean_ratio_sq.get_d() << "," << r.nonzero_remainders << "\n";
    return out.str();
}

// ---- subcommand configs ---------------------------------------------------

struct CommonOut {
    std::string format = "json";
    std::string out_path;
};

int cmd_norm(std::size_t d, const std::string& t_str, const std::string& poly,
             const std::string& vector_poly, int c_ratio_max, bool check_equivalence,
             const CommonOut& out) {
    SpaceParams sp(d, parse_t(t_str));
    json j;
    j["d"] = d;
    j["t"] = to_string(sp.t);
    std::ostringstream csv;
    if (!poly.empty()) {
        Polynomial p = parse_polynomial(poly, d);
        j["poly"] = format(p);
        j["norm_sq"] = to_string(poly_norm_sq(p, sp));
        if (check_equivalence && !p.is_zero()) {
            EquivalenceVerdict v = equivalence_bounds_check(p, sp);
            json e;
            e["lower_ok"] = v.lower_ok;
            e["upper_ok"] = v.upper_ok;
            e["min_degree"] = v.min_degree;
            e["max_degree"] = v.max_degree;
            j["equivalence"] = e;
        }
    }
    if (!vector_poly.empty()) {
        VectorPolynomial v = parse_vector_polynomial(vector_poly, d);
        j["vector"] = format(v);
        j["vector_norm_sq"] = to_string(vector_poly_norm_sq(v, sp));
    }
    if (c_ratio_max >= 0) {
        json table = json::array();
        csv << "n,c_ratio\n";
        for (int n = 0; n <= c_ratio_max; ++n) {
            Rational c = c_ratio(static_cast<std::uint64_t>(n), sp);
            json row;
            row["n"] = n;
            row["c"] = to_string(c);
            table.push_back(std::move(row));
            csv << n << "," << c.get_d() << "\n";
        }
        j["c_ratio"] = table;
    }
    write_output(emit(j, out.format, csv.str()), out.out_path);
    return 0;
}

int cmd_divide(const std::string& weights_str, const std::string& h_str,
               const std::vector<std::string>& gens_str, const std::string& gens_file,
               bool vector_mode, bool with_trace, const CommonOut& out) {
    WeightedOrder ord(parse_weights(weights_str));
    const std::size_t d = ord.dim();
    json j;
    j["weights"] = ord.weights;
    if (vector_mode) {
        auto gens = parse_vector_gens(gens_str, gens_file, d);
        VectorPolynomial h = parse_vector_polynomial(h_str, d);
        VectorDivisionResult dr = divide_vector(h, gens, ord);
        j.update(vector_division_json(dr, d, with_trace));
    } else {
        auto gens = parse_gens(gens_str, gens_file, d);
        Polynomial h = parse_polynomial(h_str, d);
        DivisionResult dr = divide(h, gens, ord);
        j.update(division_json(dr, d, with_trace));
    }
    write_output(emit(j, out.format, ""), out.out_path);
    return 0;
}

int cmd_groebner(const std::string& weights_str, const std::vector<std::string>& gens_str,
                 const std::string& gens_file, bool reduce, bool equalize, int equalize_to,
                 const CommonOut& out) {
    WeightedOrder ord(parse_weights(weights_str));
    auto gens = parse_gens(gens_str, gens_file, ord.dim());

    bool all_quasi = true;
    for (const auto& g : gens)
        if (!quasi_homogeneous_degree(g, ord)) all_quasi = false;

    GroebnerBasis gb =
        all_quasi ? quasi_homogeneous_basis(gens, ord, reduce) : buchberger(gens, ord, reduce);
    json j;
    j["weights"] = ord.weights;
    j["reduced"] = gb.reduced;
    j["quasi_homogeneous"] = all_quasi;
    json basis = json::array();
    for (const auto& g : gb.generators) basis.push_back(format(g, ord));
    j["basis"] = basis;
    Codimension codim = staircase_codimension(gb);
    j["staircase_codimension"] = codim.finite ? json(codim.value) : json("infinite");
    if (equalize) {
        if (!all_quasi) throw ExitWith{1, "--equalize needs quasi-homogeneous generators"};
        std::uint64_t m =
            equalize_to > 0 ? static_cast<std::uint64_t>(equalize_to) : default_equalize_degree(gb);
        json eq = json::array();
        for (const auto& g : equalize_degrees(gb, m)) eq.push_back(format(g, ord));
        j["equalized_degree"] = m;
        j["equalized"] = eq;
    }
    write_output(emit(j, out.format, ""), out.out_path);
    return 0;
}

int cmd_beurling(const std::vector<std::string>& gens_str, const std::string& gens_file,
                 const CommonOut& out) {
    auto gens = parse_gens(gens_str, gens_file, 2);
    BeurlingForm bf = beurling_form(gens);
    json j;
    j["gcd"] = format(bf.gcd_part);
    json cof = json::array();
    for (const auto& c : bf.cofactors) cof.push_back(format(c));
    j["cofactors"] = cof;
    j["cofactor_codimension"] = bf.codimension.finite ? json(bf.codimension.value) : json("infinite");
    write_output(emit(j, out.format, ""), out.out_path);
    return 0;
}

int cmd_certify(const std::string& weights_str, const std::string& t_str,
                const std::vector<std::string>& gens_str, const std::string& gens_file,
                std::uint64_t q_max, std::size_t samples, std::uint64_t seed, bool serial,
                bool minimal_oracle, bool expect_stable, const std::string& row_gap_str,
                const CommonOut& out) {
    WeightedOrder ord(parse_weights(weights_str));
    SpaceParams sp(ord.dim(), parse_t(t_str));
    warn_section3_range(sp.t);
    auto gens = parse_gens(gens_str, gens_file, ord.dim());
    CertifyOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.parallel = !serial;
    opts.minimal_oracle = minimal_oracle;
    StabilityReport rep = certify(gens, ord, sp, q_max, opts);
    json j = report_json(rep, gens, ord, sp);
    if (!row_gap_str.empty()) {
        json gaps = json::array();
        for (std::uint32_t D : parse_uint_list(row_gap_str)) {
            RowOperatorGap gap = row_operator_gap(gens, ord, sp, D);
            json g;
            g["D"] = gap.D;
            g["sigma_min"] = gap.sigma_min;
            g["implied_constant"] = gap.implied_constant;
            g["domain_dim"] = gap.domain_dim;
            g["codomain_dim"] = gap.codomain_dim;
            g["kernel_dim"] = gap.kernel_dim;
            gaps.push_back(std::move(g));
        }
        j["row_operator_gap"] = gaps;
    }
    write_output(emit(j, out.format, report_csv(rep)), out.out_path);
    if (expect_stable && rep.verdict == Verdict::growing) return 3;
    return 0;
}

int cmd_counterexample(const std::string& t_str, std::uint32_t n_max, bool repaired,
                       bool expect_stable, const CommonOut& out) {
    SpaceParams sp(2, parse_t(t_str));
    warn_section3_range(sp.t);
    WeightedOrder ord({1, 1});

    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1), zero(2);
    VectorPolynomial f1({x, zero, y}), f2({zero, x, y});
    std::vector<VectorPolynomial> basis =
        repaired ? std::vector<VectorPolynomial>{f1 - f2, f2} : std::vector<VectorPolynomial>{f1, f2};

    auto rows = certify_vector(basis, ord, sp, n_max);
    json j;
    j["t"] = to_string(sp.t);
    j["basis"] = repaired ? "repaired" : "standard";
    json table = json::array();
    std::ostringstream csv;
    csv << "n,ratio_sq,remainder_norm_sq\n";
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["ratio_sq"] = to_string(r.ratio_sq);
        row["remainder_norm_sq"] = to_string(r.remainder_norm_sq);
        table.push_back(std::move(row));
        csv << r.n << "," << r.ratio_sq.get_d() << "," << r.remainder_norm_sq.get_d() << "\n";
    }
    j["rows"] = table;
    bool growing = rows.size() >= 2 && rows.back().ratio_sq >= rows.front().ratio_sq * 2;
    j["verdict"] = growing ? "growing" : "bounded";
    write_output(emit(j, out.format, csv.str()), out.out_path);
    if (expect_stable && growing) return 3;
    return 0;
}

int cmd_scan(std::size_t d, const std::string& t_str, const std::vector<std::string>& gens_str,
             const std::string& gens_file, double p, const std::string& d_list_str,
             const CommonOut& out) {
    SpaceParams sp(d, parse_t(t_str));
    warn_normality_range(sp.t);
    auto gens = parse_gens(gens_str, gens_file, d);
    auto D_list = parse_uint_list(d_list_str);
    ScanResult scan = essential_normality_scan(gens, sp, p, D_list);
    if (!scan.p_in_recommended_range)
        std::cerr << "note: p = " << p << " is not above d = " << d
                  << "; the Schatten tail heuristics assume p > d\n";
    json j;
    j["d"] = d;
    j["t"] = to_string(sp.t);
    j["p"] = p;
    json values = json::array();
    std::ostringstream csv;
    csv << "D,j,schatten_2p,increment\n";
    for (const auto& v : scan.values) {
        json row;
        row["D"] = v.D;
        row["j"] = v.j + 1;
        row["value"] = v.value;
        row["with_boundary"] = v.full_value;
        row["increment"] = v.increment;
        values.push_back(std::move(row));
        csv << v.D << "," << v.j + 1 << "," << v.value << "," << v.increment << "\n";
    }
    j["series"] = values;
    write_output(emit(j, out.format, csv.str()), out.out_path);
    return 0;
}

int cmd_fang_xia(std::size_t d, const std::string& t_str, const std::string& f_str,
                 std::uint32_t D, std::size_t samples, std::uint64_t seed, const CommonOut& out) {
    SpaceParams sp(d, parse_t(t_str));
    warn_normality_range(sp.t);
    Polynomial f = parse_polynomial(f_str, d);
    FangXiaReport rep = fang_xia_probe(f, sp, D, samples, seed);
    json j;
    j["d"] = d;
    j["t"] = to_string(sp.t);
    j["f"] = format(f);
    j["D"] = D;
    j["seed"] = seed;
    json rows = json::array();
    std::ostringstream csv;
    csv << "lhs,rhs,ratio\n";
    for (const auto& s : rep.samples) {
        json row;
        row["g"] = s.g;
        row["lhs"] = s.lhs;
        row["rhs"] = s.rhs;
        row["ratio"] = s.ratio;
        rows.push_back(std::move(row));
        csv << s.lhs << "," << s.rhs << "," << s.ratio << "\n";
    }
    j["samples"] = rows;
    j["empirical_constant"] = rep.max_ratio;
    write_output(emit(j, out.format, csv.str()), out.out_path);
    return 0;
}

int cmd_angle_check(std::size_t ambient, std::size_t m_dim, double cos_angle, std::size_t samples,
                    std::size_t trials, std::uint64_t seed, const CommonOut& out) {
    json j;
    j["ambient_dim"] = ambient;
    j["m_dim"] = m_dim;
    j["cos_angle"] = cos_angle;
    j["seed"] = seed;
    std::size_t total_violations = 0, total_intermediate = 0;
    json rows = json::array();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        AngleInstance inst = make_angle_instance(ambient, m_dim, cos_angle, seed + trial);
        AngleCheckReport rep = angle_bound_check(inst.m_basis, inst.v, inst.T, samples, seed + trial);
        total_violations += rep.violations;
        total_intermediate += rep.intermediate_violations;
        json row;
        row["c"] = rep.c;
        row["C"] = rep.C;
        row["bound_factor"] = rep.bound_factor;
        row["violations"] = rep.violations;
        row["intermediate_violations"] = rep.intermediate_violations;
        row["worst_ratio"] = rep.worst_ratio;
        rows.push_back(std::move(row));
    }
    j["trials"] = rows;
    j["total_violations"] = total_violations;
    j["total_intermediate_violations"] = total_intermediate;
    write_output(emit(j, out.format, ""), out.out_path);
    return 0;
}

}  // namespace

namespace {

struct CoutRedirect {
    std::streambuf* old;
    explicit CoutRedirect(std::streambuf* buf) : old(std::cout.rdbuf(buf)) {}
    ~CoutRedirect() { std::cout.rdbuf(old); }
};

}  // namespace

CliResult run_cli_capture(const std::vector<std::string>& args) {
    std::ostringstream captured;
    CoutRedirect redirect(captured.rdbuf());
    std::vector<std::string> argv_s = args;
    argv_s.insert(argv_s.begin(), "stabdiv");
    std::vector<char*> argv;
    for (auto& s : argv_s) argv.push_back(s.data());
    int code = run_cli(static_cast<int>(argv.size()), argv.data());
    return CliResult{code, captured.str()};
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact stable-division certification for weighted polynomial ideals"};
    app.require_subcommand(1);

    CommonOut out;

    // shared option values
    std::string weights = "1,1", t_str = "-2", h_str, poly_str, vector_str, gens_file, f_str;
    std::vector<std::string> gens;
    std::size_t d = 2;
    int c_ratio_max = -1;
    bool check_equiv = false, vector_mode = false, with_trace = false;
    bool no_reduce = false, equalize = false;
    int equalize_to = 0;
    std::uint64_t q_max = 20, seed = 0;
    std::size_t samples = 50;
    bool serial = false, minimal_oracle = false, expect_stable = false, repaired = false;
    std::string row_gap, d_list = "10,15,20";
    std::uint32_t n_max = 10, D = 12;
    double p = 3.0, cos_angle = 0.5;
    std::size_t ambient = 20, m_dim = 5, trials = 1;

    auto add_out = [&](CLI::App* c) {
        c->add_option("--output", out.format, "json|csv|text")->default_val("json");
        c->add_option("--out", out.out_path, "write the report to this file");
    };

    CLI::App* norm = app.add_subcommand("norm", "exact norms and norm-ratio tables");
    norm->add_option("--d", d)->default_val(2);
    norm->add_option("--t", t_str)->default_val("-2");
    norm->add_option("--poly", poly_str);
    norm->add_option("--vector", vector_str);
    norm->add_option("--c-ratio-max", c_ratio_max);
    norm->add_flag("--check-equivalence", check_equiv);
    add_out(norm);

    CLI::App* div = app.add_subcommand("divide", "divide with remainder under a weighted order");
    div->set_help_flag("--help");  // frees -h/--h for the dividend
    div->add_option("--weights", weights)->default_val("1,1");
    div->add_option("--h", h_str)->required();
    div->add_option("--gens", gens);
    div->add_option("--gens-file", gens_file);
    div->add_flag("--vector", vector_mode);
    div->add_flag("--trace", with_trace);
    add_out(div);

    CLI::App* grob = app.add_subcommand("groebner", "basis, staircase, degree equalization");
    grob->add_option("--weights", weights)->default_val("1,1");
    grob->add_option("--gens", gens);
    grob->add_option("--gens-file", gens_file);
    grob->add_flag("--no-reduce", no_reduce);
    grob->add_flag("--equalize", equalize);
    grob->add_option("--equalize-to", equalize_to, "target weighted degree (0 = automatic)");
    add_out(grob);

    CLI::App* beur = app.add_subcommand("beurling", "gcd part, cofactors, codimension (d = 2)");
    beur->add_option("--gens", gens);
    beur->add_option("--gens-file", gens_file);
    add_out(beur);

    CLI::App* cert = app.add_subcommand("certify", "sweep degree slices and certify ratios");
    cert->add_option("--weights", weights)->default_val("1,1");
    cert->add_option("--t", t_str)->default_val("-2");
    cert->add_option("--gens", gens);
    cert->add_option("--gens-file", gens_file);
    cert->add_option("--q-max", q_max)->required();
    cert->add_option("--samples", samples)->default_val(50);
    cert->add_option("--seed", seed)->default_val(0);
    cert->add_flag("--serial", serial, "disable the parallel slice sweep");
    cert->add_flag("--minimal-oracle", minimal_oracle,
                   "also record exact minimal-representation ratios");
    cert->add_flag("--expect-stable", expect_stable, "exit 3 on a growing verdict");
    cert->add_option("--row-gap", row_gap, "comma list of truncation degrees");
    add_out(cert);

    CLI::App* ctr = app.add_subcommand("counterexample", "vector-valued ratio table");
    ctr->add_option("--t", t_str)->default_val("-2");
    ctr->add_option("--n-max", n_max)->default_val(10);
    ctr->add_flag("--repaired", repaired, "use the repaired generating set");
    ctr->add_flag("--expect-stable", expect_stable);
    add_out(ctr);

    CLI::App* scan = app.add_subcommand("scan-commutators", "Schatten truncation series");
    scan->add_option("--d", d)->default_val(2);
    scan->add_option("--t", t_str)->default_val("-2");
    scan->add_option("--gens", gens);
    scan->add_option("--gens-file", gens_file);
    scan->add_option("--p", p)->default_val(3.0);
    scan->add_option("--D-list", d_list)->default_val("10,15,20");
    add_out(scan);

    CLI::App* fx = app.add_subcommand("fang-xia-probe", "norm-lowering inequality probe");
    fx->add_option("--d", d)->default_val(2);
    fx->add_option("--t", t_str)->default_val("-2");
    fx->add_option("--f", f_str)->required();
    fx->add_option("--D", D)->default_val(12);
    fx->add_option("--samples", samples)->default_val(50);
    fx->add_option("--seed", seed)->default_val(0);
    add_out(fx);

    CLI::App* angle = app.add_subcommand("angle-check", "subspace angle bound verification");
    angle->add_option("--ambient-dim", ambient)->default_val(20);
    angle->add_option("--m-dim", m_dim)->default_val(5);
    angle->add_option("--cos-angle", cos_angle)->default_val(0.5);
    angle->add_option("--samples", samples)->default_val(100);
    angle->add_option("--trials", trials)->default_val(1);
    angle->add_option("--seed", seed)->default_val(0);
    add_out(angle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (norm->parsed())
            return cmd_norm(d, t_str, poly_str, vector_str, c_ratio_max, check_equiv, out);
        if (div->parsed())
            return cmd_divide(weights, h_str, gens, gens_file, vector_mode, with_trace, out);
        if (grob->parsed())
            return cmd_groebner(weights, gens, gens_file, !no_reduce, equalize, equalize_to, out);
        if (beur->parsed()) return cmd_beurling(gens, gens_file, out);
        if (cert->parsed())
            return cmd_certify(weights, t_str, gens, gens_file, q_max, samples, seed, serial,
                               minimal_oracle, expect_stable, row_gap, out);
        if (ctr->parsed()) return cmd_counterexample(t_str, n_max, repaired, expect_stable, out);
        if (scan->parsed()) return cmd_scan(d, t_str, gens, gens_file, p, d_list, out);
        if (fx->parsed()) return cmd_fang_xia(d, t_str, f_str, D, samples, seed, out);
        if (angle->parsed())
            return cmd_angle_check(ambient, m_dim, cos_angle, samples, trials, seed, out);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalDiagnosticError& e) {
        std::cerr << "numerical diagnostic: " << e.what() << " (condition " << e.condition << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace stabdiv
