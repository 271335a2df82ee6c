/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: census, basis, build, params, tables, check.
// Exit codes: 0 success, 1 verdict failure, 2 input validation error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include <gagc/gagcode.hpp>
#include <gagc/tables.hpp>

using namespace gagc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

CurvePtr load_curve_file(const std::string& path) { return load_curve(slurp(path), stem_of(path)); }

std::vector<std::uint64_t> parse_b_vector(const std::string& text) {
    std::vector<std::uint64_t> b;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) b.push_back(std::stoull(tok));
    if (b.empty()) throw std::invalid_argument("empty B vector");
    return b;
}

ConstructionSpec::Recipe parse_recipe(const std::string& r) {
    if (r == "onepoint") return ConstructionSpec::Recipe::one_point_infinity;
    if (r == "qmr") return ConstructionSpec::Recipe::two_point;
    throw std::invalid_argument("recipe must be 'onepoint' or 'qmr'");
}

struct CommonOpts {
    unsigned threads = 1;
    std::uint64_t field_budget = kDefaultFieldBudget;
};

int cmd_census(const std::string& curve_path, unsigned t, const std::string& csv_out, const std::string& places_out,
               const CommonOpts& common) {
    CurvePtr curve = load_curve_file(curve_path);
    EnumOptions opts;
    opts.threads = common.threads;
    opts.field_budget = common.field_budget;
    CensusResult res = enumerate_places(curve, t, opts);
    std::string csv = res.census.to_csv();
    std::cout << csv;
    if (!csv_out.empty()) spit(csv_out, csv);
    if (!places_out.empty()) {
        std::ostringstream os;
        for (const auto& p : res.places) os << p->to_string() << "\n";
        spit(places_out, os.str());
    }
    return 0;
}

ConstructionSpec make_spec(const std::string& b_text, long k, long m, const std::string& recipe, std::uint64_t seed) {
    ConstructionSpec spec;
    spec.B = parse_b_vector(b_text);
    spec.t = static_cast<unsigned>(spec.B.size());
    spec.recipe = parse_recipe(recipe);
    spec.k_target = k;
    spec.m = m;
    spec.seed = seed;
    return spec;
}

unsigned census_depth_for(const ConstructionSpec& spec) {
    unsigned t = std::max(spec.t, 1u);
    if (spec.recipe == ConstructionSpec::Recipe::two_point) t = std::max(t, 4u);
    return t;
}

int cmd_params(const std::string& curve_path, const std::string& b_text, long k, long m, const std::string& recipe,
               const CommonOpts& common) {
    CurvePtr curve = load_curve_file(curve_path);
    ConstructionSpec spec = make_spec(b_text, k, m, recipe, kDefaultSeed);
    EnumOptions opts;
    opts.threads = common.threads;
    opts.field_budget = common.field_budget;
    CensusResult census = enumerate_places(curve, spec.t, opts);
    CodeParams p = params(census, spec);
    std::cout << "[" << p.n << "," << p.k_lower << (p.k_exact ? "" : "+") << ",d>=" << p.designed << "]_" << curve->fq->size() << "\n";
    return 0;
}

int cmd_build(const std::string& curve_path, const std::string& b_text, long k, long m, const std::string& recipe,
              const std::string& out, std::uint64_t seed, const CommonOpts& common) {
    CurvePtr curve = load_curve_file(curve_path);
    ConstructionSpec spec = make_spec(b_text, k, m, recipe, seed);
    EnumOptions opts;
    opts.threads = common.threads;
    opts.field_budget = common.field_budget;
    CensusResult census = enumerate_places(curve, census_depth_for(spec), opts);
    GagCode code = assemble(census, spec);
    std::cout << code.summary() << "\n";
    if (!out.empty()) {
        spit(out, write_matrix_text(code));
        spit(out + ".json", metadata_json(code));
    }
    return 0;
}

int cmd_basis(const std::string& curve_path, long k, long m, const std::string& recipe, const std::string& out,
              const CommonOpts& common) {
    CurvePtr curve = load_curve_file(curve_path);
    ConstructionSpec spec;
    spec.recipe = parse_recipe(recipe);
    spec.k_target = k;
    spec.m = m;
    const long mm = detail::resolve_m(*curve, spec);
    FunctionSpace fs = [&] {
        if (spec.recipe == ConstructionSpec::Recipe::one_point_infinity) return hermitian_onepoint_basis(curve, static_cast<unsigned>(mm));
        EnumOptions opts;
        opts.threads = common.threads;
        opts.field_budget = common.field_budget;
        spec.t = 4;
        spec.B.assign(4, 0);
        CensusResult census = enumerate_places(curve, 4, opts);
        Divisor G(curve);
        detail::select_places(census, spec, G, mm);
        return brill_noether_basis(curve, G);
    }();
    std::cout << "dim " << fs.dim << " for divisor of degree " << fs.G.degree() << "\n";
    std::string text = fs.to_text();
    if (!out.empty())
        spit(out, text);
    else
        std::cout << text;
    return 0;
}

int cmd_tables(const std::string& x1_path, const std::string& x2_path, const std::string& golden_dir, const CommonOpts& common) {
    CurvePtr x1 = load_curve_file(x1_path);
    CurvePtr x2 = load_curve_file(x2_path);
    EnumOptions opts;
    opts.threads = common.threads;
    opts.field_budget = common.field_budget;
    TableInputs in;
    in.x1 = enumerate_places(x1, 4, opts).census;
    in.g1 = x1->genus;
    in.x2 = enumerate_places(x2, 4, opts).census;
    in.g2 = x2->genus;
    TableReport rep = reproduce_tables(in, golden_dir);
    if (!rep.match) {
        std::cout << rep.diff;
        std::cout << rep.family_count << " families, " << rep.new_code_rows << " new-code rows: MISMATCH\n";
        return 1;
    }
    std::cout << rep.family_count << " families, " << rep.new_code_rows << " new-code rows: MATCH\n";
    return 0;
}

int cmd_check(const std::string& matrix_path, bool exhaustive, std::uint64_t samples, std::uint64_t seed, std::uint64_t budget,
              const std::string& csv_out, const CommonOpts& common) {
    std::ifstream in(matrix_path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + matrix_path);
    MatrixFile mf = read_matrix_text(in);
    DistanceReport rep = exhaustive ? min_distance_exhaustive(mf.gen, mf.designed, budget, common.threads)
                                    : min_distance_sampled(mf.gen, mf.designed, samples, seed);
    std::cout << rep.to_string() << "\n";
    if (!csv_out.empty()) spit(csv_out, "method,value,words,designed,verdict\n" + rep.to_csv() + "\n");
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised algebraic-geometry codes over small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    app.add_option("--threads", common.threads, "worker threads (results are identical for any count)");
    app.add_option("--field-budget", common.field_budget, "largest extension field enumerated");

    std::string curve_path, b_text, recipe = "qmr", out, csv_out, places_out;
    std::string x1_path = "curves/x1.curve", x2_path = "curves/x2.curve", golden_dir = "golden";
    std::string matrix_path;
    long k = -1, m = -1;
    unsigned t = 4;
    std::uint64_t samples = 10000, seed = kDefaultSeed, budget = kDefaultWordBudget;
    bool exhaustive = false;

    auto* census = app.add_subcommand("census", "enumerate places up to degree t");
    census->add_option("curve", curve_path)->required();
    census->add_option("--t", t, "maximum place degree")->required();
    census->add_option("--csv", csv_out, "write the census CSV here");
    census->add_option("--places", places_out, "write the place list here");

    auto* basis = app.add_subcommand("basis", "compute a Riemann-Roch basis");
    basis->add_option("curve", curve_path)->required();
    basis->add_option("--k", k, "target dimension (sets m = k + g - 1)");
    basis->add_option("--m", m, "divisor parameter");
    basis->add_option("--recipe", recipe, "divisor recipe: onepoint | qmr");
    basis->add_option("--out", out, "write the basis listing here");

    auto* build = app.add_subcommand("build", "assemble a generator matrix");
    build->add_option("curve", curve_path)->required();
    build->add_option("--B", b_text, "comma-separated B_1,...,B_t")->required();
    build->add_option("--k", k, "target dimension");
    build->add_option("--m", m, "divisor parameter");
    build->add_option("--recipe", recipe, "divisor recipe: onepoint | qmr");
    build->add_option("--out", out, "write the matrix here (metadata in <out>.json)");
    build->add_option("--seed", seed, "seed recorded in the metadata");

    auto* pars = app.add_subcommand("params", "compute (n, k, d*) without a basis");
    pars->add_option("curve", curve_path)->required();
    pars->add_option("--B", b_text)->required();
    pars->add_option("--k", k, "target dimension");
    pars->add_option("--m", m, "divisor parameter");
    pars->add_option("--recipe", recipe);

    auto* tables = app.add_subcommand("tables", "reproduce the code-family tables against golden files");
    tables->add_option("--x1", x1_path, "Kummer curve spec");
    tables->add_option("--x2", x2_path, "Hermitian curve spec");
    tables->add_option("--golden", golden_dir, "directory with families.csv and new_codes.csv");

    auto* check = app.add_subcommand("check", "verify the minimum distance of a stored matrix");
    check->add_option("matrix", matrix_path)->required();
    check->add_flag("--exhaustive", exhaustive, "exact search over all messages");
    check->add_option("--samples", samples, "sampled upper bound with this many messages");
    check->add_option("--seed", seed, "sampling seed");
    check->add_option("--budget", budget, "word budget for exhaustive search");
    check->add_option("--csv", csv_out, "write the report CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (census->parsed()) return cmd_census(curve_path, t, csv_out, places_out, common);
        if (basis->parsed()) return cmd_basis(curve_path, k, m, recipe, out, common);
        if (build->parsed()) return cmd_build(curve_path, b_text, k, m, recipe, out, seed, common);
        if (pars->parsed()) return cmd_params(curve_path, b_text, k, m, recipe, common);
        if (tables->parsed()) return cmd_tables(x1_path, x2_path, golden_dir, common);
        if (check->parsed()) return cmd_check(matrix_path, exhaustive, samples, seed, budget, csv_out, common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
