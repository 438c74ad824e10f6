// Command-line front end: parse DGA description files, run checks and
// transformations, and emit obstruction certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "legdga/dga_io.hpp"
#include "legdga/obstruction.hpp"
#include "legdga/shipped.hpp"

namespace {

using namespace legdga;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

ChekanovDGA load_dga(const std::string& path) { return parse_dga(read_file(path), path); }

std::pair<int, int> parse_degrees(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw Error("expected --degrees p,q (e.g. --degrees 1,-1)");
    try {
        return {std::stoi(spec.substr(0, comma)), std::stoi(spec.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error("expected --degrees p,q (e.g. --degrees 1,-1)");
    }
}

std::string summary_line(const ChekanovDGA& dga) {
    std::ostringstream out;
    out << "dga " << (dga.display_name().empty() ? "unnamed" : dga.display_name()) << ": "
        << dga.algebra()->size() << " generators";
    if (const auto& meta = dga.metadata()) {
        if (!meta->smooth_type.empty()) out << ", smooth " << meta->smooth_type;
        out << ", tb " << meta->thurston_bennequin;
        out << ", maslov " << meta->maslov_number;
    }
    return out.str();
}

std::string axiom_line(const AxiomReport& report) {
    std::ostringstream out;
    out << "degree check: " << (report.degree_ok ? "ok" : "FAILED") << "; d^2 = 0: "
        << (report.d_squared_zero ? "ok" : "FAILED");
    return out.str();
}

int run_check(const std::string& path) {
    const ChekanovDGA dga = load_dga(path);
    const AxiomReport report = check_axioms(dga);
    std::cout << summary_line(dga) << "\n" << axiom_line(report) << "\n";
    for (const auto& violation : report.violations) std::cout << "  - " << violation << "\n";
    return report.ok() ? 0 : 1;
}

// The document name gets a "_mirror" suffix, toggled so that mirroring twice
// restores the input modulo normalization.
ChekanovDGA toggle_mirror_name(ChekanovDGA dga) {
    auto meta = dga.metadata();
    if (!meta) return dga;
    constexpr std::string_view suffix = "_mirror";
    std::string& name = meta->display_name;
    if (name.size() >= suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        name.erase(name.size() - suffix.size());
    else
        name += suffix;
    return ChekanovDGA(dga.algebra(), dga.differentials(), std::move(meta));
}

int run_mirror(const std::string& path, const std::string& out_path) {
    write_output(format_dga(toggle_mirror_name(mirror(load_dga(path)))), out_path);
    return 0;
}

ElementaryAutomorphism parse_substitution(const ChekanovDGA& dga, const std::string& spec) {
    const auto pos = spec.find("->");
    if (pos == std::string::npos)
        throw Error("expected substitution of the form \"<gen> -> <polynomial>\"");
    std::istringstream head(spec.substr(0, pos));
    std::string target;
    if (!(head >> target) || (head >> std::ws, !head.eof()))
        throw Error("expected a single generator before '->'");
    const GenIndex idx = dga.algebra()->index_of(target);
    const Polynomial image = parse_polynomial(dga.algebra(), spec.substr(pos + 2));
    const Word gen_word = Word::single(idx);
    if (!image.contains(gen_word))
        throw Error("substitution image must have the form " + target + " + shift");
    return {target, image + Polynomial::from_word(dga.algebra(), gen_word)};
}

int run_subst(const std::string& path, const std::vector<std::string>& specs,
              const std::string& out_path) {
    ChekanovDGA dga = load_dga(path);
    for (const auto& spec : specs) dga = apply_automorphism(dga, parse_substitution(dga, spec));
    write_output(format_dga(dga), out_path);
    return 0;
}

int run_project(const std::string& path, const std::string& map_path) {
    const ChekanovDGA dga = load_dga(path);
    const ProjectionRecipe recipe =
        parse_projection_recipe(read_file(map_path), dga.algebra(), map_path);
    const ChekanovDGA substituted = apply_automorphisms(dga, recipe.substitutions);
    const auto images = ideal_images(recipe.map, substituted);

    for (const auto& line : recipe_substitution_lines(recipe))
        std::cout << "substitution: " << line << "\n";
    const Algebra& target = *recipe.map.target();
    std::cout << "projection target:";
    for (GenIndex g = 0; g < target.size(); ++g)
        std::cout << (g ? "," : "") << " " << target.generator(g).name << " : "
                  << target.generator(g).degree;
    std::cout << "\n";
    for (const auto& line : recipe_projection_lines(recipe.map))
        std::cout << "projection: " << line << "\n";
    if (images.empty()) {
        std::cout << "ideal images: (none)\n";
    } else {
        std::cout << "ideal images:";
        for (std::size_t i = 0; i < images.size(); ++i)
            std::cout << (i ? ";" : "") << " " << to_string(images[i]);
        std::cout << "\n";
    }
    return 0;
}

int run_nf(const std::string& rules_path, const std::string& expr) {
    const RewriteSystem sys = parse_rules(read_file(rules_path), rules_path);
    const Polynomial p = parse_polynomial(sys.algebra(), expr);
    std::cout << to_string(normal_form(sys, p)) << "\n";
    return 0;
}

int run_witness(const std::string& path, const std::string& x, const std::string& y,
                const std::string& z, const std::string& degrees) {
    const ChekanovDGA dga = load_dga(path);
    const auto [p, q] = parse_degrees(degrees);
    const Witness witness{parse_polynomial(dga.algebra(), x), parse_polynomial(dga.algebra(), y),
                          parse_polynomial(dga.algebra(), z), p, q};
    const WitnessCheck check = verify_witness(dga, witness);
    std::cout << "x = " << to_string(witness.x) << "\n";
    std::cout << "y = " << to_string(witness.y) << "\n";
    std::cout << "z = " << to_string(witness.z) << "\n";
    std::cout << "degrees: (" << p << ", " << q << ")\n";
    std::cout << "witness: " << (check.valid ? "valid" : "invalid (" + check.diagnostic + ")")
              << "\n";
    return check.valid ? 0 : 1;
}

ProjectionRecipe load_recipe(const std::string& map_path, const AlgebraPtr& source) {
    if (map_path.empty()) return shipped::k62_projection(source);
    return parse_projection_recipe(read_file(map_path), source, map_path);
}

int run_distinguish(const std::string& left_path, const std::string& right_path,
                    const std::string& degrees, std::size_t max_len,
                    const std::string& map_path) {
    const ChekanovDGA left = load_dga(left_path);
    const ChekanovDGA right = load_dga(right_path);
    const auto [p, q] = parse_degrees(degrees);
    const ProjectionRecipe recipe = load_recipe(map_path, right.algebra());
    const DistinguishReport report = distinguish(left, right, p, q, recipe, max_len);
    std::cout << format_certificate(report);
    return report.verdict == Verdict::nonisomorphic ? 0 : 1;
}

int run_reproduce() {
    const ChekanovDGA knot = shipped::k62();
    const ChekanovDGA mirrored = toggle_mirror_name(mirror(knot));
    bool all_ok = true;

    std::cout << "== " << knot.display_name() << " vs its Legendrian mirror ==\n\n";

    std::cout << "-- axioms --\n";
    std::cout << summary_line(knot) << "\n";
    const AxiomReport knot_axioms = check_axioms(knot);
    std::cout << axiom_line(knot_axioms) << "\n";
    const AxiomReport mirror_axioms = check_axioms(mirrored);
    std::cout << "mirror: " << axiom_line(mirror_axioms) << "\n\n";
    all_ok = all_ok && knot_axioms.ok() && mirror_axioms.ok();

    std::cout << "-- witnesses: 1 in H_1 * H_-1 of " << knot.display_name() << " --\n";
    const AlgebraPtr alg = knot.algebra();
    const std::vector<Witness> witnesses = {
        {parse_polynomial(alg, "a10"), parse_polynomial(alg, "a5 a3"),
         parse_polynomial(alg, "a1"), 1, -1},
        {parse_polynomial(alg, "a10"), parse_polynomial(alg, "a11"),
         parse_polynomial(alg, "a9"), 1, -1},
    };
    for (const Witness& w : witnesses) {
        const WitnessCheck check = verify_witness(knot, w);
        std::cout << "x = " << to_string(w.x) << ", y = " << to_string(w.y)
                  << ", z = " << to_string(w.z) << ": "
                  << (check.valid ? "valid" : "INVALID (" + check.diagnostic + ")") << "\n";
        all_ok = all_ok && check.valid;
    }
    for (const Witness& w : witnesses) {
        const Witness rev = reversed(w);
        const WitnessCheck check = verify_witness(mirrored, rev);
        std::cout << "mirrored, degrees (" << rev.p << ", " << rev.q
                  << "): x = " << to_string(rev.x) << ", y = " << to_string(rev.y)
                  << ", z = " << to_string(rev.z) << ": "
                  << (check.valid ? "valid" : "INVALID (" + check.diagnostic + ")") << "\n";
        all_ok = all_ok && check.valid;
    }
    std::cout << "\n";

    std::cout << "-- refutation: 1 not in H_-1 * H_1 of " << knot.display_name() << " --\n";
    const ProjectionRecipe recipe = shipped::k62_projection(alg);
    const ChekanovDGA substituted = apply_automorphisms(knot, recipe.substitutions);
    const RefutationReport refutation =
        refute_unit_product(substituted, -1, 1, recipe.map, 9);
    std::cout << format_refutation_section(refutation, recipe_substitution_lines(recipe),
                                           recipe_projection_lines(recipe.map));
    std::cout << "\n";
    all_ok = all_ok && refutation.status == RefutationStatus::refuted_structural;

    std::cout << "-- distinguish in degrees (1, -1) --\n";
    const DistinguishReport verdict = distinguish(knot, mirrored, 1, -1, recipe, 9);
    std::cout << format_certificate(verdict);
    all_ok = all_ok && verdict.verdict == Verdict::nonisomorphic;

    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chekanov DGAs of Legendrian knots over GF(2)"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Verify the DGA axioms of a description file");
    std::string check_file;
    check->add_option("file", check_file, "DGA description file")->required();

    auto* mirror_cmd = app.add_subcommand("mirror", "Reverse every differential monomial");
    std::string mirror_file, mirror_out;
    mirror_cmd->add_option("file", mirror_file, "DGA description file")->required();
    mirror_cmd->add_option("-o,--output", mirror_out, "Output file (default: stdout)");

    auto* subst = app.add_subcommand("subst", "Apply tame generator substitutions");
    std::string subst_file, subst_out;
    std::vector<std::string> subst_specs;
    subst->add_option("file", subst_file, "DGA description file")->required();
    subst->add_option("substitution", subst_specs, "Substitutions like \"a3 -> a3 + 1\"")
        ->required();
    subst->add_option("-o,--output", subst_out, "Output file (default: stdout)");

    auto* project = app.add_subcommand("project", "Project boundary images through a map file");
    std::string project_file, project_map;
    project->add_option("file", project_file, "DGA description file")->required();
    project->add_option("--map", project_map, "Projection map file")->required();

    auto* nf = app.add_subcommand("nf", "Normal form of an expression under a rule file");
    std::string nf_rules, nf_expr;
    nf->add_option("--rules", nf_rules, "Rewrite rules file")->required();
    nf->add_option("expr", nf_expr, "Polynomial expression")->required();

    auto* witness = app.add_subcommand("witness", "Verify a unit-product witness");
    std::string witness_file, witness_x, witness_y, witness_z, witness_degrees;
    witness->add_option("file", witness_file, "DGA description file")->required();
    witness->add_option("--x", witness_x, "Cycle of degree p")->required();
    witness->add_option("--y", witness_y, "Cycle of degree q")->required();
    witness->add_option("--z", witness_z, "Primitive of 1 + x y")->required();
    witness->add_option("--degrees", witness_degrees, "Degrees p,q")->required();

    auto* distinguish_cmd =
        app.add_subcommand("distinguish", "Witness on one DGA, refutation on the other");
    std::string dist_left, dist_right, dist_degrees, dist_map;
    std::size_t dist_maxlen = 9;
    distinguish_cmd->add_option("left", dist_left, "DGA expected to carry the witness")
        ->required();
    distinguish_cmd->add_option("right", dist_right, "DGA expected to refute")->required();
    distinguish_cmd->add_option("--degrees", dist_degrees, "Degrees p,q")->required();
    distinguish_cmd->add_option("--maxlen", dist_maxlen, "Word length bound (default 9)");
    distinguish_cmd->add_option("--projection", dist_map,
                                "Projection map file (default: the shipped 6_2 recipe)");

    auto* reproduce = app.add_subcommand(
        "reproduce", "Run the full 6_2-vs-mirror pipeline on the shipped data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(check_file);
        if (mirror_cmd->parsed()) return run_mirror(mirror_file, mirror_out);
        if (subst->parsed()) return run_subst(subst_file, subst_specs, subst_out);
        if (project->parsed()) return run_project(project_file, project_map);
        if (nf->parsed()) return run_nf(nf_rules, nf_expr);
        if (witness->parsed())
            return run_witness(witness_file, witness_x, witness_y, witness_z, witness_degrees);
        if (distinguish_cmd->parsed())
            return run_distinguish(dist_left, dist_right, dist_degrees, dist_maxlen, dist_map);
        if (reproduce->parsed()) return run_reproduce();
    } catch (const legdga::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
