#include "tmspline/cli.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "tmspline/homology.hpp"
#include "tmspline/io.hpp"
#include "tmspline/oracle.hpp"

namespace tmspline {

namespace {

// Bad invocations that CLI11 cannot catch (file access, cross-flag rules).
struct CliUsage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
    try {
        return read_file(path);
    } catch (const Error& e) {
        throw CliUsage(e.what());
    }
}

std::pair<int, int> parse_degree(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma != std::string::npos) {
            std::size_t a = 0, b = 0;
            const int m = std::stoi(text.substr(0, comma), &a);
            const int mp = std::stoi(text.substr(comma + 1), &b);
            if (a == comma && b == text.size() - comma - 1) return {m, mp};
        }
    } catch (const std::exception&) {
    }
    throw CliUsage("bad --degree \"" + text + "\", expected m,mp");
}

std::string format_point(const TMesh& mesh, int vertex_id) {
    const auto& v = mesh.vertex(vertex_id);
    return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

void print_edge_table(const TMesh& mesh, std::ostream& out) {
    out << "edges:\n";
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const auto& edge = mesh.edge(e);
        out << 'e' << e << ' ' << (edge.orientation == Orientation::horizontal ? 'h' : 'v') << ' '
            << format_point(mesh, edge.start) << '-' << format_point(mesh, edge.end) << ' '
            << (mesh.edge_interior(e) ? "interior" : "boundary") << "\n";
    }
}

int cmd_validate(const std::string& mesh_path, std::ostream& out) {
    const TMesh mesh = parse_mesh(load(mesh_path));
    const ValidationReport report = validate_tmesh(mesh);
    out << "n0=" << mesh.vertex_count() << " n1=" << mesh.edge_count()
        << " n2=" << mesh.face_count() << "\n";
    out << "euler=" << report.euler << "\n";
    print_edge_table(mesh, out);
    for (const auto& violation : report.violations)
        out << "violation " << violation.code << ": " << violation.detail << "\n";
    out << (report.valid() ? "valid" : "invalid") << "\n";
    return report.valid() ? 0 : 1;
}

struct DimOptions {
    std::string mesh_path;
    std::string smoothness_path;
    std::string degree;
    std::string method = "all";
    std::string format = "text";
    std::string basis_path;
};

int cmd_dim(const DimOptions& options, std::ostream& out) {
    const TMesh mesh = parse_mesh(load(options.mesh_path));
    const SmoothnessDistribution dist = parse_smoothness(load(options.smoothness_path), mesh);
    const auto [m, mp] = parse_degree(options.degree);
    const DimMethod method = options.method == "chi"        ? DimMethod::chi
                             : options.method == "homology" ? DimMethod::homology
                             : options.method == "oracle"   ? DimMethod::oracle
                                                            : DimMethod::all;
    if (!options.basis_path.empty() && method != DimMethod::oracle && method != DimMethod::all)
        throw CliUsage("--basis requires --method oracle or all");

    const RunReport report = compute_run_report(dist, m, mp, method);
    render_run_report(report,
                      options.format == "machine" ? ReportFormat::machine : ReportFormat::text, out);
    if (!options.basis_path.empty())
        write_file(options.basis_path, write_basis(spline_basis_oracle(dist, m, mp)));
    return report.agreement && !*report.agreement ? 1 : 0;
}

struct CertifyOptions {
    std::string mesh_path;
    std::string base_path;
    std::string target_path;
    std::string degree;
    std::string provenance;
    std::string out_path;
    std::string format = "text";
};

int cmd_certify(const CertifyOptions& options, std::ostream& out) {
    const TMesh mesh = parse_mesh(load(options.mesh_path));
    const SmoothnessDistribution base = parse_smoothness(load(options.base_path), mesh);
    const SmoothnessDistribution target = parse_smoothness(load(options.target_path), mesh);
    const auto [m, mp] = parse_degree(options.degree);
    const BaseProvenance provenance = options.provenance == "box-rule"
                                          ? BaseProvenance::box_rule
                                      : options.provenance == "verify-homology"
                                          ? BaseProvenance::homology_verified
                                          : BaseProvenance::user_asserted;
    const bool machine = options.format == "machine";

    const auto result = certify_stability(base, target, m, mp, provenance);
    if (std::holds_alternative<Certificate>(result)) {
        const Certificate& certificate = std::get<Certificate>(result);
        if (!options.out_path.empty()) write_file(options.out_path, write_certificate(certificate));
        const long long dim = dimension_by_certificate(mesh, certificate);
        if (machine)
            out << "certified=1\nsteps=" << certificate.steps.size() << "\ndim=" << dim << "\n";
        else
            out << "certified: yes\nsteps: " << certificate.steps.size() << "\ndim = " << dim
                << "\n";
        return 0;
    }

    const FailureReport& failure = std::get<FailureReport>(result);
    const long long h0 = h0_dimension(target, m, mp);
    const long long dim = euler_characteristic(target, m, mp).chi + h0;
    if (machine) {
        out << "certified=0\nresidual_edges=";
        for (std::size_t i = 0; i < failure.residual_edges.size(); ++i)
            out << (i ? "," : "") << failure.residual_edges[i];
        out << "\nh0=" << h0 << "\ndim=" << dim << "\n";
    } else {
        out << "certified: no\n" << failure.detail << "\nresidual edges:";
        for (int e : failure.residual_edges) out << ' ' << e;
        out << "\nuncertified, computed directly: dim = " << dim << " (h0 = " << h0 << ")\n";
    }
    return 1;
}

struct GenOptions {
    std::string kind;
    std::vector<long long> params;
    long long seed = 0;
    std::string out_path;
};

int cmd_gen(const GenOptions& options, std::ostream& out) {
    TMesh mesh = cyclic_pinwheel();
    std::string comment;
    if (options.kind == "grid") {
        if (options.params.size() != 2) throw CliUsage("gen grid needs kx and ky");
        const long long kx = options.params[0], ky = options.params[1];
        if (kx < 1 || kx > 16 || ky < 1 || ky > 16)
            throw ParamOutOfRange("grid sizes must lie in [1, 16]");
        mesh = tensor_grid(static_cast<int>(kx), static_cast<int>(ky));
        comment = "# generated: grid " + std::to_string(kx) + " " + std::to_string(ky) + "\n";
    } else if (options.kind == "hierarchical") {
        if (options.params.size() != 1) throw CliUsage("gen hierarchical needs a depth");
        const long long depth = options.params[0];
        if (depth < 0 || depth > 6) throw ParamOutOfRange("depth must lie in [0, 6]");
        mesh = hierarchical_mesh(static_cast<unsigned long long>(options.seed),
                                 static_cast<int>(depth));
        comment = "# generated: hierarchical seed=" + std::to_string(options.seed) +
                  " depth=" + std::to_string(depth) + "\n";
    } else {
        if (!options.params.empty()) throw CliUsage("gen cyclic takes no parameters");
        comment = "# generated: cyclic pinwheel\n";
        if (!has_removable_cross(mesh))
            comment += "# no removable cross-split: not hierarchically constructible\n";
    }

    const std::string content = comment + write_mesh(mesh);
    if (options.out_path.empty())
        out << content;
    else
        write_file(options.out_path, content);
    return 0;
}

} // namespace

RunReport compute_run_report(const SmoothnessDistribution& dist, int m, int mp, DimMethod method) {
    const TMesh& mesh = dist.mesh();
    RunReport report;
    report.n0 = mesh.vertex_count();
    report.n1 = mesh.edge_count();
    report.n2 = mesh.face_count();
    report.m = m;
    report.mp = mp;
    if (method != DimMethod::oracle) report.chi = euler_characteristic(dist, m, mp);
    if (method == DimMethod::homology || method == DimMethod::all) {
        report.h0 = h0_dimension(dist, m, mp);
        report.dim_homology = report.chi->chi + *report.h0;
    }
    if (method == DimMethod::oracle || method == DimMethod::all)
        report.dim_oracle = spline_dimension_oracle(dist, m, mp);
    if (method == DimMethod::all) {
        report.agreement = *report.dim_homology == *report.dim_oracle;
        report.chi_alone = *report.h0 == 0;
    }
    return report;
}

void render_run_report(const RunReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::machine) {
        out << "n0=" << report.n0 << "\nn1=" << report.n1 << "\nn2=" << report.n2 << "\n";
        out << "m=" << report.m << "\nmp=" << report.mp << "\n";
        if (report.chi) {
            out << "face_term=" << report.chi->face_term << "\n";
            out << "horizontal_edge_term=" << report.chi->horizontal_edge_term << "\n";
            out << "vertical_edge_term=" << report.chi->vertical_edge_term << "\n";
            out << "vertex_term=" << report.chi->vertex_term << "\n";
            out << "chi=" << report.chi->chi << "\n";
        }
        if (report.h0) out << "h0=" << *report.h0 << "\n";
        if (report.dim_homology) out << "dim_homology=" << *report.dim_homology << "\n";
        if (report.dim_oracle) out << "dim_oracle=" << *report.dim_oracle << "\n";
        if (report.agreement) out << "agreement=" << (*report.agreement ? 1 : 0) << "\n";
        if (report.chi_alone) out << "chi_alone=" << (*report.chi_alone ? 1 : 0) << "\n";
        return;
    }

    out << "n0=" << report.n0 << " n1=" << report.n1 << " n2=" << report.n2 << "\n";
    out << "degree m=" << report.m << " mp=" << report.mp << "\n";
    if (report.chi)
        out << "chi: " << report.chi->face_term << " - " << report.chi->horizontal_edge_term
            << " - " << report.chi->vertical_edge_term << " + " << report.chi->vertex_term
            << " = " << report.chi->chi << "\n";
    if (report.h0) out << "h0=" << *report.h0 << "\n";
    if (report.dim_homology) out << "dim homology=" << *report.dim_homology << "\n";
    if (report.dim_oracle) out << "dim oracle=" << *report.dim_oracle << "\n";
    if (report.agreement)
        out << "agreement: homology " << (*report.agreement ? "==" : "!=") << " oracle\n";
    if (report.chi_alone)
        out << "dimension " << (*report.chi_alone ? "" : "NOT ") << "given by chi alone\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spline space dimensions on T-meshes with per-edge smoothness"};
    app.name("tmspline");
    app.require_subcommand(1);

    std::string validate_mesh;
    auto* validate = app.add_subcommand("validate", "check a mesh file and print its cell tables");
    validate->add_option("--mesh", validate_mesh, "mesh file")->required();

    DimOptions dim;
    auto* dim_cmd = app.add_subcommand("dim", "compute the spline space dimension");
    dim_cmd->add_option("--mesh", dim.mesh_path, "mesh file")->required();
    dim_cmd->add_option("--smoothness", dim.smoothness_path, "smoothness file")->required();
    dim_cmd->add_option("--degree", dim.degree, "bi-degree m,mp")->required();
    dim_cmd->add_option("--method", dim.method, "chi | homology | oracle | all")
        ->check(CLI::IsMember({"chi", "homology", "oracle", "all"}));
    dim_cmd->add_option("--format", dim.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
    dim_cmd->add_option("--basis", dim.basis_path, "write an explicit basis to this file");

    CertifyOptions certify;
    auto* certify_cmd =
        app.add_subcommand("certify", "certify a reduction chain from a base distribution");
    certify_cmd->add_option("--mesh", certify.mesh_path, "mesh file")->required();
    certify_cmd->add_option("--base", certify.base_path, "base smoothness file")->required();
    certify_cmd->add_option("--target", certify.target_path, "target smoothness file")->required();
    certify_cmd->add_option("--degree", certify.degree, "bi-degree m,mp")->required();
    certify_cmd
        ->add_option("--provenance", certify.provenance, "box-rule | verify-homology | assert")
        ->required()
        ->check(CLI::IsMember({"box-rule", "verify-homology", "assert"}));
    certify_cmd->add_option("--out", certify.out_path, "certificate output file");
    certify_cmd->add_option("--format", certify.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a mesh file");
    gen_cmd->add_option("kind", gen.kind, "grid | hierarchical | cyclic")
        ->required()
        ->check(CLI::IsMember({"grid", "hierarchical", "cyclic"}));
    gen_cmd->add_option("params", gen.params, "grid: kx ky; hierarchical: depth");
    gen_cmd->add_option("--seed", gen.seed, "generator seed for hierarchical meshes");
    gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_mesh, out);
        if (dim_cmd->parsed()) return cmd_dim(dim, out);
        if (certify_cmd->parsed()) return cmd_certify(certify, out);
        return cmd_gen(gen, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParamOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MeshMismatch& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CliUsage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tmspline
