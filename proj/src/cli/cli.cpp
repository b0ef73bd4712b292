#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "ptile/cli.hpp"
#include "ptile/error.hpp"
#include "ptile/json_out.hpp"
#include "ptile/tiler.hpp"

namespace ptile::cli {

namespace {

using json::number;
using json::point;
using json::points;
using json::quote;

struct Options {
    std::uint64_t seed = 0;
    bool json_errors = false;
    bool json = false;
    std::string output;

    std::string file;
    std::string edges;
    bool canonical = false;

    std::string copies = "1x1";
    bool svg = false;
    bool json_patch = false;
    bool overlay = false;

    std::string from, to;
    int steps = 10;
    double tol = 1e-12;

    bool list = false;
    long face_id = -1;

    std::size_t curves = 3;
    std::size_t labels = 6;
    bool essential = false;
};

template <class T>
std::string int_list(const std::vector<T>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

std::string system_json(const CurveSystem& s) {
    std::string out = "{\"curves\":[";
    for (std::size_t i = 0; i < s.curves.size(); ++i) out += (i ? "," : "") + int_list(s.curves[i].canonical().entries());
    return out + "]}\n";
}

std::string violation_kind(ViolationKind k) {
    switch (k) {
    case ViolationKind::too_few_curves: return "too-few-curves";
    case ViolationKind::empty_curve: return "empty-curve";
    case ViolationKind::zero_label: return "zero-label";
    case ViolationKind::missing_entry: return "missing-entry";
    case ViolationKind::duplicate_entry: return "duplicate-entry";
    case ViolationKind::opposite_signs_same_curve: return "opposite-signs-same-curve";
    }
    return "unknown";
}

std::pair<int, int> parse_copies(const std::string& spec) {
    const auto x = spec.find_first_of("xX");
    int p = 0, q = 0;
    try {
        if (x == std::string::npos) throw std::invalid_argument(spec);
        std::size_t used_p = 0, used_q = 0;
        p = std::stoi(spec.substr(0, x), &used_p);
        q = std::stoi(spec.substr(x + 1), &used_q);
        if (used_p != x || used_q != spec.size() - x - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--copies", "expected PxQ, got '" + spec + "'");
    }
    if (p < 1 || q < 1) throw Error(ErrorCode::empty_range, "--copies needs positive counts");
    return {p, q};
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    CurveSystem system() const { return read_curve_system_file(o_.file); }

    EdgeData edges(const CurveSystem& s) const {
        if (o_.canonical) return canonical_edge_data(s);
        if (o_.edges.empty()) throw CLI::RequiredError("--edges or --canonical");
        return read_edge_data_file(o_.edges);
    }

    int validate() {
        const CurveSystem s = parse_curves(read_text_file(o_.file));
        const ValidationReport rep = ptile::validate(s);
        if (o_.json) {
            std::string v = "[";
            for (std::size_t i = 0; i < rep.violations.size(); ++i) {
                const auto& x = rep.violations[i];
                v += (i ? "," : "") + std::string("{\"kind\":") + quote(violation_kind(x.kind)) +
                     ",\"label\":" + std::to_string(x.label) + ",\"curve\":" + std::to_string(x.curve + 1) +
                     ",\"message\":" + quote(x.message) + "}";
            }
            out_ << "{\"valid\":" << (rep.ok() ? "true" : "false") << ",\"curves\":" << s.curve_count()
                 << ",\"labels\":" << s.labels().size() << ",\"violations\":" << v << "]}\n";
        } else if (rep.ok()) {
            out_ << "valid: " << s.curve_count() << " curves, " << s.labels().size() << " labels\n";
        } else {
            for (const auto& x : rep.violations) out_ << "invalid: " << x.message << "\n";
        }
        return rep.ok() ? exit_ok : exit_failure;
    }

    int surface() {
        const CurveSystem s = system();
        const SurfaceReport r = surface_report(s);
        if (o_.json) {
            out_ << "{\"vertices\":" << r.vertex_count << ",\"edges\":" << r.edge_count << ",\"faces\":" << r.faces.size()
                 << ",\"components\":" << r.component_count() << ",\"connected\":" << (r.connected ? "true" : "false")
                 << ",\"genus\":" << int_list(r.genus) << ",\"face_loops\":[";
            for (std::size_t f = 0; f < r.faces.size(); ++f) {
                out_ << (f ? "," : "") << "[";
                for (std::size_t b = 0; b < r.faces[f].size(); ++b)
                    out_ << (b ? "," : "") << quote(to_string(r.faces[f].borders[b]));
                out_ << "]";
            }
            out_ << "]}\n";
            return exit_ok;
        }
        out_ << "vertices " << r.vertex_count << "\nedges " << r.edge_count << "\nfaces " << r.faces.size()
             << "\ncomponents " << r.component_count() << "\ngenus";
        for (int g : r.genus) out_ << " " << g;
        out_ << "\n";
        for (std::size_t f = 0; f < r.faces.size(); ++f) {
            out_ << "face " << f << " (" << r.faces[f].size() << " borders):";
            for (const auto& b : r.faces[f].borders) out_ << " " << to_string(b);
            out_ << "\n";
        }
        return exit_ok;
    }

    int matrix() {
        const IntersectionMatrix c = intersection_matrix(system());
        const std::size_t rank = matrix_rank(c);
        if (o_.json) {
            out_ << "{\"matrix\":[";
            for (std::size_t i = 0; i < c.size(); ++i) {
                std::vector<std::int64_t> row(c.size());
                for (std::size_t j = 0; j < c.size(); ++j) row[j] = c(i, j);
                out_ << (i ? "," : "") << int_list(row);
            }
            out_ << "],\"rank\":" << rank << "}\n";
            return exit_ok;
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c.size(); ++j) out_ << (j ? " " : "") << c(i, j);
            out_ << "\n";
        }
        out_ << "rank " << rank << "\n";
        return exit_ok;
    }

    int essential() {
        const EssentialityReport r = essentiality(system());
        std::vector<std::string> reasons;
        for (const auto& x : r.reasons) reasons.push_back(to_string(x));
        if (o_.json) {
            out_ << "{\"essential\":" << (r.essential ? "true" : "false") << ",\"reasons\":[";
            for (std::size_t i = 0; i < reasons.size(); ++i) out_ << (i ? "," : "") << quote(reasons[i]);
            out_ << "]}\n";
        } else if (r.essential) {
            out_ << "essential\n";
        } else {
            out_ << "not essential:";
            for (const auto& x : reasons) out_ << " " << x;
            out_ << "\n";
        }
        return r.essential ? exit_ok : exit_failure;
    }

    int canonical() {
        const CurveSystem s = system();
        const EdgeData e = canonical_edge_data(s);
        const SpectralPair sp = spectral_pair(intersection_matrix(s));
        if (o_.json) {
            out_ << "{\"lambda\":" << number(sp.lambda) << ",\"residual\":" << number(sp.residual)
                 << ",\"e0\":" << points(e) << "}\n";
            return exit_ok;
        }
        out_ << "lambda " << number(sp.lambda) << "\n";
        for (const Complex& z : e) out_ << number(z.real()) << " " << number(z.imag()) << "\n";
        return exit_ok;
    }

    int admissible() {
        const CurveSystem s = system();
        const AdmissibilityReport r = ptile::admissible(intersection_matrix(s), edges(s));
        std::string v = "[";
        for (std::size_t k = 0; k < r.violations.size(); ++k)
            v += (k ? "," : "") + int_list(std::vector<std::size_t>{r.violations[k].first + 1, r.violations[k].second + 1});
        v += "]";
        if (o_.json) {
            out_ << "{\"admissible\":" << (r.admissible ? "true" : "false") << ",\"margin\":" << number(r.margin)
                 << ",\"violations\":" << v << "}\n";
        } else {
            out_ << (r.admissible ? "admissible" : "not admissible") << "\nmargin " << number(r.margin) << "\n";
            for (const auto& [i, j] : r.violations) out_ << "violation " << i + 1 << " " << j + 1 << "\n";
        }
        return r.admissible ? exit_ok : exit_failure;
    }

    int zones() {
        const CurveSystem s = system();
        const ZoneVectors z = zone_vectors(intersection_matrix(s), edges(s));
        if (o_.json) {
            out_ << "{\"zones\":" << points(z) << "}\n";
        } else {
            for (const Complex& v : z) out_ << number(v.real()) << " " << number(v.imag()) << "\n";
        }
        return exit_ok;
    }

    int lattice() {
        const CurveSystem s = system();
        const HomologyCoordinates hc = homology_coordinates(s);
        const LatticeBasis lb = lattice_basis(hc, intersection_matrix(s), edges(s));
        if (o_.json) {
            out_ << "{\"a\":" << point(lb.a) << ",\"b\":" << point(lb.b) << ",\"orientation\":" << lb.orientation()
                 << ",\"A\":" << int_list(hc.a) << ",\"B\":" << int_list(hc.b) << "}\n";
            return exit_ok;
        }
        out_ << "a " << number(lb.a.real()) << " " << number(lb.a.imag()) << "\nb " << number(lb.b.real()) << " "
             << number(lb.b.imag()) << "\norientation " << lb.orientation() << "\nA";
        for (auto v : hc.a) out_ << " " << v;
        out_ << "\nB";
        for (auto v : hc.b) out_ << " " << v;
        out_ << "\n";
        return exit_ok;
    }

    int area() {
        const CurveSystem s = system();
        const double a = ptile::area(intersection_matrix(s), edges(s));
        if (o_.json)
            out_ << "{\"area\":" << number(a) << "}\n";
        else
            out_ << number(a) << "\n";
        return exit_ok;
    }

    int tile() {
        const auto [p, q] = parse_copies(o_.copies);
        const CurveSystem s = system();
        const FundamentalDomain fd = develop(s, edges(s));
        const TilingPatch patch = replicate(fd, {0, p}, {0, q}, o_.overlay);
        if (o_.json_patch)
            out_ << export_json(patch);
        else
            out_ << export_svg(patch);
        return exit_ok;
    }

    int deform() {
        const CurveSystem s = system();
        const IntersectionMatrix c = intersection_matrix(s);
        const auto samples = deformation_path(c, read_edge_data_file(o_.from), read_edge_data_file(o_.to), o_.steps);
        const bool all = std::all_of(samples.begin(), samples.end(), [](const auto& x) { return x.report.admissible; });
        if (o_.json) {
            out_ << "{\"all_admissible\":" << (all ? "true" : "false") << ",\"samples\":[";
            for (std::size_t k = 0; k < samples.size(); ++k)
                out_ << (k ? "," : "") << "{\"t\":" << number(samples[k].t)
                     << ",\"admissible\":" << (samples[k].report.admissible ? "true" : "false")
                     << ",\"margin\":" << number(samples[k].report.margin) << "}";
            out_ << "]}\n";
            return exit_ok;
        }
        for (const auto& x : samples)
            out_ << number(x.t) << " " << (x.report.admissible ? "admissible" : "not-admissible") << " "
                 << number(x.report.margin) << "\n";
        out_ << (all ? "all admissible" : "some samples not admissible") << "\n";
        return exit_ok;
    }

    int boundary() {
        const CurveSystem s = system();
        const auto hits = classify_boundary(intersection_matrix(s), edges(s), o_.tol);
        if (o_.json) {
            out_ << "{\"hits\":[";
            for (std::size_t k = 0; k < hits.size(); ++k)
                out_ << (k ? "," : "") << "{\"pair\":[" << hits[k].r + 1 << "," << hits[k].s + 1
                     << "],\"in_stratum\":" << (hits[k].in_stratum ? "true" : "false") << "}";
            out_ << "]}\n";
            return exit_ok;
        }
        if (hits.empty()) out_ << "interior: no determinant within " << number(o_.tol) << "\n";
        for (const auto& h : hits)
            out_ << "wall " << h.r + 1 << " " << h.s + 1 << (h.in_stratum ? " in stratum" : " not in stratum") << "\n";
        return exit_ok;
    }

    int rototiler() {
        const CurveSystem s = system();
        const auto faces = build_faces(s);
        if (o_.face_id >= 0) {
            if (static_cast<std::size_t>(o_.face_id) >= faces.size())
                throw Error(ErrorCode::bad_index, "face id " + std::to_string(o_.face_id) + " out of range (" +
                                                      std::to_string(faces.size()) + " faces)");
            const CurveSystem t = apply_rototiler(s, faces[static_cast<std::size_t>(o_.face_id)]);
            out_ << (o_.json ? system_json(t) : serialize(t));
            return exit_ok;
        }
        std::vector<std::size_t> tri;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (faces[f].size() == 3) tri.push_back(f);
        if (o_.json) {
            out_ << "{\"triangles\":[";
            for (std::size_t k = 0; k < tri.size(); ++k) {
                out_ << (k ? "," : "") << "{\"face\":" << tri[k] << ",\"borders\":[";
                for (std::size_t b = 0; b < 3; ++b) out_ << (b ? "," : "") << quote(to_string(faces[tri[k]].borders[b]));
                out_ << "]}";
            }
            out_ << "]}\n";
            return exit_ok;
        }
        for (std::size_t f : tri) {
            out_ << "face " << f << ":";
            for (const auto& b : faces[f].borders) out_ << " " << to_string(b);
            out_ << "\n";
        }
        if (tri.empty()) out_ << "no triangular faces\n";
        return exit_ok;
    }

    int gen() {
        Rng rng(o_.seed);
        CurveSystem s;
        if (o_.essential) {
            EssentialOptions opt;
            opt.curves = o_.curves;
            opt.max_labels = o_.labels;
            s = random_essential_system(opt, rng);
        } else {
            s = random_valid_system(o_.curves, o_.labels, rng);
        }
        out_ << (o_.json ? system_json(s) : serialize(s));
        return exit_ok;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

void report_error(std::ostream& err, bool as_json, const std::string& code, const std::string& message,
                  const ParseError* pe = nullptr) {
    if (!as_json) {
        err << "error (" << code << "): " << message << "\n";
        return;
    }
    err << "{\"error\":" << quote(code) << ",\"message\":" << quote(message);
    if (pe) err << ",\"line\":" << pe->line() << ",\"column\":" << pe->column();
    err << "}\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    const bool json_errors = std::find(args.begin(), args.end(), "--json-errors") != args.end();

    CLI::App app{"Periodic parallelogram tilings from combinatorial curve systems.", "ptile"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", o.seed, "seed for the random generator");
    app.add_flag("--json-errors", o.json_errors, "write errors to stderr as JSON");
    app.add_flag("--json", o.json, "write the report as JSON");
    app.add_option("-o,--output", o.output, "write to FILE instead of stdout");

    std::function<int(Runner&)> action;
    auto sub = [&](const char* name, const char* help, int (Runner::*fn)(), bool takes_file = true) {
        CLI::App* s = app.add_subcommand(name, help);
        if (takes_file) s->add_option("file", o.file, ".ccs curve system")->required()->check(CLI::ExistingFile);
        s->callback([&action, fn] { action = [fn](Runner& r) { return (r.*fn)(); }; });
        return s;
    };
    auto edge_source = [&](CLI::App* s) {
        auto* e = s->add_option("--edges", o.edges, "edge data: JSON array of [re, im]")->check(CLI::ExistingFile);
        auto* c = s->add_flag("--canonical", o.canonical, "use the canonical edge data");
        e->excludes(c);
        return s;
    };

    sub("validate", "check the curve-system axioms", &Runner::validate);
    sub("surface", "vertices, edges, faces, genus and components", &Runner::surface);
    sub("matrix", "intersection matrix C and its rank", &Runner::matrix);
    sub("essential", "essentiality verdict with reasons", &Runner::essential);
    sub("canonical", "lambda and the canonical edge data e0", &Runner::canonical);
    edge_source(sub("admissible", "admissibility report for edge data", &Runner::admissible));
    edge_source(sub("zones", "zone vectors z = C e", &Runner::zones));
    edge_source(sub("lattice", "period lattice basis (a, b) and homology coordinates", &Runner::lattice));
    edge_source(sub("area", "area 1/2 Im(e* C e)", &Runner::area));

    CLI::App* tile = edge_source(sub("tile", "develop, replicate and export a tiling", &Runner::tile));
    tile->add_option("--copies", o.copies, "replication PxQ");
    auto* svg = tile->add_flag("--svg", o.svg, "SVG output (default)");
    auto* js = tile->add_flag("--json", o.json_patch, "JSON patch output");
    svg->excludes(js);
    tile->add_flag("--overlay", o.overlay, "draw zone curves");

    CLI::App* deform = sub("deform", "admissibility along a straight deformation", &Runner::deform);
    deform->add_option("--from", o.from, "start edge data")->required()->check(CLI::ExistingFile);
    deform->add_option("--to", o.to, "end edge data")->required()->check(CLI::ExistingFile);
    deform->add_option("--steps", o.steps, "number of segments")->check(CLI::PositiveNumber);

    CLI::App* boundary = sub("boundary", "walls of the admissible cone the edge data lies on", &Runner::boundary);
    boundary->add_option("--edges", o.edges, "edge data")->required()->check(CLI::ExistingFile);
    boundary->add_option("--tol", o.tol, "determinant tolerance")->check(CLI::NonNegativeNumber);

    CLI::App* roto = sub("rototiler", "list or apply hexagon flips", &Runner::rototiler);
    auto* list = roto->add_flag("--list", o.list, "list triangular faces with their FACEID");
    auto* apply = roto->add_option("--apply", o.face_id, "flip the triangle with this FACEID")->check(CLI::NonNegativeNumber);
    list->excludes(apply);

    CLI::App* gen = sub("gen", "random valid curve system", &Runner::gen, false);
    gen->add_option("--curves", o.curves, "number of curves")->check(CLI::Range(2, 1000));
    gen->add_option("--labels", o.labels, "number of labels (upper bound with --essential)")->check(CLI::Range(1, 100000));
    gen->add_flag("--essential", o.essential, "only essential systems");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, json_errors, "usage", e.what());
        if (!json_errors) err << "run with --help for the grammar\n";
        return exit_usage;
    }

    std::ostringstream buffer;
    int code = exit_ok;
    try {
        Runner runner(o, buffer);
        code = action(runner);
    } catch (const CLI::Error& e) {
        report_error(err, json_errors, "usage", e.what());
        return exit_usage;
    } catch (const ParseError& e) {
        report_error(err, json_errors, std::string(to_string(e.code())), e.what(), &e);
        return exit_failure;
    } catch (const Error& e) {
        report_error(err, json_errors, std::string(to_string(e.code())), e.what());
        return exit_failure;
    } catch (const std::exception& e) {
        report_error(err, json_errors, "internal", e.what());
        return exit_failure;
    }

    if (o.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!(file << buffer.str())) {
            report_error(err, json_errors, "bad-input", "cannot write '" + o.output + "'");
            return exit_failure;
        }
    }
    return code;
}

}  // namespace ptile::cli
