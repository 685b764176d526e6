#include "p1/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using p1::io::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw p1::io::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    bool pretty = false;
    bool timing = false;
};

void emit(const json& report, const Options& opt,
          std::chrono::steady_clock::time_point start) {
    json out = report;
    if (opt.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out["timing_ms"] = ms;
    }
    std::cout << (opt.pretty ? out.dump(2) : out.dump()) << "\n";
}

json bundle_header(const char* command, const p1::VectorBundle& e) {
    return json{{"command", command},
                {"field", p1::io::field_to_json(e.field())},
                {"rank", e.rank()},
                {"c1", e.c1()}};
}

p1::Field parse_field_flag(const std::string& s) {
    if (s == "rational" || s == "q" || s == "Q") return p1::Field::rationals();
    try {
        return p1::Field::prime(p1::Int(s));
    } catch (const std::invalid_argument&) {
        throw p1::io::parse_error("--field must be 'rational' or a prime integer, got '" + s + "'");
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw p1::io::parse_error("empty integer list");
    return out;
}

p1::Point parse_point(const std::string& s, const p1::Field& f) {
    if (s == "inf" || s == "infinity") return p1::Point::infinity(f);
    p1::RationalFunction r = p1::io::parse_rational_function(s, f);
    return p1::Point::finite(r.as_polynomial().monic());
}

int run(int argc, char** argv) {
    CLI::App app{"Splitting types of vector bundles on the projective line"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    app.add_flag("--pretty", opt.pretty, "indent the JSON report");
    app.add_flag("--timing", opt.timing, "include wall-clock timing in the report");

    std::string bundle_path, cert_path, germ_expr, point_expr, field_desc = "rational";
    std::string type_list;
    std::vector<std::string> germ_exprs;
    int twist_by = 0, ops = 4, count = 1;
    std::uint64_t seed = 0;

    auto* cmd_split = app.add_subcommand("split", "compute the splitting type and certificate");
    cmd_split->add_option("bundle", bundle_path, "bundle JSON file")->required();

    auto* cmd_h0 = app.add_subcommand("h0", "dimension of the space of global sections");
    cmd_h0->add_option("bundle", bundle_path)->required();
    cmd_h0->add_option("--twist", twist_by, "twist E(k) before counting");

    auto* cmd_div = app.add_subcommand("divisor", "divisor and degree of a germ");
    cmd_div->add_option("bundle", bundle_path)->required();
    cmd_div->add_option("--germ", germ_expr, "coordinates 'f1;f2;...'")->required();

    auto* cmd_verify = app.add_subcommand("verify", "check a splitting certificate");
    cmd_verify->add_option("bundle", bundle_path)->required();
    cmd_verify->add_option("--certificate", cert_path, "certificate JSON file")->required();

    auto* cmd_gen = app.add_subcommand("gen", "generate a random bundle of known type");
    cmd_gen->add_option("--type", type_list, "degrees 'd1,d2,...'")->required();
    cmd_gen->add_option("--seed", seed, "RNG seed");
    cmd_gen->add_option("--ops", ops, "number of random elementary operations");
    cmd_gen->add_option("--field", field_desc, "'rational' or a prime p");
    cmd_gen->add_option("--count", count, "number of instances (seeds seed..seed+count-1)");

    auto* cmd_repair = app.add_subcommand("repair-demo", "run the repair filter and boost");
    cmd_repair->add_option("bundle", bundle_path)->required();
    cmd_repair->add_option("--point", point_expr, "'inf' or a cluster polynomial")->required();
    cmd_repair->add_option("--germ", germ_exprs, "one option per germ")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();

    if (cmd_split->parsed()) {
        p1::VectorBundle e = p1::io::parse_bundle(read_file(bundle_path));
        p1::SplitResult r = p1::split(e);
        json report = bundle_header("split", e);
        report["splitting_type"] = r.type;
        report["certificate"] = p1::io::certificate_to_json(r.certificate, e.field());
        report["verified"] = p1::verify_certificate(e, r.certificate) == p1::CertificateVerdict::ok;
        emit(report, opt, start);
        return 0;
    }
    if (cmd_h0->parsed()) {
        p1::VectorBundle e = p1::io::parse_bundle(read_file(bundle_path));
        json report = bundle_header("h0", e);
        report["twist"] = twist_by;
        report["h0"] = p1::h0(p1::twist(e, twist_by));
        emit(report, opt, start);
        return 0;
    }
    if (cmd_div->parsed()) {
        p1::VectorBundle e = p1::io::parse_bundle(read_file(bundle_path));
        p1::Germ g = p1::io::parse_germ(germ_expr, e.field());
        if (g.rank() != e.rank()) throw p1::io::parse_error("germ rank does not match bundle rank");
        p1::Divisor d = p1::germ_divisor(e, g);
        json report = bundle_header("divisor", e);
        report["germ"] = germ_expr;
        report["divisor"] = p1::io::divisor_to_json(d);
        report["degree"] = p1::divisor_degree(d);
        emit(report, opt, start);
        return 0;
    }
    if (cmd_verify->parsed()) {
        p1::VectorBundle e = p1::io::parse_bundle(read_file(bundle_path));
        p1::SplittingCertificate cert =
            p1::io::certificate_from_json(e.field(), json::parse(read_file(cert_path)));
        p1::CertificateVerdict v = p1::verify_certificate(e, cert);
        json report = bundle_header("verify", e);
        report["verdict"] = v == p1::CertificateVerdict::ok;
        report["reason"] = p1::to_string(v);
        emit(report, opt, start);
        return v == p1::CertificateVerdict::ok ? 0 : 1;
    }
    if (cmd_gen->parsed()) {
        p1::Field f = parse_field_flag(field_desc);
        std::vector<int> degrees = parse_int_list(type_list);
        std::vector<int> sorted = degrees;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        json instances = json::array();
        for (int i = 0; i < count; ++i) {
            p1::VectorBundle e = p1::random_bundle(seed + static_cast<std::uint64_t>(i), f,
                                                   degrees, ops);
            instances.push_back(json{{"seed", seed + static_cast<std::uint64_t>(i)},
                                     {"bundle", p1::io::bundle_to_json(e)},
                                     {"type", sorted}});
        }
        json report{{"command", "gen"}, {"field", p1::io::field_to_json(f)}};
        if (count == 1)
            report.update(instances[0]);
        else
            report["instances"] = instances;
        emit(report, opt, start);
        return 0;
    }
    if (cmd_repair->parsed()) {
        p1::VectorBundle e = p1::io::parse_bundle(read_file(bundle_path));
        p1::Point p = parse_point(point_expr, e.field());
        std::vector<p1::Germ> germs;
        for (const auto& s : germ_exprs) {
            p1::Germ g = p1::io::parse_germ(s, e.field());
            if (g.rank() != e.rank())
                throw p1::io::parse_error("germ rank does not match bundle rank");
            germs.push_back(std::move(g));
        }
        json report = bundle_header("repair-demo", e);
        report["point"] = point_expr;
        std::vector<size_t> j = p1::repair_filter(e, germs, p);
        report["filter_index_set"] = j;
        std::vector<p1::Germ> filtered;
        for (size_t i : j) filtered.push_back(germs[i]);
        p1::RepairOutcome boost = p1::repair_boost(e, filtered, p);
        json coeffs = json::array();
        for (const auto& f : boost.coefficients) coeffs.push_back(f.to_string());
        report["boost"] = json{{"coefficients", coeffs},
                               {"new_germ", boost.new_germ.to_string()},
                               {"old_degree", boost.old_degree},
                               {"new_degree", boost.new_degree}};
        emit(report, opt, start);
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const p1::internal_check_failure& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        // bad input documents, invalid bundles, domain preconditions
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
