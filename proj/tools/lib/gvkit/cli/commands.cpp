#include "gvkit/cli/commands.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvkit/cech.hpp"
#include "gvkit/cli/io.hpp"
#include "gvkit/errors.hpp"
#include "gvkit/gvgw.hpp"
#include "gvkit/grr.hpp"
#include "gvkit/k3hilb.hpp"

namespace gvkit::cli {

namespace {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n) {
    static const Integer kMax = std::numeric_limits<std::int64_t>::max();
    static const Integer kMin = std::numeric_limits<std::int64_t>::min();
    if (n >= kMin && n <= kMax) return n.convert_to<std::int64_t>();
    return n.str();
}

GvEntries entries_of(const k3::GVTable& table) { return table.entries; }

std::string format_gv(const GvEntries& entries, Format format) {
    return format == Format::Csv ? gv_entries_to_csv(entries) : gv_entries_to_json(entries);
}

std::string format_gw(const GwEntries& entries, Format format) {
    return format == Format::Csv ? gw_entries_to_csv(entries) : gw_entries_to_json(entries);
}

std::string face_names(const cech::Face& f, const cech::Nerve& nerve) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += nerve.vertices()[f[i]];
    }
    return out;
}

}  // namespace

RunConfig config_from_env() {
    RunConfig cfg;
    const char* path = std::getenv("GVKIT_CONFIG");
    if (path == nullptr || *path == '\0') return cfg;
    Json root = Json::parse(read_file(path), nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        throw SchemaError(std::string("GVKIT_CONFIG file ") + path + " is not a JSON object");
    }
    auto load_int = [&](const char* key, int& slot) {
        if (!root.contains(key)) return;
        if (!root[key].is_number_integer()) throw SchemaError(std::string(key) + " must be an integer");
        slot = root[key].get<int>();
    };
    load_int("kmax", cfg.kmax);
    load_int("gmax", cfg.gmax);
    load_int("dmax", cfg.dmax);
    load_int("hmax", cfg.hmax);
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer()) {
            throw SchemaError("seed must be an integer");
        }
        cfg.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("format")) {
        std::string f = root["format"].is_string() ? root["format"].get<std::string>() : "";
        if (f == "csv") {
            cfg.format = Format::Csv;
        } else if (f == "json") {
            cfg.format = Format::Json;
        } else {
            throw SchemaError("format must be \"csv\" or \"json\"");
        }
    }
    return cfg;
}

int cmd_k3(const RunConfig& cfg, std::ostream& out) {
    if (cfg.kmax < 1) throw CLI::ValidationError("--kmax", "must be >= 1");
    k3::KkvReport report = k3::verify_kkv(cfg.kmax);

    write_file(cfg.output, format_gv(entries_of(report.decomposition), cfg.format));

    out << "n_h(k) from the Hilbert-scheme decomposition (k,h,n):\n";
    out << gv_entries_to_csv(report.decomposition.entries);
    out << "r_h(k) from the KKV product (k,h,r):\n";
    out << gv_entries_to_csv(report.kkv.entries);
    out << "kkv_match: " << (report.equal ? "true" : "false") << "\n";
    if (!report.equal) {
        const k3::KkvMismatch& m = *report.first_mismatch;
        out << "first_mismatch: h=" << m.h << " k=" << m.k << " n=" << m.n.str()
            << " r=" << m.r.str() << "\n";
        return kExitTheorem;
    }
    return kExitOk;
}

int cmd_gw(const RunConfig& cfg, std::ostream& out) {
    GvEntries entries = parse_gv_entries_json(read_file(cfg.input));
    gvgw::GvTable gv;
    for (const auto& [key, n] : entries) {
        if (key.first > cfg.dmax) {
            throw CLI::ValidationError("--dmax", "gv table has degree " + std::to_string(key.first) +
                                                     " above --dmax");
        }
        gv.set(key.second, key.first, n);
    }
    gvgw::GwTable gw = gvgw::gv_to_gw(gv, cfg.gmax, cfg.dmax);
    write_file(cfg.output, format_gw(gw.invariants, cfg.format));
    out << "wrote " << gw.invariants.size() << " GW entries to " << cfg.output << "\n";
    return kExitOk;
}

int cmd_gv_invert(const RunConfig& cfg, std::ostream& out) {
    GwEntries entries = parse_gw_entries_json(read_file(cfg.input));
    gvgw::GwTable gw;
    for (const auto& [key, value] : entries) {
        if (key.first > cfg.dmax) {
            throw CLI::ValidationError("--dmax", "gw table has degree " + std::to_string(key.first) +
                                                     " above --dmax");
        }
        if (key.second > cfg.hmax) {
            throw CLI::ValidationError("--hmax", "gw table has genus " + std::to_string(key.second) +
                                                     " above --hmax");
        }
        gw.set(key.second, key.first, value);
    }
    gvgw::GvTable gv = gvgw::gw_to_gv(gw, cfg.hmax, cfg.dmax);
    GvEntries out_entries;
    for (const auto& [key, n] : gv.n) out_entries[key] = n;
    write_file(cfg.output, format_gv(out_entries, cfg.format));
    out << "wrote " << out_entries.size() << " GV entries to " << cfg.output << "\n";
    return kExitOk;
}

namespace {

void print_c1_map(const std::map<std::string, Rational>& m, const std::string& label, Format format,
                  Json& json_out, std::ostream& out) {
    if (format == Format::Json) {
        Json arr = Json::array();
        for (const auto& [name, c] : m) {
            Json entry;
            entry["generator"] = name;
            entry["num"] = integer_to_json(numerator(c));
            entry["den"] = integer_to_json(denominator(c));
            arr.push_back(std::move(entry));
        }
        json_out[label] = std::move(arr);
    } else {
        for (const auto& [name, c] : m) {
            out << label << "," << name << "," << numerator(c).str() << ","
                << denominator(c).str() << "\n";
        }
    }
}

int report_parity(const grr::ParityReport& report, Format format, std::ostream& out) {
    Json json_out;
    print_c1_map(report.c1, "c1", format, json_out, out);
    if (format == Format::Json) {
        json_out["integral"] = report.integral;
        json_out["even"] = report.even;
        json_out["alpha1_zero"] = report.alpha1_zero;
    } else {
        out << "integral," << (report.integral ? "true" : "false") << "\n";
        out << "even," << (report.even ? "true" : "false") << "\n";
        out << "alpha1_zero," << (report.alpha1_zero ? "true" : "false") << "\n";
    }
    if (report.int_alpha2_sq) {
        print_c1_map(*report.int_alpha2_sq, "int_alpha2_sq", format, json_out, out);
    }
    if (report.c1_pi_shriek) {
        print_c1_map(*report.c1_pi_shriek, "c1_pi_shriek", format, json_out, out);
    }
    if (format == Format::Json) out << json_out.dump(2) << "\n";
    if (!report.integral) return kExitSchema;
    return report.even ? kExitOk : kExitTheorem;
}

}  // namespace

int cmd_parity(const RunConfig& cfg, std::ostream& out) {
    if (cfg.random_count > 0) {
        std::mt19937_64 rng(cfg.seed);
        grr::CY3Data lattices[3] = {grr::quintic_cy3(), grr::bicubic_cy3(), grr::ci2222_cy3()};
        int worst = kExitOk;
        for (int i = 0; i < cfg.random_count; ++i) {
            grr::GrrContext ctx = grr::example_context(lattices[i % 3]);
            grr::ChernData cd = (i % 2 == 0) ? grr::random_rank_zero_data(rng, ctx)
                                             : grr::det_twist_reduce(
                                                   grr::random_line_bundle_sum(rng, ctx, 4), ctx);
            grr::ParityReport report = grr::parity_check(cd, ctx);
            out << "dataset " << i << ": integral=" << (report.integral ? "true" : "false")
                << " even=" << (report.even ? "true" : "false") << "\n";
            if (!report.integral) {
                worst = std::max(worst, kExitSchema);
            } else if (!report.even) {
                worst = std::max(worst, kExitTheorem);
            }
        }
        out << "datasets," << cfg.random_count << "\n";
        out << "all_even," << (worst == kExitOk ? "true" : "false") << "\n";
        return worst;
    }
    ChernInput input = parse_chern_json(read_file(cfg.input));
    grr::ParityReport report = [&] {
        try {
            return grr::parity_check(input.data, input.ctx);
        } catch (const Error& e) {
            throw SchemaError(e.what());
        }
    }();
    return report_parity(report, cfg.format, out);
}

int cmd_cech(const RunConfig& cfg, std::ostream& out) {
    CoverInput input = parse_cover_json(read_file(cfg.input));
    cech::TransitionCocycle tc =
        cech::transition_sign_cocycle(input.nerve, input.pair_signs, input.triple_signs);

    Json json_out;
    bool json = cfg.format == Format::Json;
    if (json) {
        json_out["cocycle"] = tc.consistent;
    } else {
        out << "cocycle," << (tc.consistent ? "true" : "false") << "\n";
    }
    if (!tc.consistent) {
        if (json) out << json_out.dump(2) << "\n";
        return kExitSchema;
    }

    cech::Obstruction obstruction = cech::obstruction_class(input.nerve, tc.sigma);
    Integer torsor = cech::torsor_count(input.nerve);
    if (json) {
        json_out["trivial"] = obstruction.trivial;
        json_out["torsor"] = integer_to_json(torsor);
        if (obstruction.witness) {
            Json arr = Json::array();
            for (const auto& [face, value] : obstruction.witness->values) {
                Json entry;
                entry["face"] = Json::array();
                for (int v : face) entry["face"].push_back(input.nerve.vertices()[v]);
                entry["sign"] = value ? -1 : 1;
                arr.push_back(std::move(entry));
            }
            json_out["witness"] = std::move(arr);
        }
        out << json_out.dump(2) << "\n";
    } else {
        out << "trivial," << (obstruction.trivial ? "true" : "false") << "\n";
        out << "torsor," << torsor.str() << "\n";
        if (obstruction.witness) {
            for (const auto& [face, value] : obstruction.witness->values) {
                out << "witness," << face_names(face, input.nerve) << "," << (value ? -1 : 1)
                    << "\n";
            }
        }
    }
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = config_from_env();

        CLI::App app{"Exact-arithmetic toolkit for BPS/GV invariants, GV-GW resummation, "
                     "determinant parity and Cech gluing obstructions"};
        app.require_subcommand(1);
        std::map<std::string, Format> format_names{{"csv", Format::Csv}, {"json", Format::Json}};

        auto add_format = [&](CLI::App* cmd) {
            cmd->add_option("--format", cfg.format, "Output format")
                ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
        };

        CLI::App* k3cmd = app.add_subcommand(
            "k3", "BPS table n_h(k) of the K3 Hilbert-scheme pipeline plus the KKV cross-check");
        k3cmd->add_option("--kmax", cfg.kmax, "Largest point count k")->check(CLI::Range(1, 1 << 20));
        k3cmd->add_option("--out", cfg.output, "Artifact path (GVTable)")->required();
        add_format(k3cmd);

        CLI::App* gwcmd =
            app.add_subcommand("gw", "Resummed Gromov-Witten table from a GV table (one ray)");
        gwcmd->add_option("--gv", cfg.input, "GV table JSON")->required();
        gwcmd->add_option("--gmax", cfg.gmax, "Largest genus")->check(CLI::Range(0, 1 << 20));
        gwcmd->add_option("--dmax", cfg.dmax, "Largest degree")->check(CLI::Range(1, 1 << 20));
        gwcmd->add_option("--out", cfg.output, "Artifact path (GWTable)")->required();
        add_format(gwcmd);

        CLI::App* invcmd = app.add_subcommand(
            "gv-invert", "Recover the GV table from GW data by triangular inversion");
        invcmd->add_option("--gw", cfg.input, "GW table JSON")->required();
        invcmd->add_option("--hmax", cfg.hmax, "Genus cutoff")->check(CLI::Range(0, 1 << 20));
        invcmd->add_option("--dmax", cfg.dmax, "Largest degree")->check(CLI::Range(1, 1 << 20));
        invcmd->add_option("--out", cfg.output, "Artifact path (GVTable)")->required();
        add_format(invcmd);

        CLI::App* paritycmd = app.add_subcommand(
            "parity", "Divisibility-by-2 check of c1(det Ext(E,E)) by symbolic GRR");
        CLI::Option* chern_opt = paritycmd->add_option("--chern", cfg.input, "Chern data JSON");
        CLI::Option* random_opt =
            paritycmd->add_option("--random", cfg.random_count, "Run N seeded random datasets")
                ->check(CLI::Range(1, 1 << 20));
        paritycmd->add_option("--seed", cfg.seed, "Seed for --random");
        chern_opt->excludes(random_opt);
        random_opt->excludes(chern_opt);
        add_format(paritycmd);

        CLI::App* cechcmd = app.add_subcommand(
            "cech", "F2 obstruction class and square-root torsor count of a cover");
        cechcmd->add_option("--cover", cfg.input, "Cover JSON")->required();
        add_format(cechcmd);

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            err << e.what() << "\n";
            return kExitUsage;
        }

        if (paritycmd->parsed() && cfg.random_count == 0 && cfg.input.empty()) {
            err << "parity needs --chern or --random\n";
            return kExitUsage;
        }

        if (k3cmd->parsed()) return cmd_k3(cfg, out);
        if (gwcmd->parsed()) return cmd_gw(cfg, out);
        if (invcmd->parsed()) return cmd_gv_invert(cfg, out);
        if (paritycmd->parsed()) return cmd_parity(cfg, out);
        if (cechcmd->parsed()) return cmd_cech(cfg, out);
        err << "no command\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const InversionError& e) {
        err << "inversion failure: " << e.what() << "\n";
        return kExitTheorem;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}

}  // namespace gvkit::cli
