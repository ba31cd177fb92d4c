// orbit-atlas: Gelfand-Kirillov dimensions and annihilator varieties of
// simple highest weight modules, with a small HTTP front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "orbitatlas/pipeline.hpp"
#include "orbitatlas/report.hpp"

using namespace orbitatlas;
namespace fs = std::filesystem;

namespace {

struct AppData {
    std::shared_ptr<CellDataFile> cells = std::make_shared<CellDataFile>();
    std::unique_ptr<OrbitData> tables; // only when supplements are loaded
};

bool looks_like_supplement(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        return line.rfind("source=", 0) == 0;
    }
    return false;
}

void load_data_dir(AppData& app, const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::runtime_error("data directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".tsv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        if (looks_like_supplement(f.string())) {
            if (!app.tables) app.tables = std::make_unique<OrbitData>();
            app.tables->load_supplement(f.string());
        } else {
            app.cells->load(f.string());
        }
    }
}

std::vector<Rational> parse_csv_rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) out.push_back(Rational::parse(tok));
    }
    return out;
}

Vec weight_from_query(const RootSystem& rs, const std::vector<Rational>& coords,
                      const std::vector<Rational>& fund, bool pycox_order) {
    if (!coords.empty() && !fund.empty())
        throw std::invalid_argument("give exactly one of coords and fund");
    if (!coords.empty()) {
        if ((int)coords.size() != rs.coordinate_dim)
            throw std::invalid_argument("coordinate mismatch: expected " +
                                        std::to_string(rs.coordinate_dim) + " coordinates");
        Vec v = coords;
        rs.validate_weight(v);
        return v;
    }
    if (fund.empty()) throw std::invalid_argument("give exactly one of coords and fund");
    if ((int)fund.size() != rs.rank)
        throw std::invalid_argument("coordinate mismatch: expected " + std::to_string(rs.rank) +
                                    " fundamental coefficients");
    std::vector<Rational> k = fund;
    if (pycox_order && (rs.type == Type::B || rs.type == Type::C || rs.type == Type::D)) {
        // published convention writes [n - i] for s_i in types B, C, D
        std::reverse(k.begin(), k.end());
    }
    return rs.weight_from_fund(k);
}

int exit_code_for(const Result& r, bool want_orbit) {
    if (!r.pending.empty()) return 2;
    if (want_orbit && !r.orbit.resolved && r.orbit.failure.rfind("unresolved", 0) == 0) return 2;
    return 0;
}

nlohmann::json antidominant_json(const Result& r) {
    nlohmann::json j;
    if (r.integral) {
        j["w"] = word_to_json(r.w_ambient);
    } else {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : r.components)
            comps.push_back({{"component", c.name}, {"w", word_to_json(c.w)}});
        j["w_components"] = comps;
    }
    j["mu"] = vec_to_json(r.mu);
    nlohmann::json pat = nlohmann::json::array();
    const auto& rs = standard_system(r.ambient, r.rank);
    for (int i = 0; i < rs.rank; ++i) pat.push_back(rs.pair_simple(r.mu, i).str());
    j["mu_fund"] = pat;
    return j;
}

int serve(const Pipeline& pipeline, int port) {
    httplib::Server server;
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("ok", "text/plain");
    });
    auto handle = [&pipeline](const httplib::Request& req, httplib::Response& res,
                              bool antidominant_only) {
        nlohmann::json reply;
        try {
            auto body = nlohmann::json::parse(req.body);
            int rank = body.value("rank", 0);
            Type t = parse_type(body.at("type").get<std::string>(), rank);
            const RootSystem& rs = standard_system(t, rank);
            std::vector<Rational> coords, fund;
            if (body.contains("coords"))
                for (const auto& x : body["coords"])
                    coords.push_back(x.is_string() ? Rational::parse(x.get<std::string>())
                                                   : Rational((long long)x.get<double>()));
            if (body.contains("fund"))
                for (const auto& x : body["fund"])
                    fund.push_back(x.is_string() ? Rational::parse(x.get<std::string>())
                                                 : Rational((long long)x.get<double>()));
            Vec lambda = weight_from_query(rs, coords, fund, body.value("pycox", false));
            Result r = pipeline.run(t, rs.rank, lambda, !antidominant_only && is_exceptional(t));
            if (!r.pending.empty()) {
                res.status = 422;
                reply["error"] = r.pending;
            } else {
                reply = antidominant_only ? antidominant_json(r) : result_to_json(r);
            }
        } catch (const missing_datum_error& e) {
            res.status = 422;
            reply["error"] = e.what();
        } catch (const std::exception& e) {
            res.status = 400;
            reply["error"] = e.what();
        }
        res.set_content(reply.dump(), "application/json");
    };
    server.Post("/lie/GKdim", [&](const httplib::Request& req, httplib::Response& res) {
        handle(req, res, false);
    });
    server.Post("/lie/antidominant", [&](const httplib::Request& req, httplib::Response& res) {
        handle(req, res, true);
    });
    std::cout << "listening on port " << port << std::endl;
    return server.listen("0.0.0.0", port) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"GK dimension and annihilator variety calculator for simple highest weight modules"};
    std::string type_str, coords_str, fund_str;
    std::vector<std::string> cell_files, supplement_files;
    std::string data_dir;
    int rank = 0;
    bool want_gkdim = false, want_orbit = false, want_both = false, want_anti = false;
    bool json_out = false, pycox_order = false, no_audit = false;
    size_t engine_order = 10080;
    int port = 5000;

    cli.add_option("--type", type_str, "ambient simple type: A,B,C,D,G2,F4,E6,E7,E8");
    cli.add_option("--rank", rank, "rank for classical types");
    cli.add_option("--coords", coords_str, "weight in ambient coordinates, e.g. 4,5,3/2,1/2");
    cli.add_option("--fund", fund_str, "fundamental-weight coefficients, Bourbaki order");
    cli.add_flag("--pycox", pycox_order, "fundamental coefficients use the PyCox index order");
    cli.add_flag("--gkdim", want_gkdim, "report the GK dimension");
    cli.add_flag("--orbit", want_orbit, "report the annihilator orbit");
    cli.add_flag("--both", want_both, "report both (default)");
    cli.add_flag("--antidominant", want_anti, "report w and the antidominant weight only");
    cli.add_flag("--json", json_out, "emit the full JSON report");
    cli.add_flag("--no-audit", no_audit, "omit the audit trail in text output");
    cli.add_option("--cell-data", cell_files, "precomputed cell data file (repeatable)");
    cli.add_option("--supplement", supplement_files, "table supplement file (repeatable)");
    cli.add_option("--data", data_dir, "data directory (default: ORBIT_ATLAS_DATA)");
    cli.add_option("--max-engine-order", engine_order,
                   "largest Weyl group the native cell engine may enumerate");

    auto* serve_cmd = cli.add_subcommand("serve", "run the HTTP service");
    serve_cmd->add_option("--port", port, "port to listen on");

    CLI11_PARSE(cli, argc, argv);

    try {
        AppData app;
        if (data_dir.empty())
            if (const char* env = std::getenv("ORBIT_ATLAS_DATA")) data_dir = env;
        if (!data_dir.empty() && fs::is_directory(data_dir)) load_data_dir(app, data_dir);
        for (const auto& f : cell_files) app.cells->load(f);
        for (const auto& f : supplement_files) {
            if (!app.tables) app.tables = std::make_unique<OrbitData>();
            app.tables->load_supplement(f);
        }
        PipelineOptions opts;
        opts.cell_data = app.cells;
        opts.max_engine_order = engine_order;
        Pipeline pipeline = app.tables ? Pipeline(opts, *app.tables) : Pipeline(opts);

        if (*serve_cmd) return serve(pipeline, port);

        if (type_str.empty()) {
            std::cerr << "--type is required" << std::endl;
            return 1;
        }
        int mode_count = want_gkdim + want_orbit + want_both + want_anti;
        if (mode_count > 1) {
            std::cerr << "choose one of --gkdim, --orbit, --both, --antidominant" << std::endl;
            return 1;
        }
        if (mode_count == 0) want_both = true;

        Type t = parse_type(type_str, rank);
        const RootSystem& rs = standard_system(t, rank);
        Vec lambda = weight_from_query(rs, parse_csv_rationals(coords_str),
                                       parse_csv_rationals(fund_str), pycox_order);
        if (want_orbit && !is_exceptional(t)) {
            std::cerr << "orbit resolution supported for exceptional ambient types" << std::endl;
            return 1;
        }
        bool resolve_orbit = (want_orbit || want_both) && is_exceptional(t);
        Result r = pipeline.run(t, rs.rank, lambda, resolve_orbit);
        if (want_anti) {
            if (json_out) {
                std::cout << antidominant_json(r).dump(2) << std::endl;
            } else {
                if (r.integral)
                    std::cout << "w = " << r.w_ambient.str() << std::endl;
                else
                    for (const auto& c : r.components)
                        std::cout << "w[" << c.name << "] = " << c.w.str() << std::endl;
                std::cout << "mu = (";
                for (size_t i = 0; i < r.mu.size(); ++i)
                    std::cout << (i ? "," : "") << r.mu[i].str();
                std::cout << ")" << std::endl;
                std::cout << "mu = [";
                for (int i = 0; i < rs.rank; ++i)
                    std::cout << (i ? "," : "") << rs.pair_simple(r.mu, i).str();
                std::cout << "] in fundamental coefficients" << std::endl;
            }
            return 0;
        }
        if (json_out)
            std::cout << result_to_json(r).dump(2) << std::endl;
        else
            std::cout << render_text(r, !no_audit);
        return exit_code_for(r, resolve_orbit);
    } catch (const missing_datum_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
