// braidgrow: growth series of braid groups via template-partitioned
// enumeration on Dynnikov coordinates.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "braidgrow/engine.hpp"
#include "braidgrow/errors.hpp"
#include "braidgrow/oracle.hpp"
#include "braidgrow/series.hpp"
#include "braidgrow/word.hpp"

namespace {

using namespace braidgrow;

Gens parse_gens(const std::string& s) {
    if (s == "artin") return Gens::Artin;
    if (s == "dual") return Gens::Dual;
    throw CLI::ValidationError("--gens", "must be 'artin' or 'dual'");
}

void print_row(int level, std::uint64_t s, std::uint64_t g) {
    std::cout << level << "\t" << s << "\t" << g << "\n";
    std::cout.flush();
}

int cmd_enumerate(int n, const std::string& gens, int max_len,
                  const std::string& store, int workers, std::uint64_t mem_cap,
                  const std::string& mode, bool resume) {
    Alphabet alpha(n, parse_gens(gens));
    if (mode == "oracle") {
        OracleResult res = bfs_enumerate(alpha, max_len);
        for (int l = 0; l <= max_len; ++l) print_row(l, res.s[l], res.g[l]);
        return 0;
    }
    if (mode != "red-combi" && mode != "combi")
        throw CLI::ValidationError("--mode", "must be red-combi, combi or oracle");
    if (store.empty())
        throw CLI::ValidationError("--store", "required for combi/red-combi modes");
    EngineConfig cfg{alpha};
    cfg.max_len = max_len;
    cfg.store_root = store;
    cfg.workers = workers;
    cfg.mem_cap = mem_cap;
    cfg.reduced = (mode == "red-combi");
    cfg.resume = resume;
    run_enumeration(cfg, print_row);
    return 0;
}

int cmd_fit(const std::string& path, int max_degree, int surplus) {
    Series s = read_series(path);
    auto fit = pade_search(s, max_degree, surplus);
    if (!fit) {
        std::cout << "no rational fit\n";
        return 1;
    }
    std::cout << rational_to_string(*fit) << "\n";
    VerifyReport rep = verify(s, *fit);
    std::cerr << "matched " << rep.compared << " coefficients\n";
    return 0;
}

int cmd_check(int n, const std::string& gens, int max_len,
              const std::string& store, int workers, std::uint64_t mem_cap) {
    Alphabet alpha(n, parse_gens(gens));
    OracleResult oracle = bfs_enumerate(alpha, max_len);

    EngineConfig cfg{alpha};
    cfg.max_len = max_len;
    cfg.workers = workers;
    cfg.mem_cap = mem_cap;
    for (bool reduced : {false, true}) {
        cfg.reduced = reduced;
        cfg.store_root = std::string(store) + (reduced ? "/red" : "/plain");
        EngineResult res = run_enumeration(cfg);
        const char* name = reduced ? "red-combi" : "combi";
        for (int l = 0; l <= max_len; ++l) {
            if (res.s[l] != oracle.s[l]) {
                std::cerr << "mismatch: " << name << " s(" << l << ") = "
                          << res.s[l] << ", oracle says " << oracle.s[l] << "\n";
                return 1;
            }
            if (res.g[l] != oracle.g[l]) {
                std::cerr << "mismatch: " << name << " g(" << l << ") = "
                          << res.g[l] << ", oracle says " << oracle.g[l] << "\n";
                return 1;
            }
        }
    }
    for (int l = 0; l <= max_len; ++l) print_row(l, oracle.s[l], oracle.g[l]);
    std::cerr << "oracle, combi and red-combi agree up to length " << max_len
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth series of braid groups in Artin and dual generators"};
    app.require_subcommand(1);

    int n = 3, max_len = 5, workers = 1;
    std::string gens = "artin", store, mode = "red-combi", series_file;
    std::uint64_t mem_cap = 4ull << 30;
    bool resume = false;
    int max_degree = 14, surplus = 3;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--strands", n, "number of strands n")->check(CLI::Range(2, 16));
        sub->add_option("--gens", gens, "generating set: artin or dual");
        sub->add_option("--max-len", max_len, "maximal word length")->check(CLI::NonNegativeNumber);
        sub->add_option("--store", store, "store directory for representative sets");
        sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--mem-cap", mem_cap, "memory cap per task, bytes");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "compute s and g per length");
    add_common(enumerate);
    enumerate->add_option("--mode", mode, "red-combi, combi or oracle");
    enumerate->add_flag("--resume", resume, "resume from an existing manifest");

    CLI::App* fit = app.add_subcommand("fit", "fit a rational function to a series file");
    fit->add_option("series", series_file, "file with one integer coefficient per line")
        ->required();
    fit->add_option("--max-degree", max_degree, "maximal num+den degree");
    fit->add_option("--surplus", surplus, "extra coefficients required beyond the fit window");

    CLI::App* check = app.add_subcommand("check", "compare oracle, combi and red-combi");
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(n, gens, max_len, store, workers, mem_cap, mode, resume);
        if (fit->parsed()) return cmd_fit(series_file, max_degree, surplus);
        return cmd_check(n, gens, max_len, store, workers, mem_cap);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 2;
    } catch (const MemCapError& e) {
        std::cerr << "memory cap: " << e.what() << "\n";
        return 2;
    } catch (const StoreError& e) {
        std::cerr << "store: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
