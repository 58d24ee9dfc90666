// End-to-end checks of the command line binary: output equality between
// cache hit and miss, exit codes, and JSON round trips through real pipes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "hermlat/serialize.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok  " : "FAIL") << "  " << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& cache_dir) {
    std::string cmd = "HERMLAT_CACHE_DIR=" + cache_dir + " " + std::string(HERMLAT_CLI_PATH) +
                      " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main() {
    fs::path cache = fs::temp_directory_path() / "hermlat-cli-test-cache";
    fs::remove_all(cache);
    std::string cd = cache.string();

    // cache miss then hit must produce byte-identical output
    RunResult miss = run("classgroup -213", cd);
    check(miss.exit_code == 0, "classgroup runs");
    check(fs::exists(cache / "cg_852.json"), "cache file written");
    RunResult hit = run("classgroup -213", cd);
    check(hit.exit_code == 0 && hit.out == miss.out, "cache hit output identical");
    RunResult nocache = run("classgroup -213 --no-cache", cd);
    check(nocache.out == miss.out, "no-cache output identical");

    // a corrupted cache entry falls back to recomputation
    {
        std::FILE* f = std::fopen((cache / "cg_852.json").string().c_str(), "w");
        std::fputs("{\"schema_version\":1,\"d_K\":-852,\"h\":9,\"divisors\":[9],"
                   "\"forms\":[],\"char_table\":[]}",
                   f);
        std::fclose(f);
    }
    RunResult corrupted = run("classgroup -213", cd);
    check(corrupted.exit_code == 0 && corrupted.out == miss.out,
          "corrupted cache entry is ignored");

    // JSON output re-parses to the in-memory values
    RunResult mass = run("mass -47 4 odd --json", cd);
    check(mass.exit_code == 0, "mass runs");
    try {
        auto j = hermlat::json::parse(mass.out);
        hermlat::Field F = hermlat::make_field(-47);
        hermlat::GenusSym G{F, hermlat::Parity::odd, 4, {1}};
        check(j.is_array() && j.size() == 1, "one rank-4 genus over -47");
        check(j.at(0).at("partial_mass") == hermlat::rat_str(partial_mass(G)), "partial mass round trip");
        check(j.at(0).at("total_mass") == hermlat::rat_str(total_mass(G)), "total mass round trip");
        check(j.at(0).at("classes").size() == 5, "all five classes occur");
    } catch (const std::exception& e) {
        check(false, std::string("json parse: ") + e.what());
    }

    RunResult lat = run("construct -1 4 even 1 --json", cd);
    try {
        hermlat::HermLattice L = hermlat::lattice_from_json(hermlat::json::parse(lat.out));
        check(hermlat::is_unimodular(L) && hermlat::parity(L) == hermlat::Parity::even,
              "constructed lattice reparses and passes invariants");
    } catch (const std::exception& e) {
        check(false, std::string("lattice json: ") + e.what());
    }

    // exit codes: 0 on success, 1 on usage errors
    check(run("field -47", cd).exit_code == 0, "exit 0 on success");
    check(run("field 47", cd).exit_code == 1, "exit 1 on positive D");
    check(run("field -12", cd).exit_code == 1, "exit 1 on non-squarefree D");
    check(run("mass -47 4 odd nosuchclass", cd).exit_code == 1, "exit 1 on unknown class");
    check(run("frobnicate", cd).exit_code == 1, "exit 1 on unknown subcommand");
    check(run("construct -47 2 even 1", cd).exit_code == 1,
          "exit 1 when no even lattice exists");

    // aut agrees with the library value
    RunResult aut = run("aut -3 2 odd 1", cd);
    check(aut.exit_code == 0 && aut.out == "72\n", "aut prints 72 over disc -3");

    fs::remove_all(cache);
    std::cout << (failures == 0 ? "cli tests passed\n" : "cli tests FAILED\n");
    return failures == 0 ? 0 : 1;
}
