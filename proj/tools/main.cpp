#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "f1arr/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw f1arr::Error::input("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw f1arr::Error::input("cannot write file: " + path);
    }
    out << content;
}

void emit(const f1arr::Report& report, bool json) {
    if (json) {
        std::cout << report.machine.dump(2) << "\n";
    } else {
        std::cout << report.human;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torification analysis for hyperplane arrangement complements and graph "
                 "cycle spaces"};
    app.require_subcommand(1);

    std::string cp_file, cp_method = "both";
    bool cp_json = false;
    CLI::App* cp = app.add_subcommand("charpoly", "characteristic polynomial of an arrangement");
    cp->add_option("file", cp_file, "arrangement file")->required();
    cp->add_option("--method", cp_method, "mobius|delres|both (default both)")
        ->check(CLI::IsMember({"mobius", "delres", "both"}));
    cp->add_flag("--json", cp_json, "machine-readable output");

    std::string f1_file;
    bool f1_json = false, f1_oracle = false;
    std::uint64_t f1_q = 0;
    CLI::App* f1 = app.add_subcommand("f1", "torification verdict for an arrangement complement");
    f1->add_option("file", f1_file, "arrangement file")->required();
    f1->add_flag("--oracle", f1_oracle, "cross-check the verdict by finite-field point counting");
    f1->add_option("--q", f1_q, "prime for the oracle (chosen automatically when omitted)");
    f1->add_flag("--json", f1_json, "machine-readable output");

    std::string g_file, g_emit;
    bool g_json = false, g_oracle = false;
    std::uint64_t g_q = 0;
    CLI::App* gr = app.add_subcommand("graph", "torifiability of the cycle-space arrangement of "
                                               "a graph");
    gr->add_option("file", g_file, "graph file")->required();
    gr->add_option("--emit-arrangement", g_emit, "write the cycle arrangement to this path");
    gr->add_flag("--oracle", g_oracle, "cross-check by finite-field point counting");
    gr->add_option("--q", g_q, "prime for the oracle (chosen automatically when omitted)");
    gr->add_flag("--json", g_json, "machine-readable output");

    std::string c_file;
    bool c_json = false;
    std::uint64_t c_q = 0;
    CLI::App* ct = app.add_subcommand("count", "count complement points over F_q by enumeration");
    ct->add_option("file", c_file, "arrangement file")->required();
    ct->add_option("--q", c_q, "prime field size")->required();
    ct->add_flag("--json", c_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is an input error
    }

    try {
        if (cp->parsed()) {
            emit(f1arr::run_charpoly(read_file(cp_file), f1arr::parse_method(cp_method)),
                 cp_json);
        } else if (f1->parsed()) {
            f1arr::OracleOptions oracle;
            oracle.enabled = f1_oracle || f1_q != 0;
            if (f1_q != 0) oracle.q = f1_q;
            emit(f1arr::run_f1(read_file(f1_file), oracle), f1_json);
        } else if (gr->parsed()) {
            f1arr::OracleOptions oracle;
            oracle.enabled = g_oracle || g_q != 0;
            if (g_q != 0) oracle.q = g_q;
            f1arr::GraphRunResult result = f1arr::run_graph(read_file(g_file), oracle);
            if (!g_emit.empty()) write_file(g_emit, result.arrangement_text);
            emit(result.report, g_json);
        } else if (ct->parsed()) {
            emit(f1arr::run_count(read_file(c_file), c_q), c_json);
        }
        return 0;
    } catch (const f1arr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return f1arr::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
