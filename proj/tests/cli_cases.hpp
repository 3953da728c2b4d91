#pragma once

// CLI invocations pinned by golden files, and a popen runner.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

struct Case {
    std::string name;
    std::vector<std::string> args;
    int exit_code;
};

inline const std::string kDatumA =
    R"({"n":4,"slots":[{"size":1,"partition":[1],"label":"a1"},{"size":1,"partition":[1],"label":"a2"},)"
    R"({"size":1,"partition":[1],"label":"a3"},{"size":1,"partition":[1],"label":"a4"}]})";
inline const std::string kDatumTrivial3 = R"({"n":3,"slots":[{"size":1,"partition":[3],"label":"a1"}]})";
inline const std::string kDatumMixed =
    R"({"n":5,"slots":[{"size":1,"partition":[2,1],"label":"a1"},{"size":2,"partition":[1],"label":"a2"}]})";

inline std::vector<Case> golden_cases() {
    return {
        {"families_2", {"families", "--n", "2"}, 0},
        {"families_3_latex", {"families", "--n", "3", "--format", "latex"}, 0},
        {"families_4_json", {"families", "--n", "4", "--format", "json"}, 0},
        {"families_2_paper", {"families", "--n", "2", "--mode", "paper"}, 0},
        {"descent_trivial3", {"descent", "--datum", kDatumTrivial3}, 0},
        {"descent_mixed_json", {"descent", "--datum", kDatumMixed, "--format", "json"}, 0},
        {"branch_A_paper", {"branch", "--datum", kDatumA, "--orbit", "3,1", "--mode", "paper"}, 0},
        {"branch_A_json", {"branch", "--datum", kDatumA, "--orbit", "2,1,1", "--format", "json"}, 0},
        {"branch_mixed", {"branch", "--datum", kDatumMixed, "--orbit", "2,1,1,1"}, 0},
        {"gggr_31_paper", {"gggr", "--n", "4", "--orbit", "3,1", "--mode", "paper"}, 0},
        {"gggr_211_paper", {"gggr", "--n", "4", "--orbit", "2,1,1", "--mode", "paper"}, 0},
        {"gggr_22_paper", {"gggr", "--n", "4", "--orbit", "2,2", "--mode", "paper"}, 0},
        {"gggr_22_paper_latex", {"gggr", "--n", "4", "--orbit", "2,2", "--mode", "paper", "--format", "latex"}, 0},
        {"gggr_31_paper_json", {"gggr", "--n", "4", "--orbit", "3,1", "--mode", "paper", "--format", "json"}, 0},
        {"gggr_31", {"gggr", "--n", "4", "--orbit", "3,1"}, 0},
        {"gggr_211", {"gggr", "--n", "4", "--orbit", "2,1,1"}, 0},
        {"gggr_22", {"gggr", "--n", "4", "--orbit", "2,2"}, 0},
        {"gggr_221_json", {"gggr", "--n", "5", "--orbit", "2,2,1", "--format", "json"}, 0},
        {"orbit_211", {"orbit", "--orbit", "2,1,1"}, 0},
        {"orbit_4_json", {"orbit", "--orbit", "4", "--format", "json"}, 0},
        {"orbit_moment", {"orbit", "--partition", "2,2,1,1", "--n", "3"}, 0},
        {"check_2", {"check", "--n", "2"}, 0},
        {"check_4", {"check", "--n", "4"}, 0},
        {"check_3_json", {"check", "--n", "3", "--format", "json"}, 0},
        {"check_2_paper", {"check", "--n", "2", "--mode", "paper"}, 2},
    };
}

inline std::string quote(const std::string& s) {
    std::string r = "'";
    for (char c : s) r += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return r + "'";
}

struct Result {
    std::string out;
    int code = -1;
};

// Runs the CLI with stderr discarded. threads <= 0 leaves UGGGR_THREADS unset.
inline Result run(const std::vector<std::string>& args, int threads = 0) {
    std::string cmd;
    if (threads > 0) cmd = "UGGGR_THREADS=" + std::to_string(threads) + " ";
    cmd += quote(UGGGR_CLI);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    Result r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string golden_path(const std::string& name) { return std::string(UGGGR_GOLDEN_DIR) + "/" + name + ".out"; }

}  // namespace cli
