#pragma once

// Golden CLI cases: golden/NAME.cmd holds the argument line, NAME.stdin
// (optional) is fed on standard input, NAME.expected holds the exit code,
// stdout and stderr.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sl2rat/cli.hpp"

namespace sl2rat::testing::golden {

namespace fs = std::filesystem;

inline std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::vector<std::string> case_names(const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".cmd") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

inline std::vector<std::string> case_args(const fs::path& dir, const std::string& name) {
    std::istringstream line(slurp(dir / (name + ".cmd")));
    std::vector<std::string> args;
    for (std::string a; line >> a;) args.push_back(a);
    return args;
}

inline std::string format_result(int code, const std::string& out, const std::string& err) {
    return "exit: " + std::to_string(code) + "\n--- stdout\n" + out + "--- stderr\n" + err;
}

inline int expected_code(const fs::path& dir, const std::string& name) {
    return std::atoi(slurp(dir / (name + ".expected")).c_str() + 6);
}

struct CwdGuard {
    fs::path saved = fs::current_path();
    explicit CwdGuard(const fs::path& p) { fs::current_path(p); }
    ~CwdGuard() { fs::current_path(saved); }
};

inline std::string run_in_process(const fs::path& dir, const std::string& name) {
    CwdGuard cwd(dir);
    std::istringstream in(fs::exists(name + ".stdin") ? slurp(name + ".stdin") : std::string());
    auto r = cli::execute(case_args(dir, name), in);
    return format_result(r.code, r.out, r.err);
}

inline const std::set<std::string>& leaf_commands() {
    static const std::set<std::string> c{"validate", "casimir", "minpoly", "levels", "filtration", "devissage",
                                         "tensor", "hom", "dual", "pic normalize", "pic mul", "pic inv", "iso",
                                         "classify-rank1", "rationalize", "solve-add", "solve-mult", "ext build",
                                         "ext casimir", "ext class-eq", "orbit"};
    return c;
}

/// Leaf command of a case ("pic mul"); empty for cases without one.
inline std::string case_command(const fs::path& dir, const std::string& name) {
    auto args = case_args(dir, name);
    std::vector<std::string> words;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--input" || args[i] == "--format" || args[i] == "--seed")
            ++i;
        else if (args[i].rfind("-", 0) != 0)
            words.push_back(args[i]);
    }
    if (words.empty()) return "";
    if ((words[0] == "pic" || words[0] == "ext") && words.size() > 1) return words[0] + " " + words[1];
    return words[0];
}

}  // namespace sl2rat::testing::golden
