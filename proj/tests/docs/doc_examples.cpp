// Runs every "$ command" line of the ```console blocks in a markdown file and
// compares combined stdout/stderr with the lines that follow it.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

namespace fs = std::filesystem;

struct Example {
    int line;
    std::string command;
    std::string expected;
};

std::vector<Example> read_examples(const std::string& path) {
    std::ifstream in(path);
    std::vector<Example> out;
    std::string line;
    bool in_block = false;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!in_block) {
            in_block = line == "```console";
            continue;
        }
        if (line == "```") {
            in_block = false;
        } else if (line.rfind("$ ", 0) == 0) {
            out.push_back({number, line.substr(2), ""});
        } else if (!out.empty()) {
            out.back().expected += line + "\n";
        }
    }
    return out;
}

std::string run(const fs::path& dir, const std::string& exe, std::string command) {
    if (command.rfind("weier-stab ", 0) == 0) command = "'" + exe + "'" + command.substr(10);
    const fs::path script = dir / "example.sh";
    std::ofstream(script) << "unset WEIER_STAB_CONFIG\ncd '" << dir.string() << "'\n" << command << "\n";
    FILE* pipe = popen(("sh '" + script.string() + "' 2>&1").c_str(), "r");
    std::string got;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) got.append(buf, n);
    pclose(pipe);
    return got;
}

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: doc_examples <markdown> <weier-stab>\n";
        return 2;
    }
    const auto examples = read_examples(argv[1]);
    const fs::path dir = fs::temp_directory_path() / ("weierstab_docs_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    int failures = 0;
    for (const auto& ex : examples) {
        const std::string got = run(dir, fs::absolute(argv[2]).string(), ex.command);
        const bool ok = got == ex.expected;
        std::cout << (ok ? "PASS" : "FAIL") << " line " << ex.line << ": " << ex.command << "\n";
        if (!ok) {
            ++failures;
            std::cout << "  expected:\n" << ex.expected << "  got:\n" << got;
        }
    }
    fs::remove_all(dir);
    std::cout << examples.size() << " examples, " << failures << " failed\n";
    return examples.empty() || failures ? 1 : 0;
}
