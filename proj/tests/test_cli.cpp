// Runs the fintop executable and checks its output and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "fintop/document.hpp"
#include "fintop/set_classes.hpp"

namespace {

const std::filesystem::path kFixtures = FINTOP_FIXTURES_DIR;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FINTOP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

bool has_line(const std::string& out, const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = out.find(key, pos)) != std::string::npos) {
        if (pos == 0 || out[pos - 1] == '\n') {
            const auto eol = out.find('\n', pos);
            auto line = out.substr(pos, eol - pos);
            auto rest = line.substr(key.size());
            if (!rest.empty() && rest[0] == ' ') {
                rest = rest.substr(rest.find_first_not_of(' '));
                return rest.rfind(value, 0) == 0;
            }
        }
        ++pos;
    }
    return false;
}

}  // namespace

TEST_CASE("classify-set on the reference spaces") {
    auto r = run("classify-set " + fixture("e1a.json") + " b c");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "ABSet", "yes"));
    CHECK(has_line(r.out, "ASet", "no"));
    CHECK(has_line(r.out, "SemiOpen", "yes"));

    r = run("classify-set " + fixture("e1b.json") + " c");
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "BSet", "yes"));
    CHECK(has_line(r.out, "ABSet", "no"));

    r = run("classify-set " + fixture("e1b.json"));
    CHECK(r.status == 0);
    for (const char* c : {"Open", "SemiOpen", "Preopen", "BetaOpen", "ABSet", "SemiRegular", "LocallyClosed"})
        CHECK(has_line(r.out, c, "yes"));
}

TEST_CASE("classify-set verdicts equal library verdicts") {
    const auto space = fintop::decode(fintop::read_space_document(kFixtures / "e1a.json"));
    fintop::for_each_subset(4, [&](fintop::SubsetMask a) {
        std::string args = "classify-set " + fixture("e1a.json");
        for (const auto& p : space.names(a)) args += " " + p;
        const auto r = run(args);
        REQUIRE(r.status == 0);
        for (const auto c : fintop::kAllSetClasses)
            CHECK(has_line(r.out, std::string(fintop::name(c)), fintop::belongs(space.topology(), a, c) ? "yes" : "no"));
        return true;
    });
}

TEST_CASE("classify-space") {
    auto r = run("classify-space " + fixture("e1b.json"));
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "Hyperconnected", "yes"));
    CHECK(has_line(r.out, "ExtremallyDisconnected", "yes"));
    r = run("classify-space " + fixture("discrete2.json"));
    CHECK(has_line(r.out, "Discrete", "yes"));
    CHECK(has_line(r.out, "Partition", "yes"));
    r = run("classify-space " + fixture("indiscrete3.json"));
    CHECK(has_line(r.out, "Indiscrete", "yes"));
}

TEST_CASE("classify-map") {
    auto r = run("classify-map " + fixture("identity_discrete2.json"));
    CHECK(r.status == 0);
    CHECK(r.out.find(" no") == std::string::npos);
    r = run("classify-map " + fixture("constant_e1a.json"));
    CHECK(r.status == 0);
    CHECK(r.out.find(" no") == std::string::npos);
    r = run("classify-map " + fixture("identity_e1b.json"));
    CHECK(has_line(r.out, "StronglyIrresolute", "no"));
}

TEST_CASE("enumerate") {
    CHECK(run("enumerate --n 2 --count-only").out == "4\n");
    CHECK(run("enumerate --n 3 --count-only").out == "29\n");
    CHECK(run("enumerate --n 0 --count-only").out == "1\n");
    const auto r = run("enumerate --n 2");
    CHECK(r.status == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
    CHECK(run("enumerate --n 9").status == 2);
}

TEST_CASE("verify exit codes") {
    CHECK(run("verify t5 --max-n 2").status == 0);
    const auto r = run("verify nonrev-ab-a --max-n 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("witness-found") != std::string::npos);
    CHECK(run("verify 'implication:SemiOpen=>Open'").status == 1);
    CHECK(run("verify no-such-claim").status == 2);
    CHECK(run("verify all").status == 0);
}

TEST_CASE("verify all at three points reports the existence claims that need four") {
    const auto r = run("verify all --max-n 3");
    CHECK(r.status == 1);
    for (const char* id : {"nonrev-ab-a ", "indep-ab-lc ", "nonrev-s41-i "}) {
        const auto at = r.out.find(std::string("\n") + id);
        REQUIRE(at != std::string::npos);
        CHECK(r.out.substr(at, r.out.find('\n', at + 1) - at).find("FAILED") != std::string::npos);
    }
    CHECK(r.out.find("37/40 propositions confirmed") != std::string::npos);
}

TEST_CASE("verify writes a report") {
    const auto path = std::filesystem::temp_directory_path() / "fintop_cli_report.json";
    const auto r = run("verify all --parallel --report " + path.string());
    CHECK(r.status == 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"proposition\": \"nonrev-ab-a\"") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("usage and validation errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("classify-set " + fixture("missing.json")).status == 2);
    CHECK(run("classify-set " + fixture("e1a.json") + " z").status == 2);

    const auto bad = std::filesystem::temp_directory_path() / "fintop_cli_bad.json";
    std::ofstream(bad) << R"({"points": ["a","b","c"], "opens": [[], ["a"], ["b"], ["a","b","c"]]})";
    const auto r = run("classify-space " + bad.string());
    CHECK(r.status == 2);
    CHECK(r.out.find("NotClosedUnderUnion: union of {a} and {b} is not open") != std::string::npos);
    std::filesystem::remove(bad);
}
