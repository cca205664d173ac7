#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_util.hpp"
#include "mclam/lamination.hpp"

#include <fstream>

using cli_test::run_cli;
using cli_test::scratch_dir;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--nonsense").exit_code == 2);
    CHECK(run_cli("basilica --bogus-flag 1").exit_code == 2);
    CHECK(run_cli("basilica --depth 40").exit_code == 2);  // would be 2^39 chords
    CHECK(run_cli("classify --n 3 --a not-a-number --b 0,0").exit_code == 2);
    CHECK(run_cli("alter --out x.lam").exit_code == 2);  // neither --target nor --path
}

TEST_CASE("help exits cleanly") {
    auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("basilica") != std::string::npos);
}

TEST_CASE("basilica emits the lamination format and is reproducible") {
    auto dir = scratch_dir("mclam_cli_basilica");
    auto f1 = dir / "b1.lam";
    auto f2 = dir / "b2.lam";
    CHECK(run_cli("basilica --depth 4 --out " + f1.string()).exit_code == 0);
    CHECK(run_cli("basilica --depth 4 --out " + f2.string()).exit_code == 0);
    CHECK(slurp(f1) == slurp(f2));

    auto to_stdout = run_cli("basilica --depth 4");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.output == slurp(f1));

    CHECK(mclam::lamination_from_text(to_stdout.output) == mclam::basilica(4));
}

TEST_CASE("verify accepts generated files and rejects corrupted ones") {
    auto dir = scratch_dir("mclam_cli_verify");
    auto good = dir / "good.lam";
    REQUIRE(run_cli("basilica --depth 5 --out " + good.string()).exit_code == 0);
    auto ok = run_cli("verify " + good.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("non-crossing: ok") != std::string::npos);
    CHECK(ok.output.find("symmetry-180: ok") != std::string::npos);
    CHECK(ok.output.find("pushforward-into-basilica: ok") != std::string::npos);

    auto bad = dir / "bad.lam";
    std::ofstream out(bad);
    out << "lamination v1 generation=0 kind=intermediate\n0/1 1/2\n1/4 3/4\n";
    out.close();
    CHECK(run_cli("verify " + bad.string()).exit_code == 1);

    CHECK(run_cli("verify " + (dir / "missing.lam").string()).exit_code == 1);
}

TEST_CASE("diff of a file with itself is empty") {
    auto dir = scratch_dir("mclam_cli_diff");
    auto f = dir / "b.lam";
    REQUIRE(run_cli("basilica --depth 5 --out " + f.string()).exit_code == 0);
    auto r = run_cli("diff " + f.string() + " " + f.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "chords=0 gaps=0\n");
}

TEST_CASE("diff rejects mismatched generations") {
    auto dir = scratch_dir("mclam_cli_diff_gen");
    auto f4 = dir / "b4.lam";
    auto f5 = dir / "b5.lam";
    REQUIRE(run_cli("basilica --depth 4 --out " + f4.string()).exit_code == 0);
    REQUIRE(run_cli("basilica --depth 5 --out " + f5.string()).exit_code == 0);
    CHECK(run_cli("diff " + f4.string() + " " + f5.string()).exit_code == 1);
}

TEST_CASE("path subcommand prints names and length") {
    auto r = run_cli("path --target T");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "path: L M T\nN=2\n");

    auto self = run_cli("path --target L");
    CHECK(self.exit_code == 0);
    CHECK(self.output == "path: L\nN=0\n");

    CHECK(run_cli("path --target XL").exit_code == 2);
}

TEST_CASE("alter writes step files and a final lamination") {
    auto dir = scratch_dir("mclam_cli_alter");
    auto out = dir / "t.lam";
    auto steps = dir / "steps";
    auto r = run_cli("alter --target T --out " + out.string() + " --steps-dir " + steps.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("step 1: s=1/3-2/3 removed=1/6-5/6,1/3-2/3 added=1/6-1/3,2/3-5/6") !=
          std::string::npos);
    CHECK(r.output.find("step 2: s=5/24-7/24 removed=5/48-7/48,29/48-31/48 "
                        "added=5/48-31/48,7/48-29/48") != std::string::npos);
    CHECK(std::filesystem::exists(steps / "step1.lam"));
    CHECK(std::filesystem::exists(steps / "step2.lam"));
    CHECK_FALSE(std::filesystem::exists(steps / "step3.lam"));

    CHECK(run_cli("verify " + (steps / "step1.lam").string()).exit_code == 0);
    CHECK(run_cli("verify " + out.string()).exit_code == 0);
    // the last step file is the final lamination
    CHECK(slurp(steps / "step2.lam") == slurp(out));
}

TEST_CASE("alter accepts a label target and an explicit path") {
    auto dir = scratch_dir("mclam_cli_alter_forms");
    auto by_name = dir / "by_name.lam";
    auto by_label = dir / "by_label.lam";
    auto by_path = dir / "by_path.lam";
    REQUIRE(run_cli("alter --target T --out " + by_name.string()).exit_code == 0);
    REQUIRE(run_cli("alter --target '[5/24,11/48;13/48,7/24]' --out " + by_label.string())
                .exit_code == 0);
    REQUIRE(run_cli("alter --path L,M,T --out " + by_path.string()).exit_code == 0);
    CHECK(slurp(by_name) == slurp(by_label));
    CHECK(slurp(by_name) == slurp(by_path));

    // non-paths are rejected rather than re-routed
    CHECK(run_cli("alter --path L,T --out " + (dir / "x.lam").string()).exit_code == 1);
    CHECK(run_cli("alter --path M,L --out " + (dir / "y.lam").string()).exit_code == 1);
    // unknown names are usage errors
    CHECK(run_cli("alter --target XL --out " + (dir / "z.lam").string()).exit_code == 2);
}

TEST_CASE("fixed depth is honored or rejected") {
    auto dir = scratch_dir("mclam_cli_alter_depth");
    auto out = dir / "m.lam";
    auto r = run_cli("alter --target M --depth 7 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(mclam::load_lamination(out.string()).generation() == 7);
    CHECK(run_cli("alter --target RT --depth 4 --out " + (dir / "rt.lam").string()).exit_code ==
          1);
    CHECK(run_cli("path --target RT --depth 4").exit_code == 1);
}

TEST_CASE("gaps lists the shorthand names") {
    auto dir = scratch_dir("mclam_cli_gaps");
    auto f = dir / "b6.lam";
    REQUIRE(run_cli("basilica --depth 6 --out " + f.string()).exit_code == 0);
    auto r = run_cli("gaps " + f.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("label=[1/6,1/3;2/3,5/6] name=M") != std::string::npos);
    CHECK(r.output.find("label=[1/3,5/12;7/12,2/3] name=L") != std::string::npos);
    CHECK(r.output.find("label=[5/24,11/48;13/48,7/24] name=T") != std::string::npos);
}

TEST_CASE("svg subcommand") {
    auto dir = scratch_dir("mclam_cli_svg");
    auto lam = dir / "b3.lam";
    auto svg = dir / "b3.svg";
    REQUIRE(run_cli("basilica --depth 3 --out " + lam.string()).exit_code == 0);
    CHECK(run_cli("svg " + lam.string() + " --out " + svg.string() +
                  " --highlight 1/3-2/3 --highlight-color red")
              .exit_code == 0);
    std::string text = slurp(svg);
    CHECK(text.find("stroke=\"red\"") != std::string::npos);
    CHECK(run_cli("svg " + lam.string() + " --out " + svg.string() + " --highlight nonsense")
              .exit_code == 2);
}

TEST_CASE("classify prints a stable report") {
    auto r = run_cli("classify --n 3 --a 1,0 --b 10,0 --max-iter 2000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("v_plus: status=escaped") != std::string::npos);
    CHECK(r.output.find("v_minus: status=escaped") != std::string::npos);
    CHECK(r.output.find("same_cycle=no") != std::string::npos);
}

TEST_CASE("symmetry prints the residual") {
    auto r = run_cli("symmetry --n 4 --a 0.3,0.7 --b 0.1,0.2 --samples 100 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("samples=100 seed=7 residual=") != std::string::npos);
    auto again = run_cli("symmetry --n 4 --a 0.3,0.7 --b 0.1,0.2 --samples 100 --seed 7");
    CHECK(again.output == r.output);
}
