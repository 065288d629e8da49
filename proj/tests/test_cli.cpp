#include "equifreq/cli.hpp"
#include "equifreq/physics.hpp"
#include "equifreq/records.hpp"
#include "equifreq/transitions.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = equifreq::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand: the golden worked example") {
    const auto res = run_cli({"expand", "4", "3", "2", "1"});
    CHECK(res.code == 0);
    CHECK(res.out ==
          "identity: 11^2+2^2=10^2+5^2=125\n"
          "params: r=1 s=2 u=3 v=-4\n"
          "pair: 11->10 == 55->22 (delta = 21/12100)\n"
          "pair: 22->10 == 55->11 (delta = 24/3025)\n");
    CHECK(res.err.empty());
}

TEST_CASE("expand: degenerate inputs still succeed, with a note") {
    const auto zero_entries = run_cli({"expand", "1", "0", "3", "0"});
    CHECK(zero_entries.code == 0);
    CHECK(zero_entries.out ==
          "identity: 3^2+0^2=3^2+0^2=9\n"
          "params: r=3 s=0 u=1 v=0\n"
          "pairs: none (zero entry; ionized states excluded)\n");

    const auto all_zero = run_cli({"expand", "0", "0", "0", "0"});
    CHECK(all_zero.code == 0);
    CHECK(all_zero.out ==
          "identity: 0^2+0^2=0^2+0^2=0\n"
          "params: none (zero identity)\n"
          "pairs: none (zero entry; ionized states excluded)\n");

    const auto trivial = run_cli({"expand", "1", "1", "1", "0"});
    CHECK(trivial.code == 0);
    CHECK(trivial.out ==
          "identity: 1^2+1^2=1^2+1^2=2\n"
          "params: r=1 s=1 u=1 v=0\n"
          "pairs: none (degenerate identity)\n");
}

TEST_CASE("verify: equal, unequal, domain errors") {
    const auto eq = run_cli({"verify", "11", "10", "55", "22"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "equal (delta = 21/12100)\n");
    CHECK(eq.err.empty());

    const auto ne = run_cli({"verify", "3", "2", "4", "3"});
    CHECK(ne.code == 1);
    CHECK(ne.out == "not equal\n");

    const auto bad = run_cli({"verify", "2", "3", "4", "5"});  // upper below lower
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.substr(0, 7) == "error: ");

    const auto negative = run_cli({"verify", "-3", "2", "4", "3"});
    CHECK(negative.code == 2);
}

TEST_CASE("verify: json and csv shapes") {
    const auto j = run_cli({"verify", "11", "10", "55", "22", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out ==
          "{\"equal\":true,\"n1\":10,\"N1\":11,\"n2\":22,\"N2\":55,"
          "\"delta_num\":21,\"delta_den\":12100}\n");

    const auto jne = run_cli({"verify", "3", "2", "4", "3", "--format", "json"});
    CHECK(jne.code == 1);
    CHECK(jne.out ==
          "{\"equal\":false,\"n1\":2,\"N1\":3,\"n2\":3,\"N2\":4,"
          "\"delta1_num\":5,\"delta1_den\":36,\"delta2_num\":7,\"delta2_den\":144}\n");

    const auto c = run_cli({"verify", "11", "10", "55", "22", "--format", "csv"});
    CHECK(c.out == "equal,n1,N1,n2,N2,delta_num,delta_den\ntrue,10,11,22,55,21,12100\n");

    const auto cne = run_cli({"verify", "3", "2", "4", "3", "--format", "csv"});
    CHECK(cne.code == 1);
    CHECK(cne.out == "equal,n1,N1,n2,N2,delta_num,delta_den\nfalse,2,3,3,4,,\n");
}

TEST_CASE("verify: ionized upper levels") {
    const auto no_flag = run_cli({"verify", "inf", "20", "15", "12"});
    CHECK(no_flag.code == 2);

    const auto ok = run_cli({"verify", "inf", "20", "15", "12", "--allow-ionized"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "equal (delta = 1/400)\n");

    const auto two_inf = run_cli({"verify", "inf", "20", "inf", "20", "--allow-ionized"});
    CHECK(two_inf.code == 2);

    const auto inf_lower = run_cli({"verify", "20", "inf", "30", "15", "--allow-ionized"});
    CHECK(inf_lower.code == 2);

    const auto j = run_cli({"verify", "inf", "20", "15", "12", "--allow-ionized",
                            "--format", "json"});
    CHECK(j.out ==
          "{\"equal\":true,\"n1\":20,\"N1\":\"inf\",\"n2\":12,\"N2\":15,"
          "\"delta_num\":1,\"delta_den\":400}\n");
}

TEST_CASE("pairs: listing, csv header, empty-result exit") {
    const auto t = run_cli({"pairs", "--max-level", "35"});
    CHECK(t.code == 0);
    CHECK(t.out == "7->5 == 35->7 (delta = 24/1225)\n");

    const auto j = run_cli({"pairs", "--max-level", "35", "--format", "json"});
    CHECK(j.out == "{\"n1\":5,\"N1\":7,\"n2\":7,\"N2\":35,\"delta_num\":24,\"delta_den\":1225}\n");

    const auto c = run_cli({"pairs", "--max-level", "35", "--format", "csv"});
    CHECK(c.out == "n1,N1,n2,N2,delta_num,delta_den\n5,7,7,35,24,1225\n");

    const auto empty = run_cli({"pairs", "--max-level", "20"});
    CHECK(empty.code == 1);
    CHECK(empty.out.empty());
    CHECK(empty.err == "no results\n");

    const auto empty_csv = run_cli({"pairs", "--max-level", "20", "--format", "csv"});
    CHECK(empty_csv.code == 1);
    CHECK(empty_csv.out == "n1,N1,n2,N2,delta_num,delta_den\n");  // header always prints

    const auto bad = run_cli({"pairs", "--max-level", "1"});
    CHECK(bad.code == 2);
}

TEST_CASE("identities: listing and primitive filter") {
    const auto text = run_cli({"identities", "--max-entry", "8"});
    CHECK(text.code == 0);
    CHECK(text.out == "7^2+1^2=5^2+5^2=50\n8^2+1^2=7^2+4^2=65\n");

    const auto j = run_cli({"identities", "--max-entry", "8", "--format", "json"});
    CHECK(j.out ==
          "{\"side1\":[7,1],\"side2\":[5,5],\"norm\":50}\n"
          "{\"side1\":[8,1],\"side2\":[7,4],\"norm\":65}\n");

    const auto c = run_cli({"identities", "--max-entry", "8", "--format", "csv"});
    CHECK(c.out == "A,B,C,D,norm\n7,1,5,5,50\n8,1,7,4,65\n");

    const auto empty = run_cli({"identities", "--max-entry", "6"});
    CHECK(empty.code == 1);
    CHECK(empty.err == "no results\n");

    // the doubled copy of the smallest identity appears at 14 and is filtered
    const auto all14 = run_cli({"identities", "--max-entry", "14"});
    CHECK(all14.out.find("14^2+2^2=10^2+10^2=200") != std::string::npos);
    const auto prim14 = run_cli({"identities", "--max-entry", "14", "--primitive-only"});
    CHECK(prim14.code == 0);
    CHECK(prim14.out.find("14^2+2^2") == std::string::npos);
    CHECK(prim14.out.find("7^2+1^2=5^2+5^2=50") != std::string::npos);
}

TEST_CASE("cascades: listing and primitive filter") {
    const auto t = run_cli({"cascades", "--max-level", "150"});
    CHECK(t.code == 0);
    CHECK(t.out ==
          "5 -> 7 -> 35 (step = 24/1225) [primitive]\n"
          "10 -> 14 -> 70 (step = 6/1225)\n"
          "15 -> 21 -> 105 (step = 8/3675)\n"
          "20 -> 28 -> 140 (step = 3/2450)\n");

    const auto prim = run_cli({"cascades", "--max-level", "150", "--primitive-only"});
    CHECK(prim.out == "5 -> 7 -> 35 (step = 24/1225) [primitive]\n");

    const auto c = run_cli({"cascades", "--max-level", "40", "--format", "csv"});
    CHECK(c.out == "x0,x1,x2,delta_num,delta_den,primitive\n5,7,35,24,1225,true\n");

    const auto j = run_cli({"cascades", "--max-level", "40", "--format", "json"});
    CHECK(j.out ==
          "{\"x0\":5,\"x1\":7,\"x2\":35,\"delta_num\":24,\"delta_den\":1225,"
          "\"primitive\":true}\n");

    const auto empty = run_cli({"cascades", "--max-level", "30"});
    CHECK(empty.code == 1);
    CHECK(empty.err == "no results\n");
}

TEST_CASE("recover, cascade-params, compose wiring") {
    const auto rec = run_cli({"recover", "11", "2", "10", "5"});
    CHECK(rec.code == 0);
    CHECK(rec.out == "identity: 11^2+2^2=10^2+5^2=125\nparams: r=1 s=2 u=3 v=-4\n");

    const auto rec_csv = run_cli({"recover", "11", "2", "10", "5", "--format", "csv"});
    CHECK(rec_csv.out == "r,s,u,v\n1,2,3,-4\n");

    const auto rec_bad = run_cli({"recover", "1", "2", "3", "4"});  // not an identity
    CHECK(rec_bad.code == 2);

    const auto cp = run_cli({"cascade-params", "2", "1"});
    CHECK(cp.code == 0);
    CHECK(cp.out ==
          "triple: A=7 B=5 C=1\n"
          "cascade: 5 -> 7 -> 35 (step = 24/1225) [primitive]\n"
          "circle: (4-3i)/5\n");

    const auto cp_bad = run_cli({"cascade-params", "1", "2"});
    CHECK(cp_bad.code == 2);

    const auto co = run_cli({"compose", "4", "-3", "5", "4", "-3", "5"});
    CHECK(co.code == 0);
    CHECK(co.out ==
          "product: (7-24i)/25\n"
          "triple: A=31 B=25 C=17\n"
          "cascade: 425 -> 527 -> 775 (step = 336/173580625) [primitive]\n");

    const auto co_degenerate = run_cli({"compose", "4", "-3", "5", "4", "3", "5"});
    CHECK(co_degenerate.code == 0);
    CHECK(co_degenerate.out ==
          "product: (1+0i)/1\n"
          "triple: A=1 B=1 C=1 (degenerate)\n"
          "cascade: none (degenerate triple)\n");

    const auto co_bad = run_cli({"compose", "1", "1", "2", "4", "-3", "5"});
    CHECK(co_bad.code == 2);
}

TEST_CASE("no-four-term wiring") {
    const auto t = run_cli({"no-four-term", "--max-level", "100"});
    CHECK(t.code == 0);
    CHECK(t.out == "no four-term equal-step chains up to 100 (2 cascades checked)\n");

    const auto j = run_cli({"no-four-term", "--max-level", "100", "--format", "json"});
    CHECK(j.out == "{\"max_level\":100,\"cascades_checked\":2,\"four_term_found\":0}\n");

    const auto c = run_cli({"no-four-term", "--max-level", "100", "--format", "csv"});
    CHECK(c.out == "max_level,cascades_checked,four_term_found\n100,2,0\n");

    CHECK(run_cli({"no-four-term", "--max-level", "2"}).code == 2);
}

TEST_CASE("observe: output wiring and sanity of the decimals") {
    using equifreq::PhysicalConstants;
    using equifreq::Transition;
    using equifreq::photon_observables;
    namespace records = equifreq::records;

    const auto t = run_cli({"observe", "3", "2"});
    CHECK(t.code == 0);
    const Transition balmer(3, 2);
    const auto obs = photon_observables(balmer, PhysicalConstants{});
    CHECK(t.out == records::observe_text(balmer, obs) + "\n");
    CHECK(t.out.find("transition: 3->2\ndelta = 5/36\nwavelength = 6.56") == 0);
    CHECK(t.out.find(" m\nfrequency = 4.56") != std::string::npos);

    const auto j = run_cli({"observe", "3", "2", "--format", "json"});
    CHECK(j.out == records::observe_json(balmer, obs) + "\n");
    CHECK(j.out.find("\"n\":2,\"N\":3,\"delta_num\":5,\"delta_den\":36") != std::string::npos);

    CHECK(run_cli({"observe", "2", "3"}).code == 2);  // upper below lower
}

TEST_CASE("observe: rydberg source precedence") {
    using equifreq::PhysicalConstants;
    using equifreq::Transition;
    using equifreq::photon_observables;
    namespace records = equifreq::records;

    const auto expect = [](double rydberg) {
        const Transition t(3, 2);
        return std::string(records::kObserveCsvHeader) + "\n" +
               records::observe_csv_row(t, photon_observables(t, PhysicalConstants{rydberg})) +
               "\n";
    };

    unsetenv("EQUIFREQ_RYDBERG");
    const auto base = run_cli({"observe", "3", "2", "--format", "csv"});
    CHECK(base.out == expect(equifreq::kRydbergHydrogen));

    setenv("EQUIFREQ_RYDBERG", "2.0e7", 1);
    const auto env = run_cli({"observe", "3", "2", "--format", "csv"});
    CHECK(env.out == expect(2.0e7));

    const auto dir = std::filesystem::temp_directory_path();
    const auto cfg = dir / "equifreq_cli_test.cfg";
    {
        std::ofstream f(cfg);
        f << "# test configuration\n\nrydberg = 3.0e7  # inline comment\n";
    }
    const auto conf = run_cli({"observe", "3", "2", "--config", cfg.string(), "--format", "csv"});
    CHECK(conf.out == expect(3.0e7));  // config beats environment

    const auto flag = run_cli({"observe", "3", "2", "--config", cfg.string(), "--rydberg",
                               "4.0e7", "--format", "csv"});
    CHECK(flag.out == expect(4.0e7));  // flag beats config

    // malformed sources are hard errors
    setenv("EQUIFREQ_RYDBERG", "banana", 1);
    CHECK(run_cli({"observe", "3", "2"}).code == 2);
    setenv("EQUIFREQ_RYDBERG", "-5e6", 1);
    CHECK(run_cli({"observe", "3", "2"}).code == 2);
    unsetenv("EQUIFREQ_RYDBERG");

    {
        std::ofstream f(cfg);
        f << "unknown_key = 1\n";
    }
    CHECK(run_cli({"observe", "3", "2", "--config", cfg.string()}).code == 2);
    {
        std::ofstream f(cfg);
        f << "rydberg\n";  // no key=value shape
    }
    CHECK(run_cli({"observe", "3", "2", "--config", cfg.string()}).code == 2);
    CHECK(run_cli({"observe", "3", "2", "--config",
                   (dir / "equifreq_definitely_missing.cfg").string()}).code == 2);

    // a config with no rydberg key falls through to the default
    {
        std::ofstream f(cfg);
        f << "# nothing to see\n";
    }
    const auto fallthrough =
        run_cli({"observe", "3", "2", "--config", cfg.string(), "--format", "csv"});
    CHECK(fallthrough.out == expect(equifreq::kRydbergHydrogen));

    std::filesystem::remove(cfg);
    const auto after = run_cli({"observe", "3", "2", "--format", "csv"});
    CHECK(after.out == base.out);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli({}).code == 2);                  // a subcommand is required
    CHECK(run_cli({"frobnicate"}).code == 2);      // unknown subcommand
    CHECK(run_cli({"verify", "1", "2"}).code == 2);  // wrong arity
    CHECK(run_cli({"pairs"}).code == 2);           // missing required option
    CHECK(run_cli({"pairs", "--max-level", "12x"}).code == 2);
    CHECK(run_cli({"pairs", "--max-level", "40", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"pairs", "--max-level", "40", "--bogus"}).code == 2);

    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    CHECK(help.out.find("pairs") != std::string::npos);
    CHECK(help.out.find("observe") != std::string::npos);
    CHECK(help.err.empty());

    const auto subhelp = run_cli({"verify", "--help"});
    CHECK(subhelp.code == 0);
    CHECK(subhelp.out.find("--allow-ionized") != std::string::npos);
}
