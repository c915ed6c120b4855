#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msn/io.hpp"
#include "msn/msn.hpp"
#include "msn/synthgen.hpp"
#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"

using msn::AccountRef;
using msn::build_msn;
using msn::DegreeMode;
using msn::load_manifest;
using msn::LowerRule;
using msn::MultiStratumNetwork;
using msn::ParseError;
using msn_test::slurp;
using msn_test::TempDir;

namespace {

/// Three-actor pillar spread over two platforms, written by hand.
std::filesystem::path write_pillar_files(const TempDir& dir) {
    dir.write("friends.tsv", "alice\tbob\nbob\tcarol\ncarol\talice\n");
    dir.write("follows.tsv", "a_f\tb_f\nb_f\tc_f\nc_f\ta_f\n");
    dir.write("identity.tsv",
              "Alice\tfriends\talice\n"
              "Alice\tfollows\ta_f\n"
              "Bob\tfriends\tbob\n"
              "Bob\tfollows\tb_f\n"
              "Carol\tfriends\tcarol\n"
              "Carol\tfollows\tc_f\n");
    return dir.write("manifest.msn",
                     "# hand-written fixture\n"
                     "stratum = friends friends.tsv\n"
                     "stratum = follows follows.tsv\n"
                     "identity_map = identity.tsv\n");
}

}  // namespace

TEST_SUITE("io_format") {

TEST_CASE("a hand-written manifest loads into a three-actor pillar") {
    TempDir dir;
    MultiStratumNetwork net = load_manifest(write_pillar_files(dir));
    CHECK(net.stratum_count() == 2);
    CHECK(net.require_stratum("friends") == 0);
    CHECK(net.require_stratum("follows") == 1);
    CHECK(net.account_count() == 6);
    CHECK(net.actors().size() == 3);
    CHECK(net.total_arc_count() == 6);
    CHECK(is_pillar(net));
    CHECK(net.actors().find("Alice").has_value());
    CHECK(net.actors().find("Bob").has_value());
    CHECK(net.actors().find("Carol").has_value());
}

TEST_CASE("comments, blank lines and CRLF endings are tolerated") {
    TempDir dir;
    dir.write("s.tsv", "# header comment\r\n\r\nu\tv\r\n   \nv\tw\n");
    std::filesystem::path manifest = dir.write(
        "m.msn", "# generated\n\nstratum = S s.tsv\n\ndirected = true\n");
    MultiStratumNetwork net = load_manifest(manifest);
    CHECK(net.account_count() == 3);
    CHECK(net.total_arc_count() == 2);
}

TEST_CASE("an empty manifest loads the empty network") {
    TempDir dir;
    std::filesystem::path manifest = dir.write("m.msn", "# nothing to see\n");
    MultiStratumNetwork net = load_manifest(manifest);
    CHECK(net.stratum_count() == 0);
    CHECK(net.account_count() == 0);
}

TEST_CASE("edge lines must have exactly two fields") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\nu\tv\tw\n");
    std::filesystem::path manifest = dir.write("m.msn", "stratum = S s.tsv\n");
    try {
        load_manifest(manifest);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.file().find("s.tsv") != std::string::npos);
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("a missing referenced file fails at the manifest line") {
    TempDir dir;
    std::filesystem::path manifest =
        dir.write("m.msn", "# comment\nstratum = S nowhere.tsv\n");
    try {
        load_manifest(manifest);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.file() == manifest.string());
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("not found") != std::string::npos);
    }
    CHECK_THROWS_AS(load_manifest(dir.path() / "missing.msn"), ParseError);
}

TEST_CASE("manifest grammar violations name their line") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\n");

    auto expect_line = [&](const std::string& text, std::size_t line) {
        std::filesystem::path manifest = dir.write("m.msn", text);
        try {
            load_manifest(manifest);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("stratum S s.tsv\n", 1);                                // no '='
    expect_line("stratum = S\n", 1);                                    // no path
    expect_line("stratum = S s.tsv\nstratum = S s.tsv\n", 2);           // duplicate name
    expect_line("stratum = S s.tsv\nfrobnicate = yes\n", 2);            // unknown key
    expect_line("stratum = S s.tsv\ndirected = maybe\n", 2);            // bad bool
    expect_line("identity_map = i.tsv\nidentity_map = i.tsv\n", 2);     // duplicate key
}

TEST_CASE("identity map rejects malformed rows") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\n");
    dir.write("t.tsv", "x\ty\n");
    std::string manifest_text =
        "stratum = S s.tsv\nstratum = T t.tsv\nidentity_map = i.tsv\n";

    auto expect_identity_error = [&](const std::string& identity, std::size_t line,
                                     const std::string& needle) {
        dir.write("i.tsv", identity);
        std::filesystem::path manifest = dir.write("m.msn", manifest_text);
        try {
            load_manifest(manifest);
            FAIL("expected ParseError for: " << identity);
        } catch (const ParseError& e) {
            CHECK(e.file().find("i.tsv") != std::string::npos);
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_identity_error("P\tS\n", 1, "expected 3");
    expect_identity_error("P\tS\tu\nP\tQ\tu\n", 2, "unknown stratum 'Q'");
    expect_identity_error("P\tS\tu\nR\tS\tu\n", 2, "listed twice");
    expect_identity_error("P\tS\tu\nP\tS\tv\n", 1, "cross-stratum identity cannot link them");
}

TEST_CASE("identity-only accounts are kept as isolated vertices") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\n");
    dir.write("t.tsv", "x\ty\n");
    dir.write("i.tsv", "Ghost\tS\tg\nGhost\tT\tg2\n");
    std::filesystem::path manifest = dir.write(
        "m.msn", "stratum = S s.tsv\nstratum = T t.tsv\nidentity_map = i.tsv\n");
    MultiStratumNetwork net = load_manifest(manifest);
    CHECK(net.account_count() == 6);
    CHECK(net.find_account(AccountRef{"S", "g"}).has_value());
    msn::ActorIndex ghost = net.actors().require("Ghost");
    CHECK(net.actors().members(ghost).size() == 2);
}

TEST_CASE("undirected manifests double every edge line") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\n");
    std::filesystem::path manifest =
        dir.write("m.msn", "stratum = S s.tsv\ndirected = false\n");
    MultiStratumNetwork net = load_manifest(manifest);
    CHECK(net.total_arc_count() == 2);
}

TEST_CASE("duplicate arcs respect the dedupe switches") {
    TempDir dir;
    dir.write("s.tsv", "u\tv\nu\tv\n");

    std::filesystem::path plain = dir.write("m.msn", "stratum = S s.tsv\n");
    CHECK_THROWS_AS(load_manifest(plain), msn::DuplicateArcError);

    SUBCASE("via the manifest flag") {
        std::filesystem::path flagged =
            dir.write("m2.msn", "stratum = S s.tsv\ndeduplicate = true\n");
        std::vector<std::string> warnings;
        MultiStratumNetwork net = load_manifest(flagged, {}, &warnings);
        CHECK(net.total_arc_count() == 1);
        CHECK(warnings.size() == 1);
    }
    SUBCASE("via load options") {
        MultiStratumNetwork net = load_manifest(plain, {.dedupe_arcs = true});
        CHECK(net.total_arc_count() == 1);
    }
}

TEST_CASE("export then reload is the identity on every fixture") {
    std::vector<MultiStratumNetwork> nets;
    nets.push_back(msn_test::degree_left_fixture());
    nets.push_back(msn_test::degree_right_fixture());
    nets.push_back(msn_test::toy_chain_fixture());
    nets.push_back(msn_test::reachability_fixture());
    nets.push_back(msn_test::bridge_fixture());
    nets.push_back(msn_test::pillar_triangle_fixture());
    for (const MultiStratumNetwork& net : nets) {
        TempDir dir;
        std::filesystem::path manifest = export_msn(net, dir.path() / "out");
        MultiStratumNetwork reloaded = load_manifest(manifest);
        CHECK(reloaded == net);
    }
}

TEST_CASE("export then reload is the identity on random networks") {
    std::mt19937_64 rng(987);
    for (int round = 0; round < 25; ++round) {
        msn_test::RandomMsn r = msn_test::random_msn(rng);
        TempDir dir;
        MultiStratumNetwork reloaded = load_manifest(export_msn(r.net, dir.path()));
        CHECK(reloaded == r.net);

        // Display names survive the trip too: the export keys identities
        // by them and the loader turns them back into hints.
        for (msn::ActorIndex a = 0; a < r.net.actors().size(); ++a) {
            CHECK(reloaded.actors().find(r.net.actors().name(a)).has_value());
        }
    }
}

TEST_CASE("repeated exports are byte-identical") {
    msn::PillarGenSpec spec;
    spec.n = 20;
    spec.k = 2;
    spec.base_p = 0.2;
    spec.theta = 0.5;
    spec.extra_q = 0.01;
    spec.seed = 42;
    MultiStratumNetwork net = generate_pillar(spec);

    TempDir dir;
    export_msn(net, dir.path() / "one", {"take one"});
    export_msn(net, dir.path() / "two", {"take one"});
    for (const char* name : {"manifest.msn", "identity.tsv", "S1.edges.tsv", "S2.edges.tsv"}) {
        CAPTURE(name);
        CHECK(slurp(dir.path() / "one" / name) == slurp(dir.path() / "two" / name));
    }
}

TEST_CASE("exported manifests carry provenance comments and directedness") {
    TempDir dir;
    std::filesystem::path manifest =
        export_msn(msn_test::toy_chain_fixture(), dir.path(), {"line one", "line\ntwo"});
    std::string text = slurp(manifest);
    CHECK(text.find("# line one\n") != std::string::npos);
    CHECK(text.find("# line two\n") != std::string::npos);  // newline flattened
    CHECK(text.find("stratum = S1 S1.edges.tsv\n") != std::string::npos);
    CHECK(text.find("stratum = S2 S2.edges.tsv\n") != std::string::npos);
    CHECK(text.find("identity_map = identity.tsv\n") != std::string::npos);
    CHECK(text.find("directed = true\n") != std::string::npos);
}

TEST_CASE("every account appears in the exported identity map") {
    TempDir dir;
    MultiStratumNetwork net = msn_test::degree_right_fixture();
    export_msn(net, dir.path());
    std::string identity = slurp(dir.path() / "identity.tsv");
    std::size_t lines = std::count(identity.begin(), identity.end(), '\n');
    CHECK(lines == net.account_count());
    CHECK(identity.find("C\tN1\tc\n") != std::string::npos);
    CHECK(identity.find("C\tN2\tc2\n") != std::string::npos);
}

TEST_CASE("awkward stratum names are sanitized without collisions") {
    msn::MsnInput input;
    input.strata.push_back(msn::StratumSpec{"a/b", {"u"}, {}});
    CHECK_THROWS_AS(build_msn(input), msn::ValidationError);

    // Names differing only in a sanitized character must not share a file.
    input.strata.clear();
    input.strata.push_back(msn::StratumSpec{"x+y", {"u"}, {}});
    input.strata.push_back(msn::StratumSpec{"x-y", {"u"}, {}});
    input.strata.push_back(msn::StratumSpec{"x?y", {"u"}, {}});
    MultiStratumNetwork net = build_msn(input);
    TempDir dir;
    std::filesystem::path manifest = export_msn(net, dir.path());
    MultiStratumNetwork reloaded = load_manifest(manifest);
    CHECK(reloaded == net);
}

TEST_CASE("empty networks export a manifest with zero strata") {
    TempDir dir;
    std::filesystem::path manifest = export_msn(build_msn({}), dir.path());
    MultiStratumNetwork reloaded = load_manifest(manifest);
    CHECK(reloaded.stratum_count() == 0);
    CHECK(reloaded.account_count() == 0);
}

TEST_CASE("scatter CSV pins its header and pairs ranks by actor") {
    msn::PillarGenSpec spec;
    spec.n = 3;
    spec.k = 2;
    spec.base_p = 0.9;
    spec.theta = 1.0;
    spec.seed = 5;
    MultiStratumNetwork net = generate_pillar(spec);

    std::ostringstream out;
    export_scatter_csv(net, 0, 1, DegreeMode::All, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "actor_id,rank_s1,rank_s2");

    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // theta 1 copies the stratum, so the two rank columns agree
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 + 1);
        CHECK(line.substr(c1 + 1, c2 - c1 - 1) == line.substr(c2 + 1));
    }
    CHECK(rows == 3);
}

TEST_CASE("scatter CSV of disjoint strata is just the header") {
    msn::MsnInput input;
    input.strata.push_back(msn::StratumSpec{"S", {"u"}, {}});
    input.strata.push_back(msn::StratumSpec{"T", {"x"}, {}});
    MultiStratumNetwork net = build_msn(input);
    std::ostringstream out;
    export_scatter_csv(net, 0, 1, DegreeMode::All, out);
    CHECK(out.str() == "actor_id,rank_s1,rank_s2\n");
}

TEST_CASE("bounds CSV reproduces the worked interval row") {
    MultiStratumNetwork net = msn_test::degree_right_fixture();
    std::ostringstream out;
    export_bounds_csv(net, DegreeMode::All, LowerRule::Max, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "actor_id,lower,actual,upper,rel_uncertainty");

    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 5);
    // single-stratum actors first (actual 1), the hub's interval row last
    CHECK(rows.back() == "C,2,4,4,0.5");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i].back() == '0');

    int prev = -1;
    for (const std::string& row : rows) {
        std::size_t c1 = row.find(',');
        std::size_t c2 = row.find(',', c1 + 1);
        std::size_t c3 = row.find(',', c2 + 1);
        int actual = std::stoi(row.substr(c2 + 1, c3 - c2 - 1));
        CHECK(actual >= prev);
        prev = actual;
    }
}

TEST_CASE("single-stratum bounds rows are degenerate intervals") {
    msn::MsnInput input;
    input.strata.push_back(msn::StratumSpec{
        "S", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}});
    MultiStratumNetwork net = build_msn(input);
    std::ostringstream out;
    export_bounds_csv(net, DegreeMode::All, LowerRule::Max, out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 + 1);
        std::size_t c3 = line.find(',', c2 + 1);
        std::size_t c4 = line.find(',', c3 + 1);
        std::string lower = line.substr(c1 + 1, c2 - c1 - 1);
        std::string actual = line.substr(c2 + 1, c3 - c2 - 1);
        std::string upper = line.substr(c3 + 1, c4 - c3 - 1);
        CHECK(lower == actual);
        CHECK(actual == upper);
        CHECK(line.substr(c4 + 1) == "0");
    }
}

TEST_CASE("CSV fields with commas or quotes are quoted") {
    msn::MsnInput input;
    input.strata.push_back(msn::StratumSpec{"S", {"u", "v"}, {{"u", "v"}}});
    input.strata.push_back(msn::StratumSpec{"T", {"u2", "v2"}, {{"u2", "v2"}}});
    input.identity_pairs = {
        {AccountRef{"S", "u"}, AccountRef{"T", "u2"}},
        {AccountRef{"S", "v"}, AccountRef{"T", "v2"}},
    };
    input.actor_hints = {{AccountRef{"S", "u"}, "last, first"},
                         {AccountRef{"S", "v"}, "say \"hi\""}};
    MultiStratumNetwork net = build_msn(input);

    std::ostringstream out;
    export_scatter_csv(net, 0, 1, DegreeMode::All, out);
    CHECK(out.str().find("\"last, first\",") != std::string::npos);
    CHECK(out.str().find("\"say \"\"hi\"\"\",") != std::string::npos);
}

TEST_CASE("rank and uncertainty columns print shortest round-trip decimals") {
    MultiStratumNetwork net = msn_test::degree_left_fixture();
    std::ostringstream out;
    export_bounds_csv(net, DegreeMode::All, LowerRule::Max, out);
    // C row: lower 3, actual 3, upper 6, uncertainty exactly 0.5
    CHECK(out.str().find("C,3,3,6,0.5\n") != std::string::npos);
}

}  // TEST_SUITE
