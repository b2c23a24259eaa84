#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "vsl/cli.hpp"

using namespace vsl;

namespace {

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path =
      (std::filesystem::temp_directory_path() / ("vslink_cli_" + name)).string();
  std::ofstream out(path);
  out << content;
  return path;
}

int run(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("matrix and rho commands print the published matrices") {
  std::string out;
  CHECK(run({"matrix", "n=2 t1"}, &out) == 0);
  CHECK(out == "[[s, 1-s], [1+s, -s]]\n");
  CHECK(run({"matrix", "n=3"}, &out) == 0);
  CHECK(out == "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]\n");
  CHECK(run({"matrix", "t1 s1"}, &out) == 0);  // n inferred from the letters
  CHECK(out == "[[1+s, -s], [s, 1-s]]\n");
  CHECK(run({"matrix", "", "--n", "3"}, &out) == 0);
  CHECK(out == "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]\n");
  CHECK(run({"rho", "t1"}, &out) == 0);
  CHECK(out == "[[s, 1+s], [1-s, -s]]\n");

  const auto d = from_braid_word(parse_virtual_word("n=2 t1 s1"));
  const std::string path = write_file("diagram.json", to_json(d).dump());
  std::string from_file;
  CHECK(run({"matrix", path}, &from_file) == 0);
  CHECK(from_file == "[[1+s, -s], [s, 1-s]]\n");
  CHECK(run({"linking", path}, &from_file) == 0);
  std::string from_word;
  CHECK(run({"linking", "n=2 t1 s1"}, &from_word) == 0);
  CHECK(from_file == from_word);
}

TEST_CASE("burau, permrep, and linking commands") {
  std::string out;
  CHECK(run({"burau", "n=2 s1"}, &out) == 0);
  CHECK(out == "[[1-t^-1, t^-1], [1, 0]]\n");
  CHECK(run({"permrep", "n=3 t1 t2"}, &out) == 0);
  CHECK(out == "(2, 3, 1)\n");
  std::string err;
  CHECK(run({"permrep", "n=2 t1"}, &out, &err) == 1);  // computation rejects n != 3
  CHECK(err.find("3 strands") != std::string::npos);

  CHECK(run({"linking", "n=2 t1 s1"}, &out) == 0);
  CHECK(out == "lk = 1\nlk_v = 1\na = [1, 1]\nvirtual_between = [1, 1]\n");
  CHECK(run({"linking", "n=3 t1 t2"}, &out) == 0);
  CHECK(out.find("lk = n/a") != std::string::npos);  // pairwise numbers are 2-strand only
}

TEST_CASE("json documents round trip for every type") {
  const auto open = from_braid_word(parse_virtual_word("n=3 s1 t2 S1 t1"));
  CHECK(same_diagram(string_link_from_json(to_json(open)), open));

  const auto flat = closure(parse_flat_word("n=2 f1 t1"));
  CHECK(same_diagram(flat_link_from_json(to_json(flat)), flat));

  const FiniteVfb S = linear_vfb(3);
  const FiniteVfb back = vfb_from_json(to_json(S));
  CHECK(back.order == S.order);
  CHECK(back.star == S.star);
  CHECK(back.circ == S.circ);

  Cochain2 phi;
  phi.coeff = Coefficients::modular(5);
  phi.table = {{Int(0), Int(9)}, {Int(-1), Int(0)}};
  const Cochain2 reduced = cochain2_from_json(to_json(phi));
  CHECK(reduced.coeff == Coefficients::modular(5));
  CHECK(reduced.table == std::vector<std::vector<Int>>{{Int(0), Int(4)}, {Int(4), Int(0)}});
}

TEST_CASE("json schema violations are rejected with pointed messages") {
  const auto d = from_braid_word(parse_virtual_word("n=2 t1"));
  Json good = to_json(d);

  Json no_pi = good;
  no_pi.erase("pi");
  CHECK_THROWS_WITH_AS(string_link_from_json(no_pi),
                       "string link diagram is missing field \"pi\"", std::invalid_argument);

  Json extra = good;
  extra["Pi"] = Json::array();
  CHECK_THROWS_WITH_AS(string_link_from_json(extra),
                       "string link diagram has unexpected field \"Pi\"", std::invalid_argument);

  Json dangling = good;
  dangling["strands"][1] = Json::array();  // crossing 0 now appears only once
  CHECK_THROWS_WITH_AS(string_link_from_json(dangling),
                       "string link diagram: crossing 0 must appear in exactly two passages, "
                       "found 1",
                       std::invalid_argument);

  Json bad_kind = good;
  bad_kind["crossings"][0]["kind"] = "wiggly";
  CHECK_THROWS_AS(string_link_from_json(bad_kind), std::invalid_argument);

  Json bad_pi = good;
  bad_pi["pi"] = std::vector<int>{1, 1};
  CHECK_THROWS_AS(string_link_from_json(bad_pi), std::invalid_argument);

  Json vfb = to_json(trivial_vfb(2));
  vfb["star"][0] = std::vector<int>{0};
  CHECK_THROWS_AS(vfb_from_json(vfb), std::invalid_argument);

  Cochain2 phi;
  phi.coeff = Coefficients::integers();
  phi.table = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  Json ragged = to_json(phi);
  ragged["table"][1] = std::vector<int>{4};
  CHECK_THROWS_AS(cochain2_from_json(ragged), std::invalid_argument);
  Json bad_coeff = to_json(phi);
  bad_coeff["coeff"] = "Q";
  CHECK_THROWS_AS(cochain2_from_json(bad_coeff), std::invalid_argument);
}

TEST_CASE("vfb make emits the built-in structures and check validates them") {
  std::string out;
  CHECK(run({"vfb", "make", "trivial:2"}, &out) == 0);
  FiniteVfb made = vfb_from_json(Json::parse(out));
  CHECK(made.star == trivial_vfb(2).star);
  CHECK(made.circ == trivial_vfb(2).circ);

  CHECK(run({"vfb", "make", "constant:1,0"}, &out) == 0);
  made = vfb_from_json(Json::parse(out));
  CHECK(made.star == constant_action_vfb({1, 0}).star);

  CHECK(run({"vfb", "make", "linear:3"}, &out) == 0);
  made = vfb_from_json(Json::parse(out));
  CHECK(made.circ == linear_vfb(3).circ);

  std::string err;
  CHECK(run({"vfb", "make", "linear"}, &out, &err) == 2);
  CHECK(err.find("no ':'") != std::string::npos);
  CHECK(run({"vfb", "make", "moebius:4"}, &out, &err) == 2);
  CHECK(run({"vfb", "make", "constant:0,0"}, &out, &err) == 2);  // not a permutation

  const std::string good = write_file("linear2.json", to_json(linear_vfb(2)).dump());
  CHECK(run({"vfb", "check", good}, &out) == 0);
  CHECK(out == "ok: virtual flat biquandle of order 4\n");

  const std::string broken = write_file(
      "broken.json", R"({"order":2,"star":[[0,1],[1,0]],"circ":[[0,0],[1,1]]})");
  CHECK(run({"vfb", "check", broken}, &out) == 1);
  CHECK(out.find("3a:") != std::string::npos);  // inverse-pair axiom named in the report
}

TEST_CASE("colorings command counts and optionally lists") {
  const std::string trivial2 = write_file("trivial2.json", to_json(trivial_vfb(2)).dump());
  const std::string swap = write_file("swap.json", to_json(constant_action_vfb({1, 0})).dump());

  std::string out;
  CHECK(run({"colorings", "n=2 f1 t1", "--vfb", trivial2}, &out) == 0);
  CHECK(out == "4\n");
  CHECK(run({"colorings", "n=2 f1 t1", "--vfb", trivial2, "--list"}, &out) == 0);
  CHECK(out == "4\n0 0\n0 1\n1 0\n1 1\n");
  CHECK(run({"colorings", "n=2 f1 t1", "--vfb", swap}, &out) == 0);
  CHECK(out == "0\n");  // the flat Hopf link has no swap colorings
  CHECK(run({"colorings", "n=2", "--vfb", swap}, &out) == 0);
  CHECK(out == "4\n");  // but the trivial two-component link has 4
}

TEST_CASE("homology command prints the one-element ladder") {
  const std::string trivial1 = write_file("trivial1.json", to_json(trivial_vfb(1)).dump());
  std::string out;
  CHECK(run({"homology", "--vfb", trivial1, "--complex", "vf", "--max-degree", "3"}, &out) == 0);
  CHECK(out == "H_0 = 0\nH_1 = Z\nH_2 = Z/2\nH_3 = Z/2\n");
  CHECK(run({"homology", "--vfb", trivial1, "--complex", "sf", "--max-degree", "3"}, &out) == 0);
  CHECK(out == "H_0 = 0\nH_1 = Z\nH_2 = Z\nH_3 = Z\n");
  CHECK(run({"homology", "--vfb", trivial1, "--complex", "vf", "--max-degree", "3", "--coeff",
             "Z3"},
            &out) == 0);
  CHECK(out == "H_0 = 0\nH_1 = Z/3\nH_2 = 0\nH_3 = 0\n");

  std::string err;
  CHECK(run({"homology", "--vfb", trivial1, "--complex", "weird"}, &out, &err) == 2);
  CHECK(run({"homology", "--vfb", trivial1, "--complex", "vf", "--coeff", "Q"}, &out, &err) == 2);
}

TEST_CASE("cocycles command emits documents statesum can consume") {
  const std::string trivial2 = write_file("trivial2.json", to_json(trivial_vfb(2)).dump());
  std::string out;
  CHECK(run({"cocycles", "--vfb", trivial2, "--coeff", "Z"}, &out) == 0);
  std::istringstream lines(out);
  std::string header, doc;
  std::getline(lines, header);
  CHECK(header == "1 generator(s) over Z");
  std::getline(lines, doc);
  const Cochain2 phi = cochain2_from_json(Json::parse(doc));
  CHECK(is_state_sum_cocycle(trivial_vfb(2), phi).empty());

  const std::string phi_path = write_file("phi.json", doc);
  std::string value;
  CHECK(run({"statesum", "n=2 f1 t1", "--vfb", trivial2, "--cocycle", phi_path}, &value) == 0);
  CHECK(value == state_sum(closure(parse_flat_word("n=2 f1 t1")), trivial_vfb(2), phi)
                         .value.to_string() +
                     "\n");
}

TEST_CASE("statesum command reproduces the published two-component values") {
  const std::string trivial2 = write_file("trivial2.json", to_json(trivial_vfb(2)).dump());
  Cochain2 phi;
  phi.coeff = Coefficients::integers();
  phi.table = {{Int(0), Int(1)}, {Int(-1), Int(0)}};
  const std::string phi_path = write_file("antisym.json", to_json(phi).dump());

  std::string out;
  CHECK(run({"statesum", "n=2 f1 t1", "--vfb", trivial2, "--cocycle", phi_path}, &out) == 0);
  CHECK(out == "1*[-1] + 2*[0] + 1*[1]\n");
  CHECK(run({"statesum", "n=2", "--vfb", trivial2, "--cocycle", phi_path}, &out) == 0);
  CHECK(out == "4*[0]\n");

  const std::string sym = write_file("sym.json", R"({"coeff":"Z","table":[[0,1],[1,0]]})");
  std::string err;
  CHECK(run({"statesum", "n=2 f1 t1", "--vfb", trivial2, "--cocycle", sym}, &out, &err) == 1);
  CHECK(err.find("not a state-sum cocycle") != std::string::npos);
  const std::string torsion = write_file("z2.json", R"({"coeff":"Z2","table":[[0,1],[1,0]]})");
  CHECK(run({"statesum", "n=2 f1 t1", "--vfb", trivial2, "--cocycle", torsion}, &out, &err) == 1);
  CHECK(err.find("2-torsion") != std::string::npos);
}

TEST_CASE("fuzz command passes every target deterministically") {
  std::string first, second;
  CHECK(run({"fuzz", "--target", "matrix", "--trials", "30", "--seed", "5"}, &first) == 0);
  CHECK(first == "ok: 30 trials (target matrix, seed 5, steps 12)\n");
  CHECK(run({"fuzz", "--target", "matrix", "--trials", "30", "--seed", "5"}, &second) == 0);
  CHECK(first == second);

  CHECK(run({"fuzz", "--target", "vc", "--trials", "20", "--seed", "3"}, &first) == 0);
  CHECK(first == "ok: 20 trials (target vc, seed 3, steps 12)\n");
  CHECK(run({"fuzz", "--target", "statesum", "--trials", "15", "--seed", "9", "--steps", "8"},
            &first) == 0);
  CHECK(first == "ok: 15 trials (target statesum, seed 9, steps 8)\n");

  std::string out, err;
  CHECK(run({"fuzz", "--target", "matrix", "--trials", "5"}, &out, &err) == 2);  // seed mandatory
  CHECK(run({"fuzz", "--target", "nothing", "--trials", "5", "--seed", "1"}, &out, &err) == 2);
}

TEST_CASE("usage and parse errors exit with code 2") {
  std::string out, err;
  CHECK(run({}, &out, &err) == 2);
  CHECK(run({"frobnicate"}, &out, &err) == 2);
  CHECK(run({"matrix"}, &out, &err) == 2);  // missing input
  CHECK(run({"matrix", "n=2 x1"}, &out, &err) == 2);
  CHECK(err.find("byte") != std::string::npos);  // parser reports the offending position
  CHECK(run({"matrix", "/nonexistent/diagram.json"}, &out, &err) == 2);
  CHECK(err.find("cannot open") != std::string::npos);
  CHECK(run({"colorings", "n=2 f1", "--vfb", "/nonexistent/vfb.json"}, &out, &err) == 2);

  std::string help;
  CHECK(run({"--help"}, &help) == 0);
  CHECK(help.find("statesum") != std::string::npos);
}
