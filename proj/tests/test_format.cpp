#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsa/gallery.hpp"
#include "hsa/report.hpp"

using namespace hsa;

TEST_CASE("an empty abelian file round-trips") {
  std::string text = "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\n";
  StructureFile f = parse_structure(text);
  CHECK(f.kind == Kind::LieN);
  CHECK(f.lie().n() == 2);
  std::string out = serialize_structure(f);
  CHECK(parse_structure(out) == f);
  CHECK(serialize_structure(parse_structure(out)) == out);
}

TEST_CASE("bracket entries parse to one canonical entry") {
  std::string text =
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\n"
      "bracket l2 (0,0) (0,1) -> (0,0) -1/2\n";
  StructureFile f = parse_structure(text);
  BasisElement t[2] = {{0, 0}, {0, 1}};
  CHECK(f.lie().l(2).eval_basis(t).coeff({0, 0}) == rat(-1, 2));
  // the reversed entry with the matching sign is a consistent duplicate
  std::string dup = text + "bracket l2 (0,1) (0,0) -> (0,0) 1/2\n";
  CHECK(parse_structure(dup) == f);
  // with a non-matching sign it is rejected
  std::string bad = text + "bracket l2 (0,1) (0,0) -> (0,0) -1/2\n";
  CHECK_THROWS_AS(parse_structure(bad), parse_error);
  try {
    parse_structure(bad);
  } catch (const parse_error& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("line 6") == 0);
  }
}

TEST_CASE("round-trip identity on every gallery file") {
  for (const auto& name : gallery_names()) {
    INFO(name);
    StructureFile f = gallery_structure(name);
    std::string text = serialize_structure(f);
    StructureFile g = parse_structure(text);
    CHECK(g == f);
    CHECK(serialize_structure(g) == text);
  }
}

TEST_CASE("malformed files give line-numbered diagnostics") {
  const char* corpus[] = {
      // 1: unknown kind
      "kind lie-9-algebra\n",
      // 2: missing kind entirely
      "n 2\ndim 0 1\n",
      // 3: bad degree
      "kind lie-n-algebra\nn 2\ndim -3 1\n",
      // 4: malformed basis token
      "kind lie-n-algebra\nn 2\ndim 0 1\ndim -1 1\nbracket l2 (0;0) (0,1) -> (0,0) 1\n",
      // 5: index out of range
      "kind lie-n-algebra\nn 2\ndim 0 1\ndim -1 1\nbracket l2 (0,0) (0,5) -> (0,0) 1\n",
      // 6: bracket beyond n+1
      "kind lie-n-algebra\nn 1\ndim 0 2\nbracket l3 (0,0) (0,1) (0,0) -> (0,0) 1\n",
      // 7: arity mismatch
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\nbracket l2 (0,0) -> (0,0) 1\n",
      // 8: malformed rational
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\nbracket l2 (0,0) (0,1) -> (0,0) 1.5\n",
      // 9: repeated even-degree element vanishes identically
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\nbracket l2 (0,0) (0,0) -> (0,0) 1\n",
      // 10: conflicting duplicate
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\n"
      "bracket l2 (0,0) (0,1) -> (0,0) 1\nbracket l2 (0,0) (0,1) -> (0,0) 2\n",
      // 11: output degree inconsistent with the bracket degree
      "kind lie-n-algebra\nn 2\ndim 0 2\ndim -1 1\nbracket l2 (0,0) (0,1) -> (-1,0) 1\n",
      // 12: complex maps that do not compose to zero
      "kind complex-3\ndim 0 1\ndim -1 1\ndim -2 1\n"
      "map pi0 (-1,0) -> (0,0) 1\nmap pi1 (-2,0) -> (-1,0) 1\n",
      // 13: duplicate kind line
      "kind lie-n-algebra\nkind lie-n-algebra\nn 1\ndim 0 1\n",
      // 14: unknown opcode
      "kind lwx-2\ndim 0 1\ndim -1 1\npairing S (0,0) (-1,0) 1\nfrobnicate 12\n",
      // 15: degenerate LWX pairing
      "kind lwx-2\ndim 0 1\ndim -1 1\n",
  };
  int n = 0;
  for (const char* text : corpus) {
    ++n;
    INFO("corpus case " << n);
    CHECK_THROWS_AS(parse_structure(text), parse_error);
    try {
      parse_structure(text);
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).rfind("line ", 0) == 0);
      CHECK(e.line() >= 1);
    }
  }
  CHECK(n >= 10);
}

TEST_CASE("morphism files") {
  StructureFile f = gallery_structure("morphism-adjoint-strict2");
  std::string text = serialize_structure(f);
  StructureFile g = parse_structure(text);
  CHECK(g == f);
  // checking needs the bound context
  CHECK_THROWS_AS(check_structure(f), input_error);
  LieNAlgebra src = make_strict2();
  StructureFile c_file = gallery_structure("complex-strict2");
    const auto& c = std::get<ThreeTermComplex>(c_file.data);
  CheckReport r = check_superconnection_file(std::get<MorphismFile>(f.data), src, c);
  CHECK(r.pass);
}

TEST_CASE("elwx and bialgebra files round-trip and check") {
  StructureFile f = gallery_structure("elwx-string-so3");
  std::string text = serialize_structure(f);
  CHECK(parse_structure(text) == f);
  CHECK(check_structure(parse_structure(text)).pass);
  StructureFile b = gallery_structure("bialgebra-string-so3-trivial");
  CHECK(parse_structure(serialize_structure(b)) == b);
  CHECK(check_structure(b).pass);
}

TEST_CASE("build verbs run from parsed structures") {
  StructureFile so3 = gallery_structure("so3");
  StructureFile quad = build_structure("quad-lie2", so3);
  CHECK(quad.kind == Kind::QuadLie2);
  CHECK(check_structure(quad).pass);
  StructureFile hs = build_structure("higher-string", quad);
  CHECK(check_structure(hs).pass);
  StructureFile dbl = build_structure("double", hs);
  CHECK(check_structure(dbl).pass);
  StructureFile elwx = build_structure("elwx", hs);
  StructureFile derived = build_structure("derived-lie3", elwx);
  CHECK(serialize_structure(dbl) == serialize_structure(derived));
  StructureFile s2 = build_structure("string-lie2", so3);
  CHECK(check_structure(s2).pass);
  StructureFile lwx = build_structure("std-lwx", s2);
  CHECK(check_structure(lwx).pass);
  CHECK_THROWS_AS(build_structure("double", so3), input_error);
  CHECK_THROWS_AS(build_structure("nonsense", so3), input_error);
}

TEST_CASE("reports render deterministically") {
  StructureFile so3 = gallery_structure("so3");
  CheckReport r = check_structure(so3);
  CHECK(report_to_text(r) == "pass\n");
  std::string j = report_to_json(r, 0.0);
  CHECK(j.find("\"pass\": true") != std::string::npos);
}
