#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "lbw/generate.hpp"
#include "support.hpp"

using namespace lbw;
using io::Json;

namespace {

std::string fixture(const std::string& name) { return std::string(LBW_FIXTURE_DIR) + "/" + name; }

template <class E>
std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return {};
}

std::vector<std::string> ids_of_type(const Workspace& ws, const std::string& type) {
  std::vector<std::string> out;
  for (const auto& id : ws.ids())
    if (ws.entity(id).type == type) out.push_back(id);
  return out;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("scalar codec") {
    CHECK(io::scalar_from_json(Json("3/6")) == Scalar(1, 2));
    CHECK(io::scalar_from_json(Json(-4)) == -4);
    CHECK(io::scalar_from_json(Json("-7")) == -7);
    CHECK(io::to_json(Scalar(-3, 9)).get<std::string>() == "-1/3");
    CHECK(io::to_json(Scalar(5)).get<std::string>() == "5");
    CHECK_THROWS_AS(io::scalar_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(Json("x")), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(Json(0.5)), ParseError);
  }

  TEST_CASE("matrix codec") {
    Matrix m{{1, Scalar(1, 2)}, {0, -3}};
    Json j = io::to_json(m);
    CHECK(io::matrix_from_json(j, 2, 2) == m);
    CHECK_THROWS_AS(io::matrix_from_json(j, 3, 2), ShapeError);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), 2, 2), ShapeError);
  }

  TEST_CASE("Lie algebra, cobracket and pre-Lie codecs round trip") {
    for (const LieAlgebra& L : {fixtures::sl2(), fixtures::book3(), LieAlgebra::abelian(2)})
      CHECK(io::lie_from_json(io::to_json(L)) == L);
    CHECK(io::lie_from_json(Json::parse(R"({"dim": 3})")) == LieAlgebra::abelian(3));

    LieAlgebra S = fixtures::sl2();
    Cobracket d = coboundary_cobracket(RMatrix(S, fixtures::sl2_standard_r()));
    CHECK(io::cobracket_from_json(io::cobracket_to_json(d), 3) == d);

    PreLieAlgebra A = fixtures::prelie2();
    CHECK(io::prelie_from_json(io::to_json(A)) == A);

    Tensor3 bad(2, 2, 2);
    bad(0, 1, 0) = 1;
    CHECK_THROWS_AS(io::to_json(LieAlgebra::from_constants(bad)), InvalidInput);
  }

  TEST_CASE("codec input errors") {
    CHECK_THROWS_AS(io::lie_from_json(Json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "out": []}]})")),
                    ShapeError);
    CHECK_THROWS_AS(io::lie_from_json(Json::parse(
                        R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "out": [[0, "1"], [0, "2"]]}]})")),
                    InvalidInput);
    // digit strings are accepted as indices
    LieAlgebra L = io::lie_from_json(Json::parse(R"({"dim": 2, "brackets": [{"i": "0", "j": "1", "out": [["1", "1"]]}]})"));
    CHECK(L == fixtures::nonabelian2());
    CHECK_THROWS_AS(io::cobracket_from_json(Json::parse(R"([{"k": 2, "out": []}])"), 2), ShapeError);
    CHECK_THROWS_AS(io::cobracket_from_json(Json::parse(R"([{"k": 0, "out": [[0, 1, "1"], [0, 1, "1"]]}])"), 2),
                    InvalidInput);
  }

  TEST_CASE("report serialization") {
    Report r = check_lie_algebra(LieAlgebra::from_brackets(3, {{0, 1, {0, 1, 0}}, {1, 2, {1, 0, 0}}}));
    Json j = io::report_to_json(r);
    CHECK(j["pass"] == false);
    REQUIRE(j["items"].is_array());
    bool found = false;
    for (const auto& it : j["items"])
      if (it["identity"] == "jacobi") {
        found = true;
        CHECK(it["pass"] == false);
        CHECK(it["witness"].size() == 3);
        CHECK(it.contains("formula"));
        CHECK(it.contains("residual"));
      }
    CHECK(found);
  }

  TEST_CASE("workspace: empty inputs") {
    CHECK(load_workspace(fixture("empty.json")).empty());
    CHECK(parse_workspace("  \n").empty());
    CHECK(parse_workspace("{}").empty());
    CHECK(parse_workspace(R"({"entities": []})").empty());
  }

  TEST_CASE("workspace: single bialgebra") {
    Workspace ws = load_workspace(fixture("bialg2.json"));
    REQUIRE(ws.size() == 1);
    LieBialgebra B = ws.lie_bialgebra("B");
    CHECK(B.algebra() == fixtures::nonabelian2());
    CHECK(B.delta().d(0, 0, 1) == 1);
    CHECK(B.delta().d(0, 1, 0) == -1);
    CHECK(check_lie_bialgebra(B).pass());
    CHECK(ws.entity("B").provenance.find("bialg2.json:4") != std::string::npos);
    CHECK_THROWS_AS(ws.r_matrix("B"), InvalidInput);
    CHECK_THROWS_AS(ws.lie_bialgebra("nope"), InvalidInput);
  }

  TEST_CASE("workspace: every entity of the lambda fixture resolves") {
    Workspace ws = load_workspace(fixture("lambda.json"));
    CHECK(ws.size() == 14);
    CHECK(ws.lie_algebra("g") == fixtures::nonabelian2());
    CHECK(ws.lie_bialgebra("B0").delta() == Cobracket::zero(2));
    CHECK(ws.endo_lie_algebra("E").phi() == fixtures::lambda_scaling(2));
    CHECK(ws.map("psi") == Matrix{{1, 0}, {0, Scalar(1, 2)}});
    CHECK(ws.map("zero4") == Matrix(4, 4));
    CHECK(ws.r_matrix("rh").r().entries() == Scalar(2) * test::wedge_matrix(2, 0, 1));
    CHECK(ws.prelie("A") == fixtures::prelie2());
    OOperator O = ws.o_operator("O");
    CHECK(O.rep() == dual_rep(adjoint_rep(fixtures::nonabelian2())));
    CHECK(check_ooperator(O).pass());
    CHECK(ws.entity("O").provenance.find(":21") != std::string::npos);
  }

  TEST_CASE("workspace: error reporting") {
    std::string m = message_of<ParseError>([] { load_workspace(fixture("bad_scalar.json")); });
    CHECK(m.find("bad_scalar.json:3") != std::string::npos);
    CHECK(m.find("'f'") != std::string::npos);

    std::string s = message_of<ParseError>([] { load_workspace(fixture("bad_syntax.json")); });
    CHECK(s.find("line 3, column 49") != std::string::npos);

    std::string c = message_of<InvalidInput>([] { load_workspace(fixture("cycle.json")); });
    CHECK(c.find("reference cycle") != std::string::npos);

    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "r", "type": "r_matrix", "algebra": "g", "r": []}]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "r", "type": "r_matrix",
        "algebra": {"dim": 2}, "r": [["0","1","2"],["0","0","0"]]}]})"),
                    ShapeError);
    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "a", "type": "lie_algebra", "dim": 1},
        {"id": "a", "type": "lie_algebra", "dim": 1}]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "a", "type": "widget"}]})"), InvalidInput);
    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "a"}]})"), ParseError);
    CHECK_THROWS_AS(parse_workspace("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_workspace(R"({"entities": [{"id": "o", "type": "o_operator",
        "algebra": {"dim": 1}, "rep": {"kind": "regular"}, "T": [["0"]]}]})"),
                    ParseError);
    CHECK_THROWS_AS(load_workspace(fixture("does-not-exist.json")), InvalidInput);
  }

  TEST_CASE("workspace: serializers round trip through save and load") {
    LieAlgebra L = fixtures::nonabelian2();
    LieBialgebra B(L, coboundary_cobracket(RMatrix(L, fixtures::wedge(2, 0, 1))));
    Workspace ws;
    ws.add(make_entity("L", L));
    ws.add(make_entity("ad", adjoint_rep(L)));
    ws.add(make_entity("E", EndoLieAlgebra(L, fixtures::lambda_scaling(3))));
    ws.add(make_entity("B", B));
    ws.add(make_entity("M", manin_from_bialgebra(B)));
    ws.add(make_entity("r", RMatrix(L, fixtures::wedge(2, 0, 1))));
    ws.add(make_entity("O", OOperator(L, dual_rep(adjoint_rep(L)), Matrix{{0, -1}, {1, 0}},
                                      Matrix::identity(2), Matrix::identity(2))));
    ws.add(make_entity("A", fixtures::prelie2()));
    ws.add(make_map_entity("f", Matrix{{1, Scalar(-2, 3)}, {0, 1}}));
    CHECK_THROWS_AS(ws.add(make_map_entity("f", Matrix(1, 1))), InvalidInput);
    ws.validate();

    auto path = std::filesystem::temp_directory_path() / "lbw_io_roundtrip.json";
    save_workspace(ws, path.string());
    Workspace back = load_workspace(path.string());
    std::filesystem::remove(path);
    CHECK(back.ids() == ws.ids());
    CHECK(back.lie_algebra("L") == L);
    CHECK(back.representation("ad") == adjoint_rep(L));
    CHECK(back.endo_lie_algebra("E").phi() == fixtures::lambda_scaling(3));
    CHECK(back.lie_bialgebra("B") == B);
    CHECK(back.manin_triple("M").big() == manin_from_bialgebra(B).big());
    CHECK(back.r_matrix("r").r() == fixtures::wedge(2, 0, 1));
    CHECK(back.o_operator("O").phi().has_value());
    CHECK(back.prelie("A") == fixtures::prelie2());
    CHECK(back.map("f") == Matrix{{1, Scalar(-2, 3)}, {0, 1}});
    CHECK(back.to_json() == ws.to_json());
  }

  TEST_CASE("generator: coefficient parsing and bounds") {
    CHECK(gen::parse_coeffs("1,-1,0,1") == std::vector<Scalar>{-1, 0, 1});
    CHECK(gen::parse_coeffs("0,1/4,1") == std::vector<Scalar>{0, Scalar(1, 4), 1});
    CHECK_THROWS(gen::parse_coeffs("1,,2"));
    CHECK_THROWS_AS(gen::generate({"cybe-skew", 4, {-1, 0, 1}, "abelian"}), InvalidInput);
    CHECK_THROWS_AS(gen::generate({"nonsense", 2, {-1, 0, 1}, "abelian"}), InvalidInput);
    CHECK_THROWS_AS(gen::generate({"cybe-skew", 2, {-1, 0, 1}, "sl2"}), InvalidInput);
    CHECK_THROWS_AS(gen::generate({"prelie", 3, {-1, 0, 1}, ""}), InvalidInput);
    CHECK(gen::file_name({"cybe-skew", 2, {}, "r2"}) == "cybe-skew-r2-d2.json");
    CHECK(gen::file_name({"prelie", 2, {}, "r2"}) == "prelie-d2.json");
  }

  TEST_CASE("generator: expected outputs") {
    // skew r on r2 is c e0^e1, and every one solves the CYBE
    std::vector<Tensor2> r2 = gen::cybe_skew(fixtures::nonabelian2(), {-1, 0, 1});
    CHECK(r2.size() == 3);
    CHECK(std::find(r2.begin(), r2.end(), fixtures::wedge(2, 0, 1)) != r2.end());
    // on an abelian algebra every skew tensor solves it
    CHECK(gen::cybe_skew(LieAlgebra::abelian(3), {-1, 0, 1}).size() == 27);
    std::vector<Tensor2> qt = gen::cybe_qt(fixtures::sl2(), {0, Scalar(1, 4), 1});
    CHECK(std::find(qt.begin(), qt.end(), fixtures::sl2_standard_r()) != qt.end());
    for (const Tensor2& r : qt) {
      CHECK(check_cybe(RMatrix(fixtures::sl2(), r)).pass());
      CHECK(check_sym_invariance(RMatrix(fixtures::sl2(), r)).pass());
    }

    std::vector<PreLieAlgebra> p1 = gen::prelie(1, {0, 1});
    REQUIRE(p1.size() == 2);
    Tensor3 unit(1, 1, 1);
    unit(0, 0, 0) = 1;
    CHECK(std::find(p1.begin(), p1.end(), PreLieAlgebra(unit)) != p1.end());

    for (const Matrix& phi : gen::endo(fixtures::nonabelian2(), {-1, 0, 1}))
      CHECK(check_lie_hom(fixtures::nonabelian2(), fixtures::nonabelian2(), phi).pass());
    auto pairs = gen::endo_pairs(fixtures::nonabelian2(), {-1, 0, 1});
    CHECK_FALSE(pairs.empty());
    for (const auto& [phi, psi] : pairs)
      CHECK(check_dually_represents(EndoLieAlgebra(fixtures::nonabelian2(), phi),
                                    adjoint_rep(fixtures::nonabelian2()), psi)
                .pass());
  }

  TEST_CASE("generator: workspaces are deterministic and loadable") {
    for (const std::string& kind : gen::kinds()) {
      gen::Request req{kind, 2, {-1, 0, 1}, "r2"};
      Workspace a = gen::generate(req), b = gen::generate(req);
      CHECK(a.to_json() == b.to_json());
      Workspace back = parse_workspace(a.to_json().dump(2), gen::file_name(req));
      CHECK(back.ids() == a.ids());
    }
    Workspace ws = gen::generate({"cybe-skew", 2, {-1, 0, 1}, "r2"});
    std::vector<std::string> rs = ids_of_type(ws, "r_matrix");
    CHECK(rs.size() == 3);
    for (const auto& id : rs) CHECK(check_cybe(ws.r_matrix(id)).pass());
  }
}
