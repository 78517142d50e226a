#include "lbw/workspace.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace lbw {

using io::Json;

namespace {

class Resolve {
 public:
  explicit Resolve(const Workspace& ws) : ws_(ws) {}

  const Entity& get(const std::string& id) const {
    if (!ws_.has(id)) throw InvalidInput("unresolved reference '" + id + "'");
    return ws_.entity(id);
  }

  // Algebra carried by an entity.
  LieAlgebra algebra_of(const std::string& id) {
    Guard g(*this, id);
    const Entity& e = get(id);
    if (e.type == "lie_algebra") return io::lie_from_json(e.body);
    if (e.type == "manin_triple") return algebra_block(e.body.at("big"));
    if (e.type == "prelie") return sub_adjacent(io::prelie_from_json(e.body)).lie;
    if (e.type == "representation" || e.type == "endo_representation" ||
        e.type == "endo_lie_algebra" || e.type == "lie_bialgebra" || e.type == "r_matrix" ||
        e.type == "o_operator")
      return algebra_field(e.body);
    throw InvalidInput("entity '" + id + "' of type " + e.type + " carries no Lie algebra");
  }

  LieAlgebra algebra_block(const Json& j) {
    if (j.is_string()) return algebra_of(j.get<std::string>());
    if (j.is_object()) return io::lie_from_json(j);
    throw ParseError("algebra must be an inline block or an entity id");
  }

  // "algebra" field, falling back to inline dim/brackets.
  LieAlgebra algebra_field(const Json& body) {
    if (body.contains("algebra")) return algebra_block(body.at("algebra"));
    if (body.contains("dim")) return io::lie_from_json(body);
    throw ParseError("missing \"algebra\"");
  }

  Representation rep_block(const Json& j, const LieAlgebra& L) {
    if (j.is_string()) {
      Representation R = representation(j.get<std::string>());
      if (!(R.algebra() == L))
        throw InvalidInput("representation '" + j.get<std::string>() +
                           "' is over a different algebra");
      return R;
    }
    if (!j.is_object()) throw ParseError("rep must be an object or an entity id");
    if (j.contains("kind")) {
      std::string k = j.at("kind").get<std::string>();
      if (k == "adjoint") return adjoint_rep(L);
      if (k == "coadjoint") return dual_rep(adjoint_rep(L));
      throw ParseError("unknown rep kind '" + k + "' (expected adjoint or coadjoint)");
    }
    return rep_from(j, L);
  }

  Representation rep_from(const Json& j, const LieAlgebra& L) {
    std::size_t m = j.at("dimV").get<std::size_t>();
    const Json& rho = j.at("rho");
    if (!rho.is_array() || rho.size() != L.dim())
      throw ShapeError("rho must list " + std::to_string(L.dim()) + " matrices");
    std::vector<Matrix> maps;
    for (const auto& r : rho) maps.push_back(io::matrix_from_json(r, m, m));
    return Representation(L, m, std::move(maps));
  }

  Representation representation(const std::string& id) {
    Guard g(*this, id);
    const Entity& e = get(id);
    if (e.type == "representation" || e.type == "endo_representation") {
      if (e.body.contains("rep")) return rep_block(e.body.at("rep"), algebra_field(e.body));
      return rep_from(e.body, algebra_field(e.body));
    }
    throw InvalidInput("entity '" + id + "' is a " + e.type + ", expected representation");
  }

  const Entity& typed(const std::string& id, const char* type) {
    const Entity& e = get(id);
    if (e.type != type)
      throw InvalidInput("entity '" + id + "' is a " + e.type + ", expected " + type);
    return e;
  }

 private:
  struct Guard {
    Guard(Resolve& r, const std::string& id) : r_(r), id_(id) {
      if (!r_.visiting_.insert(id).second)
        throw InvalidInput("reference cycle through '" + id + "'");
    }
    ~Guard() { r_.visiting_.erase(id_); }
    Resolve& r_;
    std::string id_;
  };

  const Workspace& ws_;
  std::set<std::string> visiting_;
};

Matrix map_from(const Json& body) {
  const Json& m = body.at("matrix");
  if (!m.is_array()) throw ParseError("\"matrix\" must be an array");
  std::size_t rows = body.contains("rows") ? body.at("rows").get<std::size_t>() : m.size();
  std::size_t cols = body.contains("cols") ? body.at("cols").get<std::size_t>()
                     : m.empty()            ? 0
                                            : m[0].size();
  return io::matrix_from_json(m, rows, cols);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::size_t line_of_id(const std::string& text, const std::string& id) {
  std::string quoted = Json(id).dump();
  std::regex re("\"id\"\\s*:\\s*" + std::regex_replace(quoted, std::regex(R"([\\^$.|?*+()\[\]{}])"),
                                                        R"(\$&)"));
  std::smatch m;
  if (!std::regex_search(text, m, re)) return 0;
  std::size_t pos = static_cast<std::size_t>(m.position(0));
  std::size_t line = 1;
  for (std::size_t i = 0; i < pos; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

const Entity& Workspace::entity(const std::string& id) const {
  auto it = entities_.find(id);
  if (it == entities_.end()) throw InvalidInput("unknown entity '" + id + "'");
  return it->second;
}

LieAlgebra Workspace::lie_algebra(const std::string& id) const {
  return Resolve(*this).algebra_of(id);
}

Representation Workspace::representation(const std::string& id) const {
  return Resolve(*this).representation(id);
}

EndoRepresentation Workspace::endo_representation(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "endo_representation");
  Representation R = r.representation(id);
  return EndoRepresentation(R, io::matrix_from_json(e.body.at("alpha"), R.dim_v(), R.dim_v()));
}

EndoLieAlgebra Workspace::endo_lie_algebra(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "endo_lie_algebra");
  LieAlgebra L = r.algebra_field(e.body);
  return EndoLieAlgebra(L, io::matrix_from_json(e.body.at("phi"), L.dim(), L.dim()));
}

LieBialgebra Workspace::lie_bialgebra(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "lie_bialgebra");
  LieAlgebra L = r.algebra_field(e.body);
  Cobracket d = e.body.contains("delta") ? io::cobracket_from_json(e.body.at("delta"), L.dim())
                                         : Cobracket::zero(L.dim());
  return LieBialgebra(L, d);
}

ManinTriple Workspace::manin_triple(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "manin_triple");
  LieAlgebra big = r.algebra_block(e.body.at("big"));
  std::size_t n = e.body.at("n").get<std::size_t>();
  if (big.dim() != 2 * n)
    throw ShapeError("manin triple '" + id + "': big algebra has dim " +
                     std::to_string(big.dim()) + ", expected 2n = " + std::to_string(2 * n));
  return ManinTriple(big, n);
}

RMatrix Workspace::r_matrix(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "r_matrix");
  LieAlgebra L = r.algebra_field(e.body);
  return RMatrix(L, Tensor2(io::matrix_from_json(e.body.at("r"), L.dim(), L.dim())));
}

OOperator Workspace::o_operator(const std::string& id) const {
  Resolve r(*this);
  const Entity& e = r.typed(id, "o_operator");
  LieAlgebra L = r.algebra_field(e.body);
  Representation R = r.rep_block(e.body.at("rep"), L);
  LinearMap T = io::matrix_from_json(e.body.at("T"), L.dim(), R.dim_v());
  std::optional<LinearMap> phi, alpha;
  if (e.body.contains("phi")) phi = io::matrix_from_json(e.body.at("phi"), L.dim(), L.dim());
  if (e.body.contains("alpha"))
    alpha = io::matrix_from_json(e.body.at("alpha"), R.dim_v(), R.dim_v());
  if (phi.has_value() != alpha.has_value())
    throw InvalidInput("o_operator '" + id + "': phi and alpha must be given together");
  return OOperator(L, R, T, phi, alpha);
}

PreLieAlgebra Workspace::prelie(const std::string& id) const {
  Resolve r(*this);
  return io::prelie_from_json(r.typed(id, "prelie").body);
}

LinearMap Workspace::map(const std::string& id) const {
  Resolve r(*this);
  return map_from(r.typed(id, "map").body);
}

void Workspace::add(Entity e) {
  if (e.id.empty()) throw InvalidInput("entity without an id");
  if (has(e.id)) throw InvalidInput("duplicate entity id '" + e.id + "'");
  order_.push_back(e.id);
  std::string id = e.id;
  entities_.emplace(std::move(id), std::move(e));
}

Json Workspace::to_json() const {
  Json list = Json::array();
  for (const auto& id : order_) {
    const Entity& e = entities_.at(id);
    Json o{{"id", e.id}, {"type", e.type}};
    for (const auto& [k, v] : e.body.items())
      if (k != "id" && k != "type") o[k] = v;
    list.push_back(std::move(o));
  }
  return Json{{"entities", list}};
}

void Workspace::validate() const {
  for (const auto& id : order_) {
    const Entity& e = entities_.at(id);
    try {
      if (e.type == "lie_algebra") lie_algebra(id);
      else if (e.type == "representation") representation(id);
      else if (e.type == "endo_representation") endo_representation(id);
      else if (e.type == "endo_lie_algebra") endo_lie_algebra(id);
      else if (e.type == "lie_bialgebra") lie_bialgebra(id);
      else if (e.type == "manin_triple") manin_triple(id);
      else if (e.type == "r_matrix") r_matrix(id);
      else if (e.type == "o_operator") o_operator(id);
      else if (e.type == "prelie") prelie(id);
      else if (e.type == "map") map(id);
      else throw InvalidInput("unknown entity type '" + e.type + "'");
    } catch (const Json::exception& ex) {
      throw ParseError(e.provenance + ": entity '" + id + "': " + ex.what());
    } catch (const ParseError& ex) {
      throw ParseError(e.provenance + ": entity '" + id + "': " + ex.what());
    } catch (const ShapeError& ex) {
      throw ShapeError(e.provenance + ": entity '" + id + "': " + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw InvalidInput(e.provenance + ": entity '" + id + "': " + ex.what());
    }
  }
}

Workspace parse_workspace(const std::string& text, const std::string& source) {
  Workspace ws;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return ws;
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    std::size_t byte = ex.byte > 0 ? ex.byte - 1 : 0;
    throw ParseError(source + ": JSON parse error at " + line_col(text, byte));
  }
  if (!root.is_object()) throw ParseError(source + ": workspace must be a JSON object");
  if (!root.contains("entities")) return ws;
  const Json& list = root.at("entities");
  if (!list.is_array()) throw ParseError(source + ": \"entities\" must be an array");
  for (const auto& e : list) {
    if (!e.is_object() || !e.contains("id") || !e.contains("type") || !e.at("id").is_string() ||
        !e.at("type").is_string())
      throw ParseError(source + ": every entity needs string \"id\" and \"type\"");
    std::string id = e.at("id").get<std::string>();
    std::size_t line = line_of_id(text, id);
    std::string prov = source + ":" + std::to_string(line);
    if (ws.has(id)) throw InvalidInput(prov + ": duplicate entity id '" + id + "'");
    ws.add(Entity{id, e.at("type").get<std::string>(), e, prov});
  }
  ws.validate();
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open workspace '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str(), path);
}

void save_workspace(const Workspace& ws, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << ws.to_json().dump(2) << "\n";
  if (!out) throw InvalidInput("write to '" + path + "' failed");
}

Entity make_entity(const std::string& id, const LieAlgebra& L) {
  return {id, "lie_algebra", io::to_json(L), {}};
}

Entity make_entity(const std::string& id, const Representation& R) {
  Json b{{"algebra", io::to_json(R.algebra())}, {"dimV", R.dim_v()}, {"rho", io::rho_to_json(R)}};
  return {id, "representation", b, {}};
}

Entity make_entity(const std::string& id, const EndoLieAlgebra& E) {
  Json b{{"algebra", io::to_json(E.algebra())}, {"phi", io::to_json(E.phi())}};
  return {id, "endo_lie_algebra", b, {}};
}

Entity make_entity(const std::string& id, const LieBialgebra& B) {
  Json b{{"algebra", io::to_json(B.algebra())}, {"delta", io::cobracket_to_json(B.delta())}};
  return {id, "lie_bialgebra", b, {}};
}

Entity make_entity(const std::string& id, const ManinTriple& MT) {
  Json b{{"big", io::to_json(MT.big())}, {"n", MT.n()}};
  return {id, "manin_triple", b, {}};
}

Entity make_entity(const std::string& id, const RMatrix& R) {
  Json b{{"algebra", io::to_json(R.algebra())}, {"r", io::to_json(R.r().entries())}};
  return {id, "r_matrix", b, {}};
}

Entity make_entity(const std::string& id, const OOperator& O) {
  Json b{{"algebra", io::to_json(O.algebra())},
         {"rep", Json{{"dimV", O.rep().dim_v()}, {"rho", io::rho_to_json(O.rep())}}},
         {"T", io::to_json(O.T())}};
  if (O.phi()) b["phi"] = io::to_json(*O.phi());
  if (O.alpha()) b["alpha"] = io::to_json(*O.alpha());
  return {id, "o_operator", b, {}};
}

Entity make_entity(const std::string& id, const PreLieAlgebra& A) {
  return {id, "prelie", io::to_json(A), {}};
}

Entity make_map_entity(const std::string& id, const LinearMap& f) {
  Json b{{"rows", f.rows()}, {"cols", f.cols()}, {"matrix", io::to_json(f)}};
  return {id, "map", b, {}};
}

}  // namespace lbw
