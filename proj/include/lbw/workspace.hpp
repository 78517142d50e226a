#pragma once

// Single-file JSON workspace: {"entities": [{"id": ..., "type": ..., ...}, ...]}.
//
// Entity types and their fields (an "algebra block" is either {"dim", "brackets"}
// inline, or the id of another entity that carries an algebra):
//   lie_algebra          dim, brackets
//   representation       algebra, dimV, rho
//   endo_representation  algebra, dimV, rho, alpha   (or rep, alpha)
//   endo_lie_algebra     algebra (or inline dim/brackets), phi
//   lie_bialgebra        algebra (or inline dim/brackets), delta
//   manin_triple         big, n
//   r_matrix             algebra, r
//   o_operator           algebra, rep, T, [phi, alpha]
//   prelie               dim, products
//   map                  matrix, [rows, cols]
// A "rep" field is an inline {"dimV", "rho"}, the id of a representation
// entity, or {"kind": "adjoint" | "coadjoint"}.

#include <map>
#include <string>
#include <vector>

#include "lbw/io.hpp"

namespace lbw {

struct Entity {
  std::string id;
  std::string type;
  io::Json body;
  std::string provenance;  // file:line
};

class Workspace {
 public:
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  bool has(const std::string& id) const { return entities_.count(id) != 0; }
  const Entity& entity(const std::string& id) const;
  const std::vector<std::string>& ids() const { return order_; }

  // Typed accessors; throw InvalidInput on a type mismatch or unknown id.
  LieAlgebra lie_algebra(const std::string& id) const;
  Representation representation(const std::string& id) const;
  EndoRepresentation endo_representation(const std::string& id) const;
  EndoLieAlgebra endo_lie_algebra(const std::string& id) const;
  LieBialgebra lie_bialgebra(const std::string& id) const;
  ManinTriple manin_triple(const std::string& id) const;
  RMatrix r_matrix(const std::string& id) const;
  OOperator o_operator(const std::string& id) const;
  PreLieAlgebra prelie(const std::string& id) const;
  LinearMap map(const std::string& id) const;

  void add(Entity e);
  io::Json to_json() const;

  // Builds every entity once; throws with the entity's provenance on failure.
  void validate() const;

 private:
  std::map<std::string, Entity> entities_;
  std::vector<std::string> order_;
};

// Empty or blank text and "{}" give an empty workspace. Parse errors carry
// line and column.
Workspace parse_workspace(const std::string& text, const std::string& source = "<memory>");
Workspace load_workspace(const std::string& path);
void save_workspace(const Workspace& ws, const std::string& path);

// Entity serializers for construction outputs.
Entity make_entity(const std::string& id, const LieAlgebra& L);
Entity make_entity(const std::string& id, const Representation& R);
Entity make_entity(const std::string& id, const EndoLieAlgebra& E);
Entity make_entity(const std::string& id, const LieBialgebra& B);
Entity make_entity(const std::string& id, const ManinTriple& MT);
Entity make_entity(const std::string& id, const RMatrix& R);
Entity make_entity(const std::string& id, const OOperator& O);
Entity make_entity(const std::string& id, const PreLieAlgebra& A);
Entity make_map_entity(const std::string& id, const LinearMap& f);

}  // namespace lbw
