#include "lbw/generate.hpp"

#include <cstdlib>
#include <sstream>

#include "lbw/enumerate.hpp"
#include "lbw/fixtures.hpp"

namespace lbw::gen {

namespace {

void require_budget(std::size_t slots, std::size_t values, const std::string& what) {
  if (assignment_count(slots, values, kMaxCandidates) > kMaxCandidates)
    throw InvalidInput(what + ": " + std::to_string(values) + "^" + std::to_string(slots) +
                       " candidates exceeds the enumeration cap of " +
                       std::to_string(kMaxCandidates));
}

void require_dim(std::size_t dim) {
  if (dim > max_dim())
    throw InvalidInput("dimension " + std::to_string(dim) + " exceeds LBW_MAX_DIM=" +
                       std::to_string(max_dim()));
}

bool is_lie_endo(const LieAlgebra& L, const LinearMap& phi) {
  return check_lie_hom(L, L, phi).pass();
}

}  // namespace

std::size_t max_dim() {
  const char* env = std::getenv("LBW_MAX_DIM");
  if (!env || !*env) return 3;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw InvalidInput(std::string("bad LBW_MAX_DIM '") + env + "'");
  return static_cast<std::size_t>(v);
}

std::vector<Scalar> parse_coeffs(const std::string& list) {
  std::vector<Scalar> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in coefficient list '" + list + "'");
    out.push_back(parse_scalar(tok.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ParseError("empty coefficient list");
  return canonical_coeffs(std::move(out));
}

std::vector<Tensor2> cybe_skew(const LieAlgebra& L, const std::vector<Scalar>& coeffs) {
  const std::size_t n = L.dim();
  const std::size_t slots = n * (n - (n ? 1 : 0)) / 2;
  require_budget(slots, coeffs.size(), "cybe-skew");
  std::vector<Tensor2> out;
  for_each_assignment(slots, coeffs, [&](const std::vector<Scalar>& v) {
    Tensor2 r(n, n);
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++s) {
        r(i, j) = v[s];
        r(j, i) = -v[s];
      }
    if (cybe_lhs(RMatrix(L, r)).is_zero()) out.push_back(std::move(r));
    return true;
  });
  return out;
}

std::vector<Tensor2> cybe_qt(const LieAlgebra& L, const std::vector<Scalar>& coeffs) {
  const std::size_t n = L.dim();
  require_budget(n * n, coeffs.size(), "cybe-qt");
  std::vector<Tensor2> out;
  for_each_matrix(n, n, coeffs, [&](Matrix m) {
    RMatrix R(L, Tensor2(std::move(m)));
    if (check_sym_invariance(R).pass() && cybe_lhs(R).is_zero()) out.push_back(R.r());
    return true;
  });
  return out;
}

std::vector<PreLieAlgebra> prelie(std::size_t dim, const std::vector<Scalar>& coeffs) {
  require_budget(dim * dim * dim, coeffs.size(), "prelie");
  std::vector<PreLieAlgebra> out;
  for_each_assignment(dim * dim * dim, coeffs, [&](const std::vector<Scalar>& v) {
    Tensor3 p(dim, dim, dim);
    std::size_t s = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) p(i, j, k) = v[s++];
    PreLieAlgebra A(std::move(p));
    if (check_prelie(A).pass()) out.push_back(std::move(A));
    return true;
  });
  return out;
}

std::vector<LinearMap> endo(const LieAlgebra& L, const std::vector<Scalar>& coeffs) {
  const std::size_t n = L.dim();
  require_budget(n * n, coeffs.size(), "endo");
  std::vector<LinearMap> out;
  for_each_matrix(n, n, coeffs, [&](Matrix phi) {
    if (is_lie_endo(L, phi)) out.push_back(std::move(phi));
    return true;
  });
  return out;
}

std::vector<std::pair<LinearMap, LinearMap>> endo_pairs(const LieAlgebra& L,
                                                        const std::vector<Scalar>& coeffs) {
  const std::size_t n = L.dim();
  std::vector<LinearMap> phis = endo(L, coeffs);
  std::size_t per = assignment_count(n * n, coeffs.size(), kMaxCandidates);
  if (!phis.empty() && per > kMaxCandidates / phis.size())
    throw InvalidInput("endo-pair: " + std::to_string(phis.size()) + " endomorphisms x " +
                       std::to_string(per) + " psi candidates exceeds the enumeration cap of " +
                       std::to_string(kMaxCandidates));
  const Representation ad = adjoint_rep(L);
  std::vector<std::pair<LinearMap, LinearMap>> out;
  for (const auto& phi : phis) {
    EndoLieAlgebra E(L, phi);
    for_each_matrix(n, n, coeffs, [&](Matrix psi) {
      if (check_dually_represents(E, ad, psi).pass()) out.emplace_back(phi, std::move(psi));
      return true;
    });
  }
  return out;
}

std::string file_name(const Request& req) {
  if (req.kind == "prelie") return "prelie-d" + std::to_string(req.dim) + ".json";
  return req.kind + "-" + req.algebra + "-d" + std::to_string(req.dim) + ".json";
}

Workspace generate(const Request& req) {
  bool known = false;
  for (const auto& k : kinds()) known = known || k == req.kind;
  if (!known) throw InvalidInput("unknown fixture kind '" + req.kind + "'");
  require_dim(req.dim);
  if (req.coeffs.empty()) throw InvalidInput("empty coefficient set");
  const auto coeffs = canonical_coeffs(req.coeffs);

  Workspace ws;
  if (req.kind == "prelie") {
    std::size_t k = 0;
    for (const auto& A : prelie(req.dim, coeffs))
      ws.add(make_entity("prelie-" + std::to_string(k++), A));
    return ws;
  }

  const LieAlgebra L = fixtures::by_name(req.algebra, req.dim);
  ws.add(make_entity("g", L));
  auto with_ref = [](Entity e) {
    e.body["algebra"] = "g";
    return e;
  };
  std::size_t k = 0;
  if (req.kind == "cybe-skew" || req.kind == "cybe-qt") {
    auto rs = req.kind == "cybe-skew" ? cybe_skew(L, coeffs) : cybe_qt(L, coeffs);
    for (const auto& r : rs) ws.add(with_ref(make_entity("r-" + std::to_string(k++), RMatrix(L, r))));
  } else if (req.kind == "endo") {
    for (const auto& phi : endo(L, coeffs))
      ws.add(with_ref(make_entity("endo-" + std::to_string(k++), EndoLieAlgebra(L, phi))));
  } else {
    for (const auto& [phi, psi] : endo_pairs(L, coeffs)) {
      std::string id = "pair-" + std::to_string(k++);
      ws.add(with_ref(make_entity(id, EndoLieAlgebra(L, phi))));
      ws.add(make_map_entity(id + ".psi", psi));
    }
  }
  return ws;
}

}  // namespace lbw::gen
