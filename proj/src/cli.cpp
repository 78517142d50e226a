#include "lbw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "lbw/generate.hpp"

namespace lbw::cli {

namespace {

Report lie_hom_report(const Workspace& ws, const Args& a) {
  return check_lie_hom(ws.lie_algebra(a[0]), ws.lie_algebra(a[1]), ws.map(a[2]));
}

MapPair pair_of(const Workspace& ws, const std::string& fwd, const std::string& bwd) {
  return MapPair(ws.map(fwd), ws.map(bwd));
}

// Vets a construction input; a failed report is returned unchanged so the
// caller can print it.
Built refuse(Report r) { return Built{Workspace{}, std::move(r)}; }

Built accept(Workspace out, Report r) {
  // Output must load back as a valid workspace.
  parse_workspace(out.to_json().dump(), "<construction output>");
  return Built{std::move(out), std::move(r)};
}

std::string arity_text(const std::vector<std::size_t>& ar) {
  std::string s;
  for (std::size_t i = 0; i < ar.size(); ++i) s += (i ? " or " : "") + std::to_string(ar[i]);
  return s;
}

std::vector<CheckSpec> make_checks() {
  std::vector<CheckSpec> c;
  auto add = [&](std::string name, std::vector<std::size_t> ar, std::string usage,
                 std::function<Report(const Workspace&, const Args&)> fn) {
    c.push_back({std::move(name), std::move(ar), std::move(usage), std::move(fn)});
  };

  add("lie-algebra", {1}, "<algebra>",
      [](const Workspace& ws, const Args& a) { return check_lie_algebra(ws.lie_algebra(a[0])); });
  add("lie-hom", {3}, "<g> <h> <f>", lie_hom_report);
  add("representation", {1}, "<rep>", [](const Workspace& ws, const Args& a) {
    return check_representation(ws.representation(a[0]));
  });
  add("invariant-form", {2}, "<algebra> <gram>", [](const Workspace& ws, const Args& a) {
    return check_invariant_form(ws.lie_algebra(a[0]), BilinearForm(ws.map(a[1])));
  });
  add("endo-lie", {1}, "<endo-lie>",
      [](const Workspace& ws, const Args& a) { return check_endo_lie(ws.endo_lie_algebra(a[0])); });
  add("endo-rep", {2}, "<endo-lie> <endo-rep>", [](const Workspace& ws, const Args& a) {
    return check_endo_rep(ws.endo_lie_algebra(a[0]), ws.endo_representation(a[1]));
  });
  add("dually-represents", {3}, "<endo-lie> <rep> <beta>", [](const Workspace& ws, const Args& a) {
    return check_dually_represents(ws.endo_lie_algebra(a[0]), ws.representation(a[1]),
                                   ws.map(a[2]));
  });
  add("rep-equivalence", {3}, "<endo-rep-1> <endo-rep-2> <map>",
      [](const Workspace& ws, const Args& a) {
        return check_rep_equivalence(ws.endo_representation(a[0]), ws.endo_representation(a[1]),
                                     ws.map(a[2]));
      });
  add("lie-coalgebra", {1}, "<bialgebra>", [](const Workspace& ws, const Args& a) {
    return check_lie_coalgebra(ws.lie_bialgebra(a[0]).delta());
  });
  // Non-throwing form: a bad component is a semantic failure here.
  add("lie-bialgebra", {1}, "<bialgebra>", [](const Workspace& ws, const Args& a) {
    LieBialgebra B = ws.lie_bialgebra(a[0]);
    return bialgebra_verdict(B.algebra(), B.delta());
  });
  add("endo-lie-bialgebra", {3}, "<bialgebra> <phi> <psi>", [](const Workspace& ws, const Args& a) {
    return check_endo_lie_bialgebra(ws.lie_bialgebra(a[0]), ws.map(a[1]), ws.map(a[2]));
  });
  add("coherent-hom", {4}, "<Bg> <Bh> <phi> <psi>", [](const Workspace& ws, const Args& a) {
    return check_coherent_hom(ws.lie_bialgebra(a[0]), ws.lie_bialgebra(a[1]),
                              pair_of(ws, a[2], a[3]));
  });
  add("standard-hom", {3}, "<Bg> <Bh> <f>", [](const Workspace& ws, const Args& a) {
    return check_standard_hom(ws.lie_bialgebra(a[0]), ws.lie_bialgebra(a[1]), ws.map(a[2]));
  });
  add("tbgs-weak-hom", {4}, "<B1> <B2> <phi> <psi>", [](const Workspace& ws, const Args& a) {
    return check_tbgs_weak_hom(ws.lie_bialgebra(a[0]), ws.lie_bialgebra(a[1]),
                               pair_of(ws, a[2], a[3]));
  });
  add("matched-pair", {4, 6}, "<g> <h> <rho> <mu> [<phi_g> <phi_h>]",
      [](const Workspace& ws, const Args& a) {
        MatchedPair M(ws.lie_algebra(a[0]), ws.lie_algebra(a[1]), ws.representation(a[2]),
                      ws.representation(a[3]));
        std::optional<EndoPair> endo;
        if (a.size() == 6) endo = EndoPair{ws.map(a[4]), ws.map(a[5])};
        return check_matched_pair(M, endo);
      });
  add("manin-triple", {1}, "<manin>",
      [](const Workspace& ws, const Args& a) { return check_manin_triple(ws.manin_triple(a[0])); });
  add("endo-manin-triple", {3}, "<manin> <phi> <psi>", [](const Workspace& ws, const Args& a) {
    return check_endo_manin_triple(ws.manin_triple(a[0]), ws.map(a[1]), ws.map(a[2]));
  });
  add("coherent-hom-manin", {3}, "<MTg> <MTh> <f>", [](const Workspace& ws, const Args& a) {
    return check_coherent_hom_manin(ws.manin_triple(a[0]), ws.manin_triple(a[1]), ws.map(a[2]));
  });
  add("strong-hom-manin", {3}, "<MTg> <MTh> <f>", [](const Workspace& ws, const Args& a) {
    return check_strong_hom_manin(ws.manin_triple(a[0]), ws.manin_triple(a[1]), ws.map(a[2]));
  });
  add("sym-invariance", {1}, "<r>",
      [](const Workspace& ws, const Args& a) { return check_sym_invariance(ws.r_matrix(a[0])); });
  add("cybe", {1}, "<r>",
      [](const Workspace& ws, const Args& a) { return check_cybe(ws.r_matrix(a[0])); });
  add("psi-cybe", {3}, "<endo-lie> <psi> <r>", [](const Workspace& ws, const Args& a) {
    return check_psi_cybe(ws.endo_lie_algebra(a[0]), ws.map(a[1]), ws.r_matrix(a[2]));
  });
  add("coboundary-endo", {3}, "<endo-lie> <psi> <r>", [](const Workspace& ws, const Args& a) {
    return check_coboundary_endo(ws.endo_lie_algebra(a[0]), ws.map(a[1]), ws.r_matrix(a[2]));
  });
  add("coherent-hom-r", {4}, "<Rg> <Rh> <phi> <psi>", [](const Workspace& ws, const Args& a) {
    return check_coherent_hom_r(ws.r_matrix(a[0]), ws.r_matrix(a[1]), pair_of(ws, a[2], a[3]));
  });
  add("ooperator", {1}, "<o-operator>",
      [](const Workspace& ws, const Args& a) { return check_ooperator(ws.o_operator(a[0])); });
  add("sharp-bridge", {3}, "<endo-lie> <psi> <r>", [](const Workspace& ws, const Args& a) {
    return check_sharp_bridge(ws.endo_lie_algebra(a[0]), ws.map(a[1]), ws.r_matrix(a[2]));
  });
  add("hom-ooperators", {4}, "<Og> <Oh> <phi> <alpha>", [](const Workspace& ws, const Args& a) {
    return check_hom_ooperators(ws.o_operator(a[0]), ws.o_operator(a[1]), ws.map(a[2]),
                                ws.map(a[3]));
  });
  add("lift-hom", {6}, "<Og> <Oh> <phi> <alpha> <psi> <beta>",
      [](const Workspace& ws, const Args& a) {
        return lift_hom_to_double(ws.o_operator(a[0]), ws.o_operator(a[1]), ws.map(a[2]),
                                  ws.map(a[3]), ws.map(a[4]), ws.map(a[5]))
            .report;
      });
  add("prelie", {1}, "<prelie>",
      [](const Workspace& ws, const Args& a) { return check_prelie(ws.prelie(a[0])); });
  add("prelie-hom", {3}, "<A> <B> <f>", [](const Workspace& ws, const Args& a) {
    return check_prelie_hom(ws.prelie(a[0]), ws.prelie(a[1]), ws.map(a[2]));
  });
  add("prelie-endo", {2}, "<prelie> <phi>", [](const Workspace& ws, const Args& a) {
    return check_prelie_endo_conditions(ws.prelie(a[0]), ws.map(a[1]));
  });
  return c;
}

std::vector<ConstructSpec> make_constructions() {
  std::vector<ConstructSpec> c;
  using Fn = std::function<Built(const Workspace&, const Args&, const std::string&)>;
  auto add = [&](std::string name, std::vector<std::size_t> ar, std::string usage, Fn fn) {
    c.push_back({std::move(name), std::move(ar), std::move(usage), std::move(fn)});
  };

  add("bowtie", {4}, "<g> <h> <rho> <mu>", [](const Workspace& ws, const Args& a,
                                              const std::string& id) {
    MatchedPair M(ws.lie_algebra(a[0]), ws.lie_algebra(a[1]), ws.representation(a[2]),
                  ws.representation(a[3]));
    Report pre = check_matched_pair(M);
    if (!pre.pass()) return refuse(pre);
    LieAlgebra big = bowtie(M);
    Report post("bowtie");
    post.add_from("matched pair", "input is a matched pair", pre);
    post.add_from("bowtie is a Lie algebra", "Jacobi on g |><| h", check_lie_algebra(big));
    Workspace out;
    out.add(make_entity(id, big));
    return accept(std::move(out), post);
  });

  add("manin", {1}, "<bialgebra>", [](const Workspace& ws, const Args& a, const std::string& id) {
    LieBialgebra B = ws.lie_bialgebra(a[0]);
    Report pre = bialgebra_verdict(B.algebra(), B.delta());
    if (!pre.pass()) return refuse(pre);
    ManinTriple MT = manin_from_bialgebra(B);
    Report post("manin");
    post.add_from("manin triple", "big Lie algebra with B_d invariant", check_manin_triple(MT));
    post.add_verdict("round trip", "bialgebra_from_manin(manin_from_bialgebra(B)) = B",
                     bialgebra_from_manin(MT) == B);
    Workspace out;
    out.add(make_entity(id, MT));
    return accept(std::move(out), post);
  });

  add("bialgebra-from-manin", {1}, "<manin>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        ManinTriple MT = ws.manin_triple(a[0]);
        Report pre = check_manin_triple(MT);
        if (!pre.pass()) return refuse(pre);
        LieBialgebra B = bialgebra_from_manin(MT);
        Report post("bialgebra-from-manin");
        post.add_from("lie bialgebra", "cocycle", bialgebra_verdict(B.algebra(), B.delta()));
        Workspace out;
        out.add(make_entity(id, B));
        return accept(std::move(out), post);
      });

  add("dual-algebra", {1}, "<bialgebra>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        LieBialgebra B = ws.lie_bialgebra(a[0]);
        Report pre = check_lie_coalgebra(B.delta());
        if (!pre.pass()) return refuse(pre);
        LieAlgebra D = dualize(B.delta());
        Report post("dual-algebra");
        post.add_from("dual is a Lie algebra", "Jacobi on g*", check_lie_algebra(D));
        Workspace out;
        out.add(make_entity(id, D));
        return accept(std::move(out), post);
      });

  add("coboundary", {1}, "<r>", [](const Workspace& ws, const Args& a, const std::string& id) {
    RMatrix R = ws.r_matrix(a[0]);
    LieBialgebra B(R.algebra(), coboundary_cobracket(R));
    Report post = bialgebra_verdict(B.algebra(), B.delta());
    Workspace out;
    out.add(make_entity(id, B));
    return accept(std::move(out), post);
  });

  add("double", {1, 3}, "<bialgebra> [<phi> <psi>]",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        LieBialgebra B = ws.lie_bialgebra(a[0]);
        Report pre = bialgebra_verdict(B.algebra(), B.delta());
        if (!pre.pass()) return refuse(pre);
        std::optional<std::pair<LinearMap, LinearMap>> endo;
        if (a.size() == 3) {
          endo.emplace(ws.map(a[1]), ws.map(a[2]));
          Report e = check_endo_lie_bialgebra(B, endo->first, endo->second);
          if (!e.pass()) return refuse(e);
        }
        DoubleResult D = double_rmatrix(B, endo);
        Workspace out;
        out.add(make_entity(id, LieBialgebra(D.big, D.delta_r)));
        out.add(make_entity(id + ".r", D.r));
        if (D.endo) {
          out.add(make_map_entity(id + ".phi", D.endo->fwd()));
          out.add(make_map_entity(id + ".psi", D.endo->bwd()));
        }
        return accept(std::move(out), D.report);
      });

  add("semidirect", {1, 2}, "<rep> | <endo-lie> <endo-rep>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        Workspace out;
        if (a.size() == 1) {
          Representation R = ws.representation(a[0]);
          Report pre = check_representation(R);
          if (!pre.pass()) return refuse(pre);
          LieAlgebra S = semidirect_product(R.algebra(), R);
          Report post("semidirect");
          post.add_from("semidirect product is a Lie algebra", "Jacobi on g |x V",
                        check_lie_algebra(S));
          out.add(make_entity(id, S));
          return accept(std::move(out), post);
        }
        EndoLieAlgebra E = ws.endo_lie_algebra(a[0]);
        EndoRepresentation ER = ws.endo_representation(a[1]);
        Report pre("semidirect");
        pre.add_from("endo lie", "phi is an endomorphism", check_endo_lie(E));
        pre.add_from("endo rep", "alpha rho(x) = rho(phi x) alpha", check_endo_rep(E, ER));
        if (!pre.pass()) return refuse(pre);
        EndoLieAlgebra S = endo_semidirect(E, ER);
        Report post("semidirect");
        post.add_from("endo semidirect product", "phi + alpha is an endomorphism",
                      check_endo_lie(S));
        out.add(make_entity(id, S));
        return accept(std::move(out), post);
      });

  add("lift-rmatrix", {1}, "<o-operator>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        OOperator O = ws.o_operator(a[0]);
        Report pre = check_ooperator(O);
        if (!pre.pass()) return refuse(pre);
        RMatrix R = lift_to_rmatrix(O);
        Report post("lift-rmatrix");
        post.add_verdict("skew", "r_T + tau(r_T) = 0", is_skew(R.r()));
        post.add_from("cybe", "[r12,r13] + [r13,r23] + [r12,r23] = 0", check_cybe(R));
        Workspace out;
        out.add(make_entity(id, R));
        return accept(std::move(out), post);
      });

  add("functor-F", {1, 3}, "<prelie> | <A> <B> <f>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        Workspace out;
        if (a.size() == 1) {
          PreLieAlgebra A = ws.prelie(a[0]);
          Report pre = check_prelie(A);
          if (!pre.pass()) return refuse(pre);
          OOperator O = functor_F(A);
          Report post("functor-F");
          post.add_from("O-operator", "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u)", check_ooperator(O));
          out.add(make_entity(id, O));
          return accept(std::move(out), post);
        }
        PreLieAlgebra A = ws.prelie(a[0]), B = ws.prelie(a[1]);
        LinearMap f = ws.map(a[2]);
        Report pre = check_prelie_hom(A, B, f);
        if (!pre.pass()) return refuse(pre);
        OHom h = functor_F(A, B, f);
        Report post("functor-F");
        post.add_from("O-operator hom", "F(f) is a homomorphism of O-operators",
                      check_hom_ooperators(functor_F(A), functor_F(B), h.phi, h.alpha));
        out.add(make_map_entity(id + ".phi", h.phi));
        out.add(make_map_entity(id + ".alpha", h.alpha));
        return accept(std::move(out), post);
      });

  add("functor-G", {1}, "<o-operator>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        OOperator O = ws.o_operator(a[0]);
        Report pre = check_ooperator(O);
        if (!pre.pass()) return refuse(pre);
        PreLieAlgebra A = functor_G(O);
        Report post("functor-G");
        post.add_from("pre-Lie", "left symmetry of u.v = rho(Tu)v", check_prelie(A));
        Workspace out;
        out.add(make_entity(id, A));
        return accept(std::move(out), post);
      });

  add("sub-adjacent", {1}, "<prelie>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        PreLieAlgebra A = ws.prelie(a[0]);
        Report pre = check_prelie(A);
        if (!pre.pass()) return refuse(pre);
        SubAdjacent S = sub_adjacent(A);
        Report post("sub-adjacent");
        post.add_from("Lie algebra", "[x,y] = x.y - y.x", check_lie_algebra(S.lie));
        post.add_from("left multiplication", "L is a representation",
                      check_representation(S.left));
        Workspace out;
        out.add(make_entity(id, S.lie));
        out.add(make_entity(id + ".L", S.left));
        return accept(std::move(out), post);
      });

  add("transport", {4}, "<Bg> <Bh> <phi> <psi>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        LieBialgebra Bg = ws.lie_bialgebra(a[0]), Bh = ws.lie_bialgebra(a[1]);
        MapPair p = pair_of(ws, a[2], a[3]);
        Report pre = check_coherent_hom(Bg, Bh, p);
        if (!pre.pass()) return refuse(pre);
        LinearMap f = transport_to_manin(p);
        Report post("transport");
        post.add_from("coherent hom of Manin triples", "f(g) in h, f(g*) in h*, Lie hom",
                      check_coherent_hom_manin(manin_from_bialgebra(Bg), manin_from_bialgebra(Bh),
                                               f));
        post.add_verdict("round trip", "transport back gives (phi, psi)",
                         transport_to_bialgebra(f, Bg.dim(), Bh.dim()) == p);
        Workspace out;
        out.add(make_map_entity(id, f));
        return accept(std::move(out), post);
      });

  add("transport-back", {3}, "<MTg> <MTh> <f>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        ManinTriple Mg = ws.manin_triple(a[0]), Mh = ws.manin_triple(a[1]);
        LinearMap f = ws.map(a[2]);
        Report pre = check_coherent_hom_manin(Mg, Mh, f);
        if (!pre.pass()) return refuse(pre);
        MapPair p = transport_to_bialgebra(f, Mg.n(), Mh.n());
        Report post("transport-back");
        post.add_from("coherent hom of Lie bialgebras", "fwd Lie hom, bwd coalgebra hom, pp1, pp2",
                      check_coherent_hom(bialgebra_from_manin(Mg), bialgebra_from_manin(Mh), p));
        Workspace out;
        out.add(make_map_entity(id + ".phi", p.fwd()));
        out.add(make_map_entity(id + ".psi", p.bwd()));
        return accept(std::move(out), post);
      });

  add("rsharp", {1, 3}, "<r> | <endo-lie> <psi> <r>",
      [](const Workspace& ws, const Args& a, const std::string& id) {
        OOperator O;
        if (a.size() == 1) {
          O = rsharp_of(ws.r_matrix(a[0]));
        } else {
          O = rsharp_of(ws.endo_lie_algebra(a[0]), ws.map(a[1]), ws.r_matrix(a[2]));
        }
        Report post = check_ooperator(O);
        Workspace out;
        out.add(make_entity(id, O));
        return accept(std::move(out), post);
      });
  return c;
}

void print_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << io::report_to_json(r).dump(2) << "\n";
  else
    out << r.to_text();
}

template <class Spec>
const Spec* find_spec(const std::vector<Spec>& specs, const std::string& name) {
  for (const auto& s : specs)
    if (s.name == name) return &s;
  return nullptr;
}

template <class Spec>
std::string names_of(const std::vector<Spec>& specs) {
  std::string s;
  for (const auto& x : specs) s += (s.empty() ? "" : ", ") + x.name;
  return s;
}

template <class Spec>
void require_arity(const Spec& s, const Args& a) {
  if (std::find(s.arities.begin(), s.arities.end(), a.size()) == s.arities.end())
    throw CLI::ValidationError(s.name + " takes " + arity_text(s.arities) + " entity ids: " +
                               s.usage + " (got " + std::to_string(a.size()) + ")");
}

}  // namespace

const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> c = make_checks();
  return c;
}

const std::vector<ConstructSpec>& constructions() {
  static const std::vector<ConstructSpec> c = make_constructions();
  return c;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lbw: exact-arithmetic workbench for endo Lie bialgebras and related structures"};
  app.require_subcommand(1);

  std::string name, ws_path, format = "text", out_path, id = "out";
  Args ids;
  std::string kind, coeffs = "-1,0,1", algebra = "abelian", out_dir;
  std::size_t dim = 2;

  auto* check = app.add_subcommand("check", "run a named check on workspace entities");
  check->add_option("name", name, "check name")->required();
  check->add_option("--ws", ws_path, "workspace file")->required();
  check->add_option("--args", ids, "entity ids");
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* construct = app.add_subcommand("construct", "build an entity and write it after re-checking");
  construct->add_option("name", name, "construction name")->required();
  construct->add_option("--ws", ws_path, "workspace file")->required();
  construct->add_option("--args", ids, "entity ids");
  construct->add_option("--out", out_path, "output workspace file")->required();
  construct->add_option("--id", id, "id of the produced entity");
  construct->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* fix = app.add_subcommand("fixtures", "enumerate fixtures by brute force");
  fix->add_option("kind", kind, "cybe-skew, cybe-qt, prelie, endo, endo-pair")
      ->required()
      ->check(CLI::IsMember(gen::kinds()));
  fix->add_option("--dim", dim, "dimension")->required();
  fix->add_option("--coeffs", coeffs, "comma-separated coefficient set");
  fix->add_option("--out", out_dir, "output directory")->required();
  fix->add_option("--algebra", algebra, "abelian, r2, sl2, heisenberg, book");

  auto* list = app.add_subcommand("list", "list check and construction names");

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (list->parsed()) {
      out << "checks:\n";
      for (const auto& s : checks()) out << "  " << s.name << " " << s.usage << "\n";
      out << "constructions:\n";
      for (const auto& s : constructions()) out << "  " << s.name << " " << s.usage << "\n";
      return kPass;
    }
    if (check->parsed()) {
      const CheckSpec* s = find_spec(checks(), name);
      if (!s) {
        err << "unknown check '" << name << "'; known: " << names_of(checks()) << "\n";
        return kUsage;
      }
      require_arity(*s, ids);
      Workspace ws = load_workspace(ws_path);
      Report r = s->run(ws, ids);
      print_report(r, format, out);
      return r.pass() ? kPass : kFail;
    }
    if (construct->parsed()) {
      const ConstructSpec* s = find_spec(constructions(), name);
      if (!s) {
        err << "unknown construction '" << name << "'; known: " << names_of(constructions())
            << "\n";
        return kUsage;
      }
      require_arity(*s, ids);
      Workspace ws = load_workspace(ws_path);
      Built b = s->run(ws, ids, id);
      print_report(b.report, format, out);
      if (!b.report.pass()) {
        err << "construction '" << name << "' not written: verification failed\n";
        return kFail;
      }
      // Append to an existing output workspace; ids must stay unique.
      Workspace merged = std::filesystem::exists(out_path) ? load_workspace(out_path) : Workspace{};
      for (const auto& eid : b.out.ids()) merged.add(b.out.entity(eid));
      merged.validate();
      save_workspace(merged, out_path);
      if (format != "json") out << "wrote " << b.out.size() << " entities to " << out_path << "\n";
      return kPass;
    }
    if (fix->parsed()) {
      gen::Request req{kind, dim, gen::parse_coeffs(coeffs), algebra};
      Workspace ws = gen::generate(req);
      std::filesystem::create_directories(out_dir);
      std::string path = (std::filesystem::path(out_dir) / gen::file_name(req)).string();
      save_workspace(ws, path);
      std::size_t found = ws.size() - (kind == "prelie" ? 0 : 1);
      if (kind == "endo-pair") found /= 2;
      out << kind << ": " << found << " fixtures written to " << path << "\n";
      return kPass;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const io::Json::exception& e) {
    err << "error: malformed entity: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lbw::cli
