#pragma once

// JSON encodings of permutations, fields, Hecke elements, quivers and modules, and DOT export of
// the quiver.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "algebra_rep.hpp"
#include "basic_block.hpp"
#include "field_spec.hpp"
#include "hecke_algebra.hpp"
#include "permutation.hpp"

namespace hecke {

using nlohmann::ordered_json;

inline ordered_json to_json(const Permutation& w) { return w.one_line(); }

inline ordered_json to_json(const FieldSpec& f) {
  return ordered_json{{"kind", f.kind == FieldKind::cyclotomic ? "cyclo" : "gf"}, {"l", f.l}, {"p", f.p}, {"k", f.k},
                      {"modulus", f.modulus}, {"q", f.q}};
}

template <FieldScalar S>
ordered_json to_json(const HeckeElement<S>& h) {
  const auto& H = h.algebra();
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : h.terms()) terms.push_back({{"perm", to_json(H.permutation(w))}, {"coef", c.str()}});
  return {{"n", H.degree()}, {"terms", std::move(terms)}};
}

template <FieldScalar S>
HeckeElement<S> hecke_element_from_json(const HeckePtr<S>& H, const ordered_json& j) {
  if (j.at("n").get<int>() != H->degree()) throw std::invalid_argument("hecke element: degree mismatch");
  std::vector<std::pair<BasisIndex, S>> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(H->index_of(Permutation(t.at("perm").get<std::vector<int>>())),
                       H->field().parse(t.at("coef").get<std::string>()));
  return HeckeElement<S>(H, std::move(terms));
}

template <FieldScalar S>
ordered_json to_json(const QuiverPresentation<S>& p) {
  ordered_json arrows = ordered_json::array();
  for (const auto& a : p.arrows)
    arrows.push_back({{"name", a.name},
                      {"src", a.source},
                      {"dst", a.target},
                      {"representative", to_json(a.representative)},
                      {"element", to_json(a.element)}});
  ordered_json rescale = ordered_json::object();
  for (const auto& [r, a] : p.rescale) rescale["a_" + std::to_string(r)] = a.str();
  return {{"l", p.l},           {"field", to_json(p.field)},        {"vertices", p.vertices},
          {"arrows", arrows},   {"relations", p.relations},         {"zero_paths", p.zero_paths},
          {"rescale", rescale}, {"dimension", p.dimension}};
}

template <FieldScalar S>
std::string to_dot(const QuiverPresentation<S>& p) {
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (int v : p.vertices) out << "  " << v << " [label=\"eps_" << v << "\"];\n";
  for (const auto& a : p.arrows) out << "  " << a.source << " -> " << a.target << " [label=\"" << a.name << "\"];\n";
  out << "}\n";
  return out.str();
}

template <FieldScalar S>
ordered_json to_json(const Matrix<S>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <FieldScalar S>
ordered_json to_json(const ModuleRep<S>& M) {
  ordered_json gens = ordered_json::array();
  for (std::size_t g = 0; g < M.action().size(); ++g)
    gens.push_back({{"label", M.algebra().generators()[g]}, {"matrix", to_json(M.action()[g])}});
  return {{"algebra", M.algebra().label()}, {"dim", M.dim()}, {"generators", std::move(gens)}};
}

template <FieldScalar S>
ModuleRep<S> module_from_json(const AlgebraPtr<S>& A, const ordered_json& j) {
  if (j.at("algebra").get<std::string>() != A->label()) throw std::invalid_argument("module: algebra label mismatch");
  const auto d = j.at("dim").get<std::size_t>();
  std::vector<Matrix<S>> act(A->num_generators());
  std::vector<char> seen(A->num_generators(), 0);
  for (const auto& g : j.at("generators")) {
    const int idx = A->generator_index(g.at("label").get<std::string>());
    const auto& rows = g.at("matrix");
    if (rows.size() != d) throw std::invalid_argument("module: matrix has wrong row count");
    Matrix<S> m(d, d, A->field().zero());
    for (std::size_t a = 0; a < d; ++a) {
      if (rows[a].size() != d) throw std::invalid_argument("module: matrix has wrong column count");
      for (std::size_t b = 0; b < d; ++b) m(a, b) = A->field().parse(rows[a][b].get<std::string>());
    }
    act[idx] = std::move(m);
    seen[idx] = 1;
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g]) throw std::invalid_argument("module: no matrix for generator " + A->generators()[g]);
  return ModuleRep<S>(A, d, std::move(act));
}

}  // namespace hecke
