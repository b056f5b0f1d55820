#include "k3lat/quotient.hpp"

#include <algorithm>

#include "k3lat/errors.hpp"
#include "k3lat/kummer.hpp"

namespace k3lat {

namespace {

constexpr std::size_t kNodes = 16, kUBlock = 6, kOrbits = 15, kOrbitSize = 8;

std::size_t n_index(std::size_t i, std::size_t j) { return kNodes + kUBlock + i * kOrbitSize + j; }
std::size_t m_index(std::size_t i) { return 1 + kUBlock + i; }

std::vector<std::string> u_labels() { return {"e1", "f1", "e2", "f2", "e3", "f3"}; }

GramLattice u_blocks(long scale) {
  return direct_sum({hyperbolic_plane(scale), hyperbolic_plane(scale), hyperbolic_plane(scale)});
}

std::string pair_text(const GramLattice& a, std::size_t i, const GramLattice& b, std::size_t j) {
  return "(" + a.labels()[i] + ", " + b.labels()[j] + ")";
}

}  // namespace

GramLattice quotient_cover_lattice() {
  const std::size_t n = kNodes + kUBlock + kOrbits * kOrbitSize;
  IntMatrix g(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kNodes; ++i) {
    g(i, i) = -2;
    labels.push_back("k" + std::to_string(i + 1));
  }
  IntMatrix u = u_blocks(2).gram();
  for (std::size_t i = 0; i < kUBlock; ++i)
    for (std::size_t j = 0; j < kUBlock; ++j) g(kNodes + i, kNodes + j) = u(i, j);
  for (const auto& l : u_labels()) labels.push_back(l);
  for (std::size_t i = 0; i < kOrbits; ++i)
    for (std::size_t j = 0; j < kOrbitSize; ++j) {
      g(n_index(i, j), n_index(i, j)) = -1;
      labels.push_back("n" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  return GramLattice(g, labels, "<-2>^16+U(2)^3+(<-1>^8)^15");
}

GramLattice quotient_base_lattice() {
  const std::size_t n = 1 + kUBlock + kOrbits;
  IntMatrix g(n, n);
  std::vector<std::string> labels{"k"};
  g(0, 0) = -2;
  IntMatrix u = u_blocks(32).gram();
  for (std::size_t i = 0; i < kUBlock; ++i)
    for (std::size_t j = 0; j < kUBlock; ++j) g(1 + i, 1 + j) = u(i, j);
  for (const auto& l : u_labels()) labels.push_back(l);
  for (std::size_t i = 0; i < kOrbits; ++i) {
    g(m_index(i), m_index(i)) = -2;
    labels.push_back("m" + std::to_string(i + 1));
  }
  return GramLattice(g, labels, "<-2>+U(32)^3+<-2>^15");
}

QuotientMaps build_quotient_maps() {
  GramLattice cover = quotient_cover_lattice(), base = quotient_base_lattice();
  IntMatrix push(base.rank(), cover.rank()), pull(cover.rank(), base.rank());
  for (std::size_t i = 0; i < kNodes; ++i) {
    push(0, i) = 1;
    pull(i, 0) = 1;
  }
  for (std::size_t i = 0; i < kUBlock; ++i) {
    push(1 + i, kNodes + i) = 1;
    pull(kNodes + i, 1 + i) = 16;
  }
  for (std::size_t i = 0; i < kOrbits; ++i)
    for (std::size_t j = 0; j < kOrbitSize; ++j) {
      push(m_index(i), n_index(i, j)) = 1;
      pull(n_index(i, j), m_index(i)) = 2;
    }
  return {{push, cover, base}, {pull, base, cover}};
}

bool QuotientReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

QuotientReport verify_quotient_identities(const QuotientMaps& maps) {
  const GramLattice& cover = maps.push.source;
  const GramLattice& base = maps.push.target;
  const IntMatrix& push = maps.push.matrix;
  const IntMatrix& pull = maps.pull.matrix;
  if (push.rows() != base.rank() || push.cols() != cover.rank() || pull.rows() != cover.rank() ||
      pull.cols() != base.rank())
    throw DimensionError("quotient map shapes do not match their lattices");
  QuotientReport rep;
  auto add = [&](std::string name, std::string detail) {
    rep.checks.push_back({std::move(name), detail.empty(), std::move(detail)});
  };

  // (pull a, b)_cover = (a, push b)_base for every basis pair.
  {
    IntMatrix lhs = pull.transpose() * cover.gram();
    IntMatrix rhs = base.gram() * push;
    std::string detail;
    for (std::size_t a = 0; a < base.rank() && detail.empty(); ++a)
      for (std::size_t b = 0; b < cover.rank(); ++b)
        if (lhs(a, b) != rhs(a, b)) {
          detail = pair_text(base, a, cover, b) + ": " + to_string(lhs(a, b)) + " vs " + to_string(rhs(a, b));
          break;
        }
    add("projection_formula", detail);
  }
  {
    std::string detail;
    for (std::size_t i = 0; i < kNodes && detail.empty(); ++i) {
      IntVector img = push.col(i);
      if (img != base.basis_vector(0)) detail = cover.labels()[i] + " -> " + to_string(img);
    }
    add("push_k_i_is_k", detail);
  }
  {
    std::string detail;
    for (std::size_t i = kNodes; i < kNodes + kUBlock && detail.empty(); ++i)
      for (std::size_t j = kNodes; j < kNodes + kUBlock; ++j) {
        Integer lhs = base.pairing(push.col(i), push.col(j));
        Integer rhs = 16 * cover.gram()(i, j);
        if (lhs != rhs) {
          detail = pair_text(cover, i, cover, j) + ": " + to_string(lhs) + " vs " + to_string(rhs);
          break;
        }
      }
    add("push_scales_u_block_by_16", detail);
  }
  {
    std::string detail;
    for (std::size_t i = 0; i < kOrbits && detail.empty(); ++i)
      for (std::size_t j = 0; j < kOrbitSize; ++j) {
        Integer v = base.norm(push.col(n_index(i, j)));
        if (v != -2) {
          detail = cover.labels()[n_index(i, j)] + ": " + to_string(v);
          break;
        }
      }
    add("push_n_ij_norm_minus_2", detail);
  }
  {
    std::string detail;
    for (std::size_t i = 0; i < kOrbits && detail.empty(); ++i) {
      IntVector pm = pull.col(m_index(i));
      for (std::size_t h = 0; h < kOrbits && detail.empty(); ++h)
        for (std::size_t j = 0; j < kOrbitSize; ++j) {
          Integer v = cover.pairing(pm, cover.basis_vector(n_index(h, j)));
          if (v != (i == h ? -2 : 0)) {
            detail = pair_text(base, m_index(i), cover, n_index(h, j)) + ": " + to_string(v);
            break;
          }
        }
      for (std::size_t c = 0; c < kNodes + kUBlock && detail.empty(); ++c)
        if (cover.pairing(pm, cover.basis_vector(c)) != 0) detail = pair_text(base, m_index(i), cover, c);
    }
    add("pull_m_i_pairings", detail);
  }
  {
    IntMatrix pp = pull * push;
    std::string detail;
    for (std::size_t i = kNodes; i < kNodes + kUBlock && detail.empty(); ++i)
      for (std::size_t j = 0; j < cover.rank(); ++j)
        if (pp(j, i) != (i == j ? 16 : 0)) {
          detail = "column " + cover.labels()[i];
          break;
        }
    add("pull_push_is_16_on_u_block", detail);
  }
  {
    IntMatrix pp = push * pull;
    IntMatrix expected = IntMatrix::identity(base.rank()).scaled(Integer(16));
    std::string detail;
    if (pp != expected)
      for (std::size_t i = 0; i < base.rank() && detail.empty(); ++i)
        for (std::size_t j = 0; j < base.rank(); ++j)
          if (pp(i, j) != expected(i, j)) {
            detail = pair_text(base, i, base, j) + ": " + to_string(pp(i, j));
            break;
          }
    add("push_pull_is_16", detail);
  }
  return rep;
}

ChainReport overlattice_chain_check() {
  ChainReport rep;
  GramLattice nodes = diagonal_lattice(std::vector<long>(kNodes, -2), "k");
  GramLattice r = direct_sum({nodes, u_blocks(32)}, "R");
  GramLattice target = direct_sum({nodes, u_blocks(2)});
  const std::size_t n = r.rank();

  std::vector<RatVector> glue, basis;
  for (std::size_t i = 0; i < kNodes; ++i) {
    RatVector v(n, Rational(0));
    v[i] = 1;
    basis.push_back(v);
  }
  for (std::size_t i = 0; i < kUBlock; ++i) {
    RatVector v(n, Rational(0));
    v[kNodes + i] = Rational(1, 4);
    glue.push_back(v);
    basis.push_back(v);
  }
  Overlattice quarter = overlattice_in_basis(r, glue, basis, target.labels(), "R+quarters");
  rep.quarter_classes_generate = quarter.lattice.gram() == target.gram();

  auto step = [](std::string name, const Integer& sub, const Integer& super, const Integer& index) {
    ChainStep s{std::move(name), sub, super, index, false};
    s.consistent = sub == super * index * index;
    return s;
  };
  Integer det_r = r.invariants().abs_determinant();
  Integer det_mid = target.invariants().abs_determinant();
  rep.steps.push_back(step("R in <-2>^16+U(2)^3", det_r, det_mid, quarter.index));

  NamedLattice lambda = k3_lattice_glued();
  rep.steps.push_back(step("<-2>^16+U(2)^3 in Lambda_K3", lambda.ambient.invariants().abs_determinant(),
                           lambda.lattice().invariants().abs_determinant(), lambda.model.index));

  NamedLattice k = kummer_lattice();
  rep.steps.push_back(step("<-2>^16 in K", k.ambient.invariants().abs_determinant(),
                           k.lattice().invariants().abs_determinant(), k.model.index));

  Integer unimodular = lambda.lattice().invariants().abs_determinant();
  if (unimodular != 1) throw InternalError("glued K3 lattice is not unimodular");
  mpz_class root;
  if (!mpz_root(root.get_mpz_t(), det_r.get_mpz_t(), 2)) throw InternalError("|det R| is not a square");
  rep.total_index = root;
  rep.total_exponent = static_cast<int>(mpz_sizeinbase(root.get_mpz_t(), 2)) - 1;
  rep.closes = rep.steps[0].index * rep.steps[1].index == rep.total_index && rep.steps[0].consistent &&
               rep.steps[1].consistent;
  return rep;
}

}  // namespace k3lat
