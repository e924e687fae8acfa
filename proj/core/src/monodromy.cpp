#include "stz/monodromy.hpp"

#include <algorithm>

namespace stz {

EdgeTransport transport(const Origami& o, Sl2Letter letter) {
  int n = o.squares();
  Origami target = apply_generator(o, letter);
  IntMat m(2 * n, 2 * n);
  const Permutation& h = o.h();
  const Permutation& v = o.v();
  switch (letter) {
    case Sl2Letter::T:
      for (int s = 0; s < n; ++s) {
        m(s, s) += 1;                  // sigma_s -> sigma'_s
        m(s, n + s) += 1;              // zeta_s -> sigma'_s + zeta'_h(s)
        m(n + h(s), n + s) += 1;
      }
      break;
    case Sl2Letter::Tinv: {
      Permutation hinv = h.inverse();
      for (int s = 0; s < n; ++s) {
        int hs = hinv(s);
        m(s, s) += 1;                  // sigma_s -> sigma'_s
        m(n + hs, n + s) += 1;         // zeta_s -> zeta'_{h^-1(s)} - sigma'_{h^-1(s)}
        m(hs, n + s) -= 1;
      }
      break;
    }
    case Sl2Letter::S:
      for (int s = 0; s < n; ++s) {
        m(n + s, n + s) += 1;          // zeta_s -> zeta'_s
        m(n + s, s) += 1;              // sigma_s -> zeta'_s + sigma'_v(s)
        m(v(s), s) += 1;
      }
      break;
    case Sl2Letter::Sinv: {
      Permutation vinv = v.inverse();
      for (int s = 0; s < n; ++s) {
        int vs = vinv(s);
        m(n + s, n + s) += 1;          // zeta_s -> zeta'_s
        m(vs, s) += 1;                 // sigma_s -> sigma'_{v^-1(s)} - zeta'_{v^-1(s)}
        m(n + vs, s) -= 1;
      }
      break;
    }
  }
  return EdgeTransport(std::move(target), std::move(m));
}

namespace {

// Isomorphisms from `from` onto `to`: relabelings phi with
// (phi h phi^-1, phi v phi^-1) = pair of `to`.
std::vector<Permutation> pair_isomorphisms(const Origami& from, const Origami& to) {
  int n = from.squares();
  std::vector<Permutation> out;
  if (to.squares() != n) return out;
  for (int target = 0; target < n; ++target) {
    std::vector<int> phi(n, -1);
    phi[0] = target;
    std::vector<int> queue = {0};
    bool ok = true;
    for (size_t head = 0; head < queue.size() && ok; ++head) {
      int x = queue[head];
      struct Step {
        const Permutation *src, *dst;
      };
      for (auto [src, dst] : {Step{&from.h(), &to.h()}, Step{&from.v(), &to.v()}}) {
        int y = (*src)(x);
        int img = (*dst)(phi[x]);
        if (phi[y] < 0) {
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    for (int x : phi) {
      if (x < 0 || hit[x]) {
        ok = false;
        break;
      }
      hit[x] = true;
    }
    if (ok) out.emplace_back(phi);
  }
  return out;
}

}  // namespace

std::vector<MonodromyMatrix> affine_lifts(const HomologySpace& space, const Sl2Mat& m) {
  if (m.det() != 1) throw NotUnimodular("affine_lifts: determinant must be 1");
  const Origami& o = space.origami;
  int n = o.squares();
  Sl2zWord word = sl2z_word(m);

  Origami cur = o;
  IntMat chain = IntMat::identity(2 * n);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    EdgeTransport step = transport(cur, *it);
    chain = step.matrix * chain;
    cur = step.target;
  }

  std::vector<MonodromyMatrix> lifts;
  std::vector<Permutation> conjugators = pair_isomorphisms(cur, o);
  for (size_t i = 0; i < conjugators.size(); ++i) {
    IntMat relabel(2 * n, 2 * n);
    for (int s = 0; s < n; ++s) {
      relabel(conjugators[i](s), s) = 1;
      relabel(n + conjugators[i](s), n + s) = 1;
    }
    MonodromyMatrix lift;
    lift.derivative = m;
    lift.lift_index = static_cast<int>(i);
    lift.conjugator = conjugators[i];
    lift.matrix = space.h1_coords(relabel * chain * space.h1_basis);
    lifts.push_back(std::move(lift));
  }
  return lifts;
}

IntMat restrict_to(const IntMat& m, const IntMat& basis) {
  auto coords = solve(to_rat(basis), to_rat(m * basis));
  if (!coords) throw PieceNotPreserved("matrix does not preserve the subspace");
  RatMat r = *coords;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (!is_integral(r(i, j)))
        throw PieceNotPreserved("restriction is not integral on the primitive basis");
  return to_int(r);
}

IntMat restrict_to_piece(const IsotypicDecomposition& dec, const IntMat& m, int piece) {
  const IntMat& basis = dec.pieces[piece].basis;
  try {
    return restrict_to(m, basis);
  } catch (const PieceNotPreserved&) {
    // name the piece the image actually lands in, when there is one
    IntMat image = m * basis;
    for (size_t other = 0; other < dec.pieces.size(); ++other) {
      if (static_cast<int>(other) == piece) continue;
      if (dec.pieces[other].dim() != dec.pieces[piece].dim()) continue;
      if (solve(to_rat(dec.pieces[other].basis), to_rat(image)))
        throw PieceNotPreserved("piece " + std::to_string(piece) + " is mapped onto piece " +
                                std::to_string(other));
    }
    throw;
  }
}

IntMat central_eigenspace(const IntMat& m) {
  return int_kernel(m - IntMat::identity(m.rows()));
}

bool has_simple_spectrum(const std::vector<Int>& charpoly, Int* trace_out) {
  if (charpoly.size() != 13) return false;  // degree 12
  // candidate trace from the x^11 coefficient of (x-1)^4 (x^2-tx+1)^4
  Int c11 = charpoly[11];
  if ((c11 + 4) % 4 != 0) return false;
  Int t = -(c11 + 4) / 4;
  if (abs(t) <= 2) return false;  // moduli collapse
  std::vector<Int> expected = poly_mul(poly_pow({Int(-1), Int(1)}, 4),
                                       poly_pow({Int(1), -t, Int(1)}, 4));
  if (expected != charpoly) return false;
  if (trace_out) *trace_out = t;
  return true;
}

DichotomyReport verify_dichotomy(const Origami& o, const DichotomyOptions& opts) {
  DichotomyReport report;
  HomologySpace space = absolute_h1(o);
  IsotypicDecomposition dec = isotypic_decomposition(space);
  int qp = dec.quaternionic_piece();
  if (qp < 0) {
    report.branch = "inconclusive";
    report.detail = "no quaternionic isotypic piece";
    return report;
  }
  const IsotypicPiece& piece = dec.pieces[qp];
  report.piece_found = true;
  report.piece_dim = piece.dim();
  report.piece_multiplicity = piece.multiplicity;
  if (piece.multiplicity < 2) {
    report.branch = "SO*(2) forced";
    report.detail = "piece too small, SO*(2) forced";
    report.concluded = true;
    return report;
  }
  if (piece.multiplicity != 3 || piece.dim() != 12) {
    report.branch = "inconclusive";
    report.detail = "dichotomy search is specific to a 12-dimensional piece of multiplicity 3";
    return report;
  }

  const Sl2Mat da{4, -3, 3, -2};
  const Sl2Mat db{10, 27, -3, -8};
  const Sl2Mat dc{-8, -3, 27, 10};

  auto restricted_lifts = [&](const Sl2Mat& d) {
    std::vector<IntMat> out;
    for (const MonodromyMatrix& lift : affine_lifts(space, d))
      out.push_back(restrict_to(lift.matrix, piece.basis));
    return out;
  };

  std::vector<IntMat> a_lifts = restricted_lifts(da);
  std::vector<IntMat> b_lifts = restricted_lifts(db);
  std::vector<IntMat> c_lifts = restricted_lifts(dc);

  struct Witness {
    IntMat central;  // eigenvalue-1 space of the product
    int left = 0, right = 0;
  };
  auto try_product = [&](const std::string& name, const IntMat& left, int li, const IntMat& right,
                         int ri, std::vector<Witness>& hits) {
    ProductTrial trial;
    trial.name = name;
    trial.left_lift = li;
    trial.right_lift = ri;
    IntMat product = left * right;
    trial.charpoly = char_poly(product);
    trial.simple = has_simple_spectrum(trial.charpoly);
    IntMat central = central_eigenspace(product);
    trial.central_dim = central.cols();
    if (trial.simple && trial.central_dim == 4) hits.push_back({central, li, ri});
    report.trials.push_back(std::move(trial));
  };

  // the two products share the lift b, as the irreducibility argument uses them
  for (size_t bi = 0; bi < b_lifts.size(); ++bi) {
    std::vector<Witness> ab_hits, cb_hits;
    if (opts.test_ab)
      for (size_t ai = 0; ai < a_lifts.size(); ++ai)
        try_product("A*B", a_lifts[ai], static_cast<int>(ai), b_lifts[bi], static_cast<int>(bi),
                    ab_hits);
    if (opts.test_cb)
      for (size_t ci = 0; ci < c_lifts.size(); ++ci)
        try_product("C*B", c_lifts[ci], static_cast<int>(ci), b_lifts[bi], static_cast<int>(bi),
                    cb_hits);
    report.ab_witness = report.ab_witness || !ab_hits.empty();
    report.cb_witness = report.cb_witness || !cb_hits.empty();
    for (const Witness& ab : ab_hits)
      for (const Witness& cb : cb_hits) {
        int span = rank(ab.central.hcat(cb.central));
        report.span_dim = std::max(report.span_dim, span);
        if (span == 8) {
          report.concluded = true;
          report.branch = "SO*(6)";
          report.detail = "central eigenspaces of the two simple-spectrum products are distinct";
          return report;
        }
      }
  }

  if (!opts.test_ab || !opts.test_cb) {
    report.branch = "inconclusive";
    report.detail = "partial run: both products are needed for a conclusion";
    return report;
  }
  if (!report.ab_witness || !report.cb_witness)
    throw DichotomyInconclusive("no lift combination reproduces simple spectra");
  throw DichotomyInconclusive("simple spectra found but central eigenspaces do not separate");
}

}  // namespace stz
