#pragma once

#include <string>
#include <vector>

#include "stz/homology.hpp"
#include "stz/origami.hpp"
#include "stz/sl2z.hpp"

namespace stz {

// One letter of shear transport: the target origami and the chain map on edge
// chains (2n x 2n, sends square relations to relation combinations).
// T: sigma_s -> sigma'_s,            zeta_s -> sigma'_s + zeta'_h(s)
// S: sigma_s -> zeta'_s + sigma'_v(s), zeta_s -> zeta'_s
// with the inverse letters giving the inverse maps.
struct EdgeTransport {
  Origami target;
  IntMat matrix;

  EdgeTransport(Origami t, IntMat m) : target(std::move(t)), matrix(std::move(m)) {}
};

EdgeTransport transport(const Origami& o, Sl2Letter letter);

// Matrix of one affine homeomorphism on H1, tagged with its derivative and
// the simultaneous conjugator that closed up the transport chain.
struct MonodromyMatrix {
  Sl2Mat derivative;
  int lift_index = 0;
  Permutation conjugator;
  IntMat matrix;  // 2g x 2g on the h1 basis
};

// Every lift of the affine homeomorphism with the given derivative: decompose
// into a T/S word, chain the transports, then close up with each simultaneous
// conjugator back to o (their count is |Aut(o)|). Empty result iff the matrix
// is not in the Veech group. Errors: NotUnimodular.
std::vector<MonodromyMatrix> affine_lifts(const HomologySpace& space, const Sl2Mat& m);

// Matrix of m restricted to the span of basis (columns, primitive).
// Errors: PieceNotPreserved.
IntMat restrict_to(const IntMat& m, const IntMat& basis);

// Restriction to an isotypic piece with a diagnostic naming the image piece
// when the matrix moves it. Errors: PieceNotPreserved.
IntMat restrict_to_piece(const IsotypicDecomposition& dec, const IntMat& m, int piece);

// Integer basis of ker(m - I), primitive (columns).
IntMat central_eigenspace(const IntMat& m);

// A 12-dimensional restriction has "simple" spectrum when its characteristic
// polynomial is (x-1)^4 (x^2-tx+1)^4 with |t| > 2: three eigenvalues of
// multiplicity four with distinct moduli.
bool has_simple_spectrum(const std::vector<Int>& charpoly, Int* trace_out = nullptr);

struct DichotomyOptions {
  bool test_ab = true;
  bool test_cb = true;
};

struct ProductTrial {
  std::string name;  // "A*B" or "C*B"
  int left_lift = 0, right_lift = 0;
  std::vector<Int> charpoly;
  bool simple = false;
  int central_dim = 0;
};

struct DichotomyReport {
  bool piece_found = false;
  int piece_dim = 0;
  int piece_multiplicity = 0;
  std::vector<ProductTrial> trials;
  bool ab_witness = false, cb_witness = false;
  int span_dim = 0;
  bool concluded = false;
  std::string branch;  // "SO*(6)", "SO*(2) forced", or "inconclusive"
  std::string detail;
};

// Searches the lifts of the derivatives [[4,-3],[3,-2]], [[10,27],[-3,-8]],
// [[-8,-3],[27,10]] for products with simple spectrum on the largest
// quaternionic piece and distinct 4-dimensional central eigenspaces spanning
// 8 dimensions. Errors: DichotomyInconclusive when both products are tested
// and no lift combination has simple spectrum.
DichotomyReport verify_dichotomy(const Origami& o, const DichotomyOptions& opts = {});

}  // namespace stz
