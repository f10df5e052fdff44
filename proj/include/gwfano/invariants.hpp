#pragma once

#include <vector>

#include "gwfano/hypergeometric.hpp"
#include "gwfano/multidegree.hpp"
#include "gwfano/qseries.hpp"

namespace gwfano {

struct InvariantOptions {
  int extra_order = 0;  // q-truncation beyond max_b
  int window_pad = 0;   // auxiliary window padding
  ThetaRoute theta_route = ThetaRoute::Lemma;
};

struct InvariantRow {
  int b = 0;
  int insertion_power = 1;
  Rat type_a, type_b, standard, reduced, difference;
  bool consistent = false;
};

// Genus-1 one-point invariants <h^{1+nu b}>_{1,b} for 0 <= b <= max_b.
class InvariantEngine {
 public:
  // max_b < 0 means the full range 0..md.max_b().
  explicit InvariantEngine(const MultiDegree& md, int max_b = -1, InvariantOptions opts = {});

  const MultiDegree& md() const { return h_.md(); }
  const Hyper& hyper() const { return h_; }
  int max_b() const { return max_b_; }

  QSeries A_series() const;
  // Same series as an iterated residue over the R_p = e^{-mu/hbar} Ftilde_p,
  // expanded with |hbar_2| < |hbar_1|.
  QSeries A_double_residue() const;

  Rat type_A(int b) const;
  // n/24-weighted block built from c~, L and Phi_0.
  Rat block(int b) const;
  // -(prod d/24) Res_w (1+w)^n (c~_{p,0} + c~_{p,1} w) / (w^{n-r} prod(1+d w))
  Rat residue_row(int b) const;
  // Coeff_{q^b} Coeff_{w^{n-2-r}} (1+w)^n (F - F_p) / (F prod(1+d w)), p = 1+nu b;
  // tilde selects the Ftilde w-presentation.
  Rat svr_core(int b, bool tilde) const;
  Rat type_B(int b) const;
  Rat svr_difference(int b) const;
  Rat standard(int b) const;
  Rat reduced(int b) const;
  // type_B from the residues at hbar = 0, infinity (b >= 1).
  Rat type_B_lemma_oracle(int b) const;

  InvariantRow row(int b) const;
  std::vector<InvariantRow> rows() const;

 private:
  void check_b(int b) const;
  const QSeries& phi0() const;

  Hyper h_;
  InvariantOptions opts_;
  int max_b_;
  QSeries A_;
};

// -(prod d/24) [h^{dim-1}] (1+h)^n / prod(1+d_k h)
Rat chern_degree0_oracle(const MultiDegree& md);

}  // namespace gwfano
