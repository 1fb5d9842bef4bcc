#include "projarr/homology.hpp"

#include <stdexcept>

namespace projarr {

ZMatrix ChainComplex::boundary_at(std::size_t r) const {
  if (r < boundary.size()) return boundary[r];
  const std::size_t rows = r == 0 ? 0 : dim(r - 1);
  return ZMatrix(rows, dim(r));
}

bool is_cycle(const ChainComplex& complex, std::size_t r, const ZVector& z) {
  const ZMatrix b = complex.boundary_at(r);
  for (const auto& x : b.apply(z))
    if (x != 0) return false;
  return true;
}

HomologySummary compute_homology(const ChainComplex& complex) {
  HomologySummary out;
  for (std::size_t r = 0; r < complex.dims.size(); ++r) {
    const std::size_t n = complex.dim(r);
    DegreeHomology h;
    // Kernel of d_r: trailing columns of the right transform.
    const SNFResult outgoing = snf(complex.boundary_at(r));
    const std::size_t rho = outgoing.rank;
    const std::size_t m = n - rho;

    // Incoming boundaries in kernel coordinates.
    const ZMatrix incoming = complex.boundary_at(r + 1);
    const ZMatrix w = outgoing.Vt_inv * incoming;
    ZMatrix in_kernel(m, incoming.cols());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < incoming.cols(); ++j) in_kernel(i, j) = w(rho + i, j);
    const SNFResult rel = snf(in_kernel);

    // Generator i of the cokernel is column i of P^{-1}, pushed through the kernel basis.
    std::vector<std::size_t> free_idx, torsion_idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (i >= rel.rank)
        free_idx.push_back(i);
      else if (rel.D(i, i) != 1)
        torsion_idx.push_back(i);
    }
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), torsion_idx.begin(), torsion_idx.end());

    h.free_rank = free_idx.size();
    h.coordinatizer = ZMatrix(order.size(), n);
    for (std::size_t g = 0; g < order.size(); ++g) {
      const std::size_t i = order[g];
      ZVector gen(n);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < m; ++t)
          if (rel.U_inv(t, i) != 0) gen[s] += outgoing.Vt(s, rho + t) * rel.U_inv(t, i);
      // coordinatizer row: (P * Vt_inv[rho:, :]) row i
      ZVector row(n);
      for (std::size_t t = 0; t < m; ++t) {
        if (rel.U(i, t) == 0) continue;
        for (std::size_t s = 0; s < n; ++s) row[s] += rel.U(i, t) * outgoing.Vt_inv(rho + t, s);
      }
      std::size_t lead = 0;
      while (lead < n && gen[lead] == 0) ++lead;
      if (lead < n && gen[lead] < 0) {
        for (auto& x : gen) x = -x;
        for (auto& x : row) x = -x;
      }
      const Integer ord = i >= rel.rank ? Integer(0) : rel.D(i, i);
      if (ord != 0) h.torsion.push_back(ord);
      h.orders.push_back(ord);
      h.generators.push_back(std::move(gen));
      for (std::size_t s = 0; s < n; ++s) h.coordinatizer(g, s) = row[s];
    }
    out.degrees.push_back(std::move(h));
  }
  return out;
}

ZVector homology_coordinates(const ChainComplex& complex, const HomologySummary& hom, std::size_t r,
                             const ZVector& z) {
  if (!is_cycle(complex, r, z)) throw std::invalid_argument("chain is not a cycle");
  if (r >= hom.degrees.size()) return {};
  const auto& h = hom.degrees[r];
  ZVector coords = h.coordinatizer.apply(z);
  for (std::size_t g = 0; g < coords.size(); ++g)
    if (h.orders[g] != 0) {
      coords[g] %= h.orders[g];
      if (coords[g] < 0) coords[g] += h.orders[g];
    }
  return coords;
}

}  // namespace projarr
