#pragma once

#include "tricover/eo.hpp"
#include "tricover/newton.hpp"

namespace tricover {

/// Stratum of A_g cut out by a Newton polygon or Ekedahl-Oort type,
/// measured against dim M_g = 3g-3 and dim A_g = g(g+1)/2.
struct StratumReport {
  Int genus = 0;
  Int stratum_dim = 0;
  Int ambient_dim = 0;  // g(g+1)/2
  Int codim = 0;
  Int mg_dim = 0;  // 3g-3
  bool unlikely = false;      // codim > 3g-3
  bool two_unlikely = false;  // codim > 2(3g-3)
  bool operator==(const StratumReport&) const = default;
};

// dim A_g[xi] = #{(x,y) integral : y < x <= g, (x,y) on or above xi}.
Int np_stratum_dim(const NewtonPolygon& np);

// dim A_g[xi] = sum nu_i.
Int eo_stratum_dim(const FinalType& ft);

StratumReport classify(const NewtonPolygon& np, Int g);
StratumReport classify(const FinalType& ft, Int g);

}  // namespace tricover
