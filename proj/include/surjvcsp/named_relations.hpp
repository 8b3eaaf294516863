#pragma once

// Frequently used relations and weighted relations.

#include "surjvcsp/relation.hpp"

namespace surjvcsp::named {

inline Relation rho0() { return Relation(1, {0}); }
inline Relation rho1() { return Relation(1, {1}); }
inline Relation rho_eq() { return Relation(2, {0b00, 0b11}); }
inline Relation rho_neq() { return Relation(2, {0b01, 0b10}); }
inline Relation rho_leq() { return Relation(2, {0b00, 0b01, 0b11}); }

/// Even-parity r-tuples.
inline Relation parity(int arity) {
  Relation r(arity);
  for (Tuple t = 0; t < table_size(arity); ++t)
    if (__builtin_popcount(t) % 2 == 0) r.insert(t);
  return r;
}
inline Relation a3() { return parity(3); }
inline Relation a4() { return parity(4); }

inline WeightedRelation crisp(const Relation& r) { return WeightedRelation::crisp(r); }

inline WeightedRelation gamma0() { return soft(rho0()); }
inline WeightedRelation gamma1() { return soft(rho1()); }
inline WeightedRelation gamma_eq() { return soft(rho_eq()); }

/// 1 iff x = 0 and y = 1.
inline WeightedRelation gamma_cut() {
  return WeightedRelation(2, {Value(0), Value(1), Value(0), Value(0)});
}

/// mu_w(x,y,z): 2 if z=1, x=y; 1 if z=1, x!=y; 0 if x=y=z=0; w otherwise.
inline WeightedRelation mu(const Value& w) {
  std::vector<Value> t(8);
  for (Tuple k = 0; k < 8; ++k) {
    const int x = coord(k, 1, 3), y = coord(k, 2, 3), z = coord(k, 3, 3);
    if (z == 1)
      t[k] = x == y ? Value(2) : Value(1);
    else
      t[k] = (x == 0 && y == 0) ? Value(0) : w;
  }
  return WeightedRelation(3, std::move(t));
}

}  // namespace surjvcsp::named
