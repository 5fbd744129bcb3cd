//! Split root systems, character/cocharacter lattices, Weyl groups and
//! parabolic bookkeeping for types A-D, G2, F4, E6, E7 and products with
//! central tori.
//!
//! All realizations are chosen so the standard dot product is W-invariant:
//! orthonormal coordinates for the classical types, the usual R^4 and R^8
//! realizations for F4 and E6/E7 (half-integer entries are exact
//! rationals). Downstream modules inherit these coordinates, so character
//! pairings are plain dot products.

mod datum;
mod weyl;

pub use datum::{build_root_datum, ParabolicIndex, PositiveRoot, RootDatum, RootSysError};
pub use weyl::{
    min_double_coset_rep, reduced_word_of, weyl_order, PairingOrbit, WeylElement, WeylGroup,
};
