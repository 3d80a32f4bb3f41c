//! Legendrian front diagrams, Stein handlebodies without 1-handles, and the
//! contact 5-manifolds supported by their identity-monodromy open books.
//!
//! The pipeline, bottom to top:
//!
//! * [`front`] — front diagrams as words of cusp/crossing events, with the
//!   classical invariants (Thurston-Bennequin, rotation number, linking) and
//!   stabilizations;
//! * [`lattice`] — exact integer vectors, gcd reductions and constructive
//!   unimodular automorphisms of `Z^n`;
//! * [`handlebody`] — 2-handlebodies with framing tb - 1, their c1 cochains,
//!   rotation divisors, boundary sums and canonical models;
//! * [`families`] — generators for the parametric pages `(m0, m1, m2, p)` in
//!   two Stein structures, the reference pages Y_n, and their boundary sums;
//! * [`classify`] — the label `zeta_{r,n}` of the supported contact
//!   5-manifold, contactomorphy decisions, and witness automorphisms;
//! * [`cli`] / [`report`] — the `steinobd` command-line tool and its
//!   JSON/text reports.

pub mod classify;
pub mod cli;
pub mod families;
pub mod front;
pub mod handlebody;
pub mod lattice;
pub mod report;

pub use classify::{
    classify_family, contactomorphic, witness_automorphism, ContactLabel, DiffeoType, OpenBook5,
};
pub use families::{generate_yn, FamilyParams, Variant};
pub use front::{ClassicalInvariants, FrontDiagram, FrontDocument, OrientedFront, StabSign};
pub use handlebody::{SteinHandle, SteinHandlebody};
pub use lattice::{automorphism_mapping, reduce_to_gcd, IntVector, UnimodularMatrix};
