//! Contact 5-manifolds supported by open books with Stein pages and identity
//! monodromy.
//!
//! For a page with `b_2 = n` and no 1-handles, the supported contact
//! structure is determined by the pair `(r, n)` where `r` is the rotation
//! divisor of the page; we write `zeta_{r,n}`. The underlying 5-manifold is
//! the n-fold connected sum of the trivial `S^3`-bundle over `S^2` when `r`
//! is even and of the non-trivial bundle when `r` is odd. Two such open
//! books support contactomorphic structures exactly when their labels agree,
//! and a witnessing automorphism of `H^2` carrying one c1 cochain to the
//! other can always be built.

use crate::families::{FamilyError, FamilyParams};
use crate::handlebody::SteinHandlebody;
use crate::lattice::{automorphism_mapping, LatticeError, UnimodularMatrix};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("rotation divisor {left} != {right}: pages support distinct contact structures")]
    DivisorMismatch { left: i64, right: i64 },
    #[error("b2 {left} != {right}: pages support contact structures on different 5-manifolds")]
    B2Mismatch { left: usize, right: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Diffeomorphism type of the underlying closed 5-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiffeoType {
    /// `#_n S^2 x S^3`, the trivial bundle sums (r even).
    S2xS3,
    /// `#_n S^2 x~ S^3`, the twisted bundle sums (r odd).
    S2xtS3,
}

impl fmt::Display for DiffeoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffeoType::S2xS3 => f.write_str("S2xS3"),
            DiffeoType::S2xtS3 => f.write_str("S2xtS3"),
        }
    }
}

/// The label `zeta_{r,n}` of a supported contact 5-manifold; the diffeo type
/// is derived from the parity of `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ContactLabel {
    pub r: i64,
    pub n: usize,
    pub diffeo: DiffeoType,
}

impl ContactLabel {
    pub fn new(r: i64, n: usize) -> Self {
        debug_assert!(r >= 0);
        let diffeo = if r % 2 == 0 {
            DiffeoType::S2xS3
        } else {
            DiffeoType::S2xtS3
        };
        ContactLabel { r, n, diffeo }
    }

    pub fn zeta(&self) -> String {
        format!("zeta_{{{},{}}}", self.r, self.n)
    }

    pub fn manifold(&self) -> String {
        format!("#_{} {}", self.n, self.diffeo)
    }
}

impl fmt::Display for ContactLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.zeta(), self.manifold())
    }
}

/// Monodromy of a 5-dimensional open book. Only the identity is supported;
/// the classification covers nothing else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Monodromy {
    Identity,
}

/// A 5-dimensional open book with a Stein page and identity monodromy.
#[derive(Debug, Clone)]
pub struct OpenBook5 {
    page: SteinHandlebody,
    pub monodromy: Monodromy,
}

impl OpenBook5 {
    pub fn new(page: SteinHandlebody) -> Self {
        OpenBook5 {
            page,
            monodromy: Monodromy::Identity,
        }
    }

    pub fn page(&self) -> &SteinHandlebody {
        &self.page
    }

    /// The supported contact structure: `r` the rotation divisor of the
    /// page, `n` its `b_2`, diffeo type by the parity of `r`.
    pub fn supported_contact(&self) -> ContactLabel {
        ContactLabel::new(self.page.rotation_divisor(), self.page.b2())
    }
}

/// True iff the two open books support contactomorphic 5-manifolds, i.e.
/// their labels agree.
pub fn contactomorphic(a: &OpenBook5, b: &OpenBook5) -> bool {
    a.supported_contact() == b.supported_contact()
}

/// An automorphism of `H^2 = Z^n` carrying the c1 cochain of the first page
/// to that of the second. Exists precisely when the open books are
/// contactomorphic; the matrix is not canonical, only its defining equation
/// is meaningful.
pub fn witness_automorphism(
    a: &OpenBook5,
    b: &OpenBook5,
) -> Result<UnimodularMatrix, ClassifyError> {
    let (la, lb) = (a.supported_contact(), b.supported_contact());
    if la.n != lb.n {
        return Err(ClassifyError::B2Mismatch {
            left: la.n,
            right: lb.n,
        });
    }
    if la.r != lb.r {
        return Err(ClassifyError::DivisorMismatch {
            left: la.r,
            right: lb.r,
        });
    }
    Ok(automorphism_mapping(
        &a.page.c1_cochain(),
        &b.page.c1_cochain(),
    )?)
}

/// Generates the family member and classifies it. For variant A the label is
/// `zeta_{m0-2, n+2}` for every p; for variant B it is
/// `zeta_{p(m1-1)+m0-2, n+2}`.
pub fn classify_family(params: &FamilyParams) -> Result<ContactLabel, FamilyError> {
    Ok(OpenBook5::new(params.generate()?).supported_contact())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_yn, Variant};

    fn book(page: SteinHandlebody) -> OpenBook5 {
        OpenBook5::new(page)
    }

    fn family(variant: Variant, p: i64, m: (i64, i64, i64), n: usize) -> FamilyParams {
        FamilyParams::new(variant, p, m, n).unwrap()
    }

    #[test]
    fn canonical_model_labels() {
        let ob = book(SteinHandlebody::canonical_model(3, 2).unwrap());
        let label = ob.supported_contact();
        assert_eq!((label.r, label.n), (3, 2));
        assert_eq!(label.diffeo, DiffeoType::S2xtS3);
        assert_eq!(label.to_string(), "zeta_{3,2} on #_2 S2xtS3");
    }

    #[test]
    fn yn_label() {
        let label = book(generate_yn(4).unwrap()).supported_contact();
        assert_eq!(label, ContactLabel::new(0, 4));
        assert_eq!(label.diffeo, DiffeoType::S2xS3);
    }

    #[test]
    fn variant_a_label_is_p_independent() {
        for p in [1, 7, 50] {
            let label = classify_family(&family(Variant::A, p, (5, 3, 1), 0)).unwrap();
            assert_eq!(label, ContactLabel::new(3, 2));
            assert_eq!(label.diffeo, DiffeoType::S2xtS3);
        }
    }

    #[test]
    fn classify_family_closed_forms() {
        let label = classify_family(&family(Variant::A, 3, (4, 3, 1), 0)).unwrap();
        assert_eq!(label, ContactLabel::new(2, 2));
        assert_eq!(label.diffeo, DiffeoType::S2xS3);

        let label = classify_family(&family(Variant::B, 1, (3, 2, 1), 0)).unwrap();
        assert_eq!(label, ContactLabel::new(2, 2));

        let label = classify_family(&family(Variant::B, 1, (2, 2, 1), 1)).unwrap();
        assert_eq!(label, ContactLabel::new(1, 3));
        assert_eq!(label.diffeo, DiffeoType::S2xtS3);
    }

    #[test]
    fn contactomorphy_follows_labels() {
        let a = book(family(Variant::A, 1, (5, 3, 1), 0).generate().unwrap());
        let b = book(family(Variant::A, 50, (5, 3, 1), 0).generate().unwrap());
        assert!(contactomorphic(&a, &b));
        assert!(contactomorphic(&a, &a));

        let c = book(family(Variant::B, 1, (2, 3, 1), 0).generate().unwrap());
        let d = book(family(Variant::B, 2, (2, 3, 1), 0).generate().unwrap());
        assert!(!contactomorphic(&c, &d));
    }

    #[test]
    fn witness_carries_c1_to_c1() {
        let a = book(family(Variant::A, 1, (5, 3, 1), 2).generate().unwrap());
        let b = book(family(Variant::A, 2, (5, 3, 1), 2).generate().unwrap());
        let w = witness_automorphism(&a, &b).unwrap();
        assert_eq!(
            w.apply(&a.page().c1_cochain()).unwrap(),
            b.page().c1_cochain()
        );
        assert_eq!(w.det().abs(), 1);

        let same = witness_automorphism(&a, &a).unwrap();
        assert_eq!(
            same.apply(&a.page().c1_cochain()).unwrap(),
            a.page().c1_cochain()
        );
    }

    #[test]
    fn witness_rejects_mismatches() {
        let a = book(family(Variant::B, 1, (2, 3, 1), 0).generate().unwrap());
        let b = book(family(Variant::B, 2, (2, 3, 1), 0).generate().unwrap());
        assert!(matches!(
            witness_automorphism(&a, &b),
            Err(ClassifyError::DivisorMismatch { left: 2, right: 4 })
        ));

        let c = book(generate_yn(3).unwrap());
        let d = book(generate_yn(4).unwrap());
        assert!(matches!(
            witness_automorphism(&c, &d),
            Err(ClassifyError::B2Mismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn parity_matches_diffeo() {
        for r in 0..20 {
            let label = ContactLabel::new(r, 2);
            let expect = if r % 2 == 0 {
                DiffeoType::S2xS3
            } else {
                DiffeoType::S2xtS3
            };
            assert_eq!(label.diffeo, expect);
        }
    }
}
