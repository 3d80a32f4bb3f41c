//! Parametric generators for the two Stein structures on the twisted
//! two-handle pages, the zero-rotation reference pages Y_n, and their
//! boundary connected sums.
//!
//! Both variants produce a page with `b_2 = 2` whose attaching circles have
//! rotation numbers `(0, m0 - 2)` (variant A, which needs `m1` odd) or
//! `(0, p(m1 - 1) + m0 - 2)` (variant B, no parity condition). The attaching
//! links themselves are not recoverable combinatorially, so the generators
//! realize the invariants by stabilized unknots with front sources attached;
//! the supported contact 5-manifold depends only on the rotation vector and
//! `b_2`, so nothing downstream can tell the difference.

use crate::handlebody::{HandlebodyError, SteinHandlebody};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{field} must be {requirement}, got {got}")]
    Constraint {
        field: &'static str,
        requirement: &'static str,
        got: i64,
    },
    #[error("n must be >= 1 for Y_n, got {got}")]
    YnSize { got: usize },
    #[error("rotation number p(m1-1)+m0-2 overflows the exact integer range")]
    Overflow,
    #[error(transparent)]
    Handlebody(#[from] HandlebodyError),
}

/// Which of the two Stein structures the generator equips the page with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    A,
    B,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::A => f.write_str("A"),
            Variant::B => f.write_str("B"),
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            other => Err(format!("variant must be A or B, got `{other}`")),
        }
    }
}

/// Validated parameters `(m0, m1, m2, p)` plus the boundary-sum size `n`
/// (`n = 0` means the bare page).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub variant: Variant,
    pub p: i64,
    pub m0: i64,
    pub m1: i64,
    pub m2: i64,
    pub n: usize,
}

impl FamilyParams {
    pub fn new(
        variant: Variant,
        p: i64,
        m: (i64, i64, i64),
        n: usize,
    ) -> Result<Self, FamilyError> {
        let (m0, m1, m2) = m;
        let constraint = |field, requirement, got| FamilyError::Constraint {
            field,
            requirement,
            got,
        };
        if m0 < 2 {
            return Err(constraint("m0", ">= 2", m0));
        }
        if m1 < 1 {
            return Err(constraint("m1", ">= 1", m1));
        }
        if m2 < 1 {
            return Err(constraint("m2", ">= 1", m2));
        }
        if p < 1 {
            return Err(constraint("p", ">= 1", p));
        }
        if variant == Variant::A && m1 % 2 == 0 {
            return Err(constraint("m1", "odd for variant A", m1));
        }
        Ok(FamilyParams {
            variant,
            p,
            m0,
            m1,
            m2,
            n,
        })
    }

    /// Rotation numbers of the two attaching circles of the page.
    pub fn page_rotations(&self) -> Result<[i64; 2], FamilyError> {
        let second = match self.variant {
            Variant::A => self.m0 - 2,
            Variant::B => self
                .p
                .checked_mul(self.m1 - 1)
                .and_then(|t| t.checked_add(self.m0 - 2))
                .ok_or(FamilyError::Overflow)?,
        };
        Ok([0, second])
    }

    /// The two-handle page with this variant's Stein structure: rotation
    /// vector `(0, m0 - 2)` or `(0, p(m1 - 1) + m0 - 2)`, realized by
    /// stabilized unknots with fronts attached.
    pub fn generate_page(&self) -> Result<SteinHandlebody, FamilyError> {
        let rots = self.page_rotations()?;
        Ok(SteinHandlebody::from_rotations(&rots)?)
    }

    /// The page when `n = 0`, otherwise its boundary connected sum with Y_n.
    pub fn generate(&self) -> Result<SteinHandlebody, FamilyError> {
        let page = self.generate_page()?;
        if self.n == 0 {
            Ok(page)
        } else {
            Ok(page.boundary_connected_sum(&generate_yn(self.n)?))
        }
    }

    /// Degenerate-parameter notes surfaced in reports. `m2` never affects an
    /// invariant and `m1 = 1` kills the p-dependence of variant B.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.variant == Variant::B && self.m1 == 1 {
            out.push(
                "m1=1 is degenerate: the rotation divisor is m0-2 for every p".to_string(),
            );
        }
        out
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "variant={} p={} m={},{},{} n={}",
            self.variant, self.p, self.m0, self.m1, self.m2, self.n
        )
    }
}

/// Y_n: n 2-handles along pairwise unlinked standard Legendrian unknots,
/// each with tb -1, rotation number 0 and framing -2.
pub fn generate_yn(n: usize) -> Result<SteinHandlebody, FamilyError> {
    if n == 0 {
        return Err(FamilyError::YnSize { got: n });
    }
    Ok(SteinHandlebody::from_rotations(&vec![0i64; n])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(variant: Variant, p: i64, m: (i64, i64, i64), n: usize) -> FamilyParams {
        FamilyParams::new(variant, p, m, n).unwrap()
    }

    #[test]
    fn variant_a_page_rotations() {
        for p in [1, 7, 50] {
            let x = params(Variant::A, p, (5, 3, 1), 0).generate_page().unwrap();
            assert_eq!(x.c1_cochain().entries(), &[0, 3]);
            assert_eq!(x.b2(), 2);
        }
    }

    #[test]
    fn variant_b_page_rotations() {
        let x = params(Variant::B, 2, (2, 3, 1), 0).generate_page().unwrap();
        assert_eq!(x.c1_cochain().entries(), &[0, 4]);

        let x = params(Variant::B, 1, (3, 2, 2), 0).generate_page().unwrap();
        assert_eq!(x.c1_cochain().entries(), &[0, 2]);
    }

    #[test]
    fn constraints_are_named() {
        let err = FamilyParams::new(Variant::A, 1, (1, 3, 1), 0).unwrap_err();
        assert_eq!(err.to_string(), "m0 must be >= 2, got 1");

        assert!(FamilyParams::new(Variant::A, 1, (2, 0, 1), 0).is_err());
        assert!(FamilyParams::new(Variant::A, 1, (2, 3, 0), 0).is_err());
        assert!(FamilyParams::new(Variant::A, 0, (2, 3, 1), 0).is_err());

        let err = FamilyParams::new(Variant::A, 1, (2, 2, 1), 0).unwrap_err();
        assert_eq!(err.to_string(), "m1 must be odd for variant A, got 2");
        // Variant B has no parity condition.
        assert!(FamilyParams::new(Variant::B, 1, (2, 2, 1), 0).is_ok());
    }

    #[test]
    fn yn_reference_pages() {
        let y = generate_yn(1).unwrap();
        assert_eq!(y.handles()[0].tb(), -1);
        assert_eq!(y.handles()[0].rot(), 0);

        let y = generate_yn(4).unwrap();
        assert_eq!(y.c1_cochain().entries(), &[0, 0, 0, 0]);
        assert_eq!(y.rotation_divisor(), 0);

        let y2 = generate_yn(2).unwrap();
        assert_eq!(
            y2.intersection_form().unwrap(),
            vec![vec![-2, 0], vec![0, -2]]
        );

        assert!(matches!(generate_yn(0), Err(FamilyError::YnSize { got: 0 })));
    }

    #[test]
    fn boundary_sums() {
        let x = params(Variant::A, 1, (4, 3, 1), 2).generate().unwrap();
        assert_eq!(x.c1_cochain().entries(), &[0, 2, 0, 0]);
        assert_eq!(x.b2(), 4);
        assert_eq!(x.rotation_divisor(), 2);

        let x = params(Variant::B, 3, (2, 2, 1), 1).generate().unwrap();
        assert_eq!(x.c1_cochain().entries(), &[0, 3, 0]);
        assert_eq!(x.b2(), 3);
    }

    #[test]
    fn variant_a_divisor_ignores_p() {
        for m0 in 2..=8 {
            let divisors: Vec<i64> = (1..=15)
                .map(|p| {
                    params(Variant::A, p, (m0, 3, 1), 0)
                        .generate_page()
                        .unwrap()
                        .rotation_divisor()
                })
                .collect();
            assert!(divisors.iter().all(|&d| d == m0 - 2));
        }
    }

    #[test]
    fn variant_b_divisor_increases_in_p() {
        let divisors: Vec<i64> = (1..=15)
            .map(|p| {
                params(Variant::B, p, (2, 3, 1), 0)
                    .generate_page()
                    .unwrap()
                    .rotation_divisor()
            })
            .collect();
        assert!(divisors.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn degenerate_m1_warns() {
        let pr = params(Variant::B, 5, (4, 1, 1), 0);
        assert_eq!(pr.warnings().len(), 1);
        assert_eq!(pr.generate_page().unwrap().rotation_divisor(), 2);
        assert!(params(Variant::B, 5, (4, 2, 1), 0).warnings().is_empty());
    }

    #[test]
    fn generated_handles_are_front_backed() {
        let x = params(Variant::B, 4, (3, 4, 2), 1).generate().unwrap();
        let front = x.front().expect("generators attach fronts");
        for h in x.handles() {
            let c = h.source().expect("generators attach sources");
            assert_eq!(front.thurston_bennequin(c).unwrap(), h.tb());
            assert_eq!(front.rotation_number(c).unwrap(), h.rot());
        }
    }
}
