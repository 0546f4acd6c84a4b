//! Dimension formulas for p-rank strata of double covers of a fixed elliptic
//! curve E, of bielliptic curves and of hyperelliptic curves, and the
//! combinatorics of the boundary of the double-cover locus.
//!
//! Everything here is integer arithmetic with strict validity windows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    /// Double covers of a fixed E.
    #[serde(rename = "B_Eg")]
    BEg,
    /// Bielliptic curves.
    #[serde(rename = "B_g")]
    Bg,
    /// Hyperelliptic curves.
    #[serde(rename = "H_g")]
    Hg,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Space::BEg => "B_Eg",
            Space::Bg => "B_g",
            Space::Hg => "H_g",
        })
    }
}

impl std::str::FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B_Eg" | "BEg" | "beg" => Ok(Space::BEg),
            "B_g" | "Bg" | "bg" => Ok(Space::Bg),
            "H_g" | "Hg" | "hg" => Ok(Space::Hg),
            _ => Err(Error::InvalidArgument(format!("unknown space {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumQuery {
    pub g: i64,
    pub f: i64,
    pub f_e: i64,
    pub space: Space,
}

impl StratumQuery {
    /// Inclusive range of admissible p-ranks f.
    pub fn window(&self) -> (i64, i64) {
        match self.space {
            Space::BEg => (self.f_e, self.g - 1 + self.f_e),
            Space::Bg | Space::Hg => (0, self.g),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.g < 2 {
            return Err(Error::OutOfWindow(format!("genus {} < 2", self.g)));
        }
        if !(0..=1).contains(&self.f_e) {
            return Err(Error::OutOfWindow(format!("f_E = {} not in {{0, 1}}", self.f_e)));
        }
        let (lo, hi) = self.window();
        if !(lo..=hi).contains(&self.f) {
            return Err(Error::OutOfWindow(format!(
                "f = {} outside {lo}..={hi} for {} at g = {}, f_E = {}",
                self.f, self.space, self.g, self.f_e
            )));
        }
        Ok(())
    }
}

/// Dimension of the p-rank <= f locus.
pub fn stratum_dim(q: &StratumQuery) -> Result<i64> {
    q.validate()?;
    Ok(match q.space {
        Space::BEg => q.g - 2 + q.f - q.f_e,
        Space::Bg => q.g - 2 + q.f,
        Space::Hg => q.g - 1 + q.f,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    /// Unramified over the node.
    Xi,
    /// Ramified over the node.
    Delta,
    /// Compact-type part of Xi_{1, g-2}.
    #[serde(rename = "delta_ct")]
    DeltaCt,
    /// Complement of the compact-type part in Xi_{1, g-2}.
    #[serde(rename = "xi_nct")]
    XiNct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComponent {
    pub kind: ComponentKind,
    pub g: i64,
    pub g1: i64,
    pub g2: i64,
    /// Dimension of the component itself (2g - 4).
    pub dim: i64,
    /// Boundary divisors of the moduli of stable curves containing it.
    pub contained_in: Vec<String>,
    /// For Xi_{1, g-2}: its compact-type and non-compact-type parts.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<BoundaryComponent>,
}

impl BoundaryComponent {
    pub fn name(&self) -> String {
        let sym = match self.kind {
            ComponentKind::Xi => "Xi",
            ComponentKind::Delta => "Delta",
            ComponentKind::DeltaCt => "delta",
            ComponentKind::XiNct => "xi",
        };
        format!("{sym}_{{{},{}}}", self.g1, self.g2)
    }

    /// Inclusive window of f for the p-rank stratum of this component.
    pub fn prank_window(&self, f_e: i64) -> (i64, i64) {
        let g = self.g;
        match self.kind {
            ComponentKind::DeltaCt => (2 * f_e, g - 2 + 2 * f_e),
            ComponentKind::XiNct => (f_e + 1, g - 1 + f_e),
            ComponentKind::Xi | ComponentKind::Delta => (f_e, g - 1 + f_e),
        }
    }

    /// Dimension of the p-rank <= f locus inside this component. The split
    /// Xi_{1, g-2} has no single formula; query its parts.
    pub fn prank_dim(&self, f: i64, f_e: i64) -> Result<i64> {
        if !(0..=1).contains(&f_e) {
            return Err(Error::OutOfWindow(format!("f_E = {f_e} not in {{0, 1}}")));
        }
        if !self.parts.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "{} is split; query its parts",
                self.name()
            )));
        }
        let (lo, hi) = self.prank_window(f_e);
        if !(lo..=hi).contains(&f) {
            return Err(Error::OutOfWindow(format!(
                "f = {f} outside {lo}..={hi} for {}",
                self.name()
            )));
        }
        let g = self.g;
        Ok(match self.kind {
            ComponentKind::DeltaCt => g - 2 + f - 2 * f_e,
            _ => g - 3 + f - f_e,
        })
    }
}

fn delta_name(i: i64) -> String {
    format!("Delta_{i}")
}

/// Xi_{g1, g-1-g1} for g1 = 1..g-1 then Delta_{g1, g-g1} for g1 = 2..g-1;
/// Xi_{1, g-2} carries its split into delta_{1, g-2} and xi_{1, g-2}.
pub fn boundary_components(g: i64) -> Result<Vec<BoundaryComponent>> {
    if g < 2 {
        return Err(Error::OutOfWindow(format!("genus {g} < 2")));
    }
    let dim = 2 * g - 4;
    let mut out = Vec::new();
    for g1 in 1..g {
        let g2 = g - 1 - g1;
        let mut c = BoundaryComponent {
            kind: ComponentKind::Xi,
            g,
            g1,
            g2,
            dim,
            contained_in: Vec::new(),
            parts: Vec::new(),
        };
        if g1 == 1 {
            let mut delta_in = vec![delta_name(1)];
            if g == 4 {
                delta_in.push(delta_name(2));
            }
            c.parts = vec![
                BoundaryComponent {
                    kind: ComponentKind::DeltaCt,
                    contained_in: delta_in,
                    ..c.clone()
                },
                BoundaryComponent {
                    kind: ComponentKind::XiNct,
                    contained_in: vec![delta_name(0)],
                    ..c.clone()
                },
            ];
        } else {
            c.contained_in = vec![delta_name(0)];
        }
        out.push(c);
    }
    for g1 in 2..g {
        let g2 = g - g1;
        out.push(BoundaryComponent {
            kind: ComponentKind::Delta,
            g,
            g1,
            g2,
            dim,
            contained_in: vec![delta_name(g1.min(g2))],
            parts: Vec::new(),
        });
    }
    Ok(out)
}

/// Whether a smooth genus-g double cover of an elliptic curve of p-rank f_e
/// can have p-rank f.
pub fn smooth_cover_exists(p: u64, g: i64, f: i64, f_e: i64) -> Result<bool> {
    if p <= 2 || !crate::ff::is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} is not an odd prime")));
    }
    if g < 2 {
        return Err(Error::OutOfWindow(format!("genus {g} < 2")));
    }
    match f_e {
        1 => Ok((1..=g).contains(&f)),
        0 => Ok((0..g).contains(&f) && !(p == 3 && g == 2 && f == 0)),
        _ => Err(Error::OutOfWindow(format!("f_E = {f_e} not in {{0, 1}}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(g: i64, f: i64, f_e: i64, space: Space) -> StratumQuery {
        StratumQuery { g, f, f_e, space }
    }

    #[test]
    fn dims() {
        assert_eq!(stratum_dim(&q(2, 0, 0, Space::BEg)).unwrap(), 0);
        assert_eq!(stratum_dim(&q(2, 1, 1, Space::BEg)).unwrap(), 0);
        assert_eq!(stratum_dim(&q(4, 2, 0, Space::BEg)).unwrap(), 4);
        assert!(matches!(
            stratum_dim(&q(3, 5, 1, Space::BEg)),
            Err(Error::OutOfWindow(_))
        ));
        assert!(stratum_dim(&q(1, 0, 0, Space::Hg)).is_err());
        assert_eq!(stratum_dim(&q(3, 3, 0, Space::Hg)).unwrap(), 5);
    }

    #[test]
    fn boundary_lists() {
        let b2 = boundary_components(2).unwrap();
        assert_eq!(b2.len(), 1);
        assert_eq!(b2[0].name(), "Xi_{1,0}");
        let parts: Vec<_> = b2[0].parts.iter().map(|c| c.name()).collect();
        assert_eq!(parts, ["delta_{1,0}", "xi_{1,0}"]);

        let names: Vec<_> = boundary_components(4).unwrap().iter().map(|c| c.name()).collect();
        assert_eq!(
            names,
            ["Xi_{1,2}", "Xi_{2,1}", "Xi_{3,0}", "Delta_{2,2}", "Delta_{3,1}"]
        );
        let b4 = boundary_components(4).unwrap();
        assert_eq!(b4[0].parts[0].contained_in, ["Delta_1", "Delta_2"]);
        assert_eq!(b4[4].contained_in, ["Delta_1"]);

        let b3 = boundary_components(3).unwrap();
        let d21 = b3.iter().find(|c| c.name() == "Delta_{2,1}").unwrap();
        for f in 0..=2 {
            assert_eq!(d21.prank_dim(f, 0).unwrap(), f);
        }
    }

    #[test]
    fn existence() {
        assert!(!smooth_cover_exists(3, 2, 0, 0).unwrap());
        assert!(smooth_cover_exists(3, 3, 0, 0).unwrap());
        assert!(smooth_cover_exists(5, 2, 0, 0).unwrap());
        assert!(!smooth_cover_exists(5, 2, 0, 1).unwrap());
        assert!(smooth_cover_exists(4, 2, 0, 0).is_err());
    }
}
