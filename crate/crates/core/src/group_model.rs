//! Canonical-form arithmetic in the fundamental groups of the dicosm (G2)
//! and the tetracosm (G4).
//!
//! Every element is `x^a y^b z^c`; the product of two canonical forms is
//! again canonical, with the twist on the `x, y` block determined by the
//! `z`-exponent of the left factor: sign flip mod 2 for G2, quarter turn
//! mod 4 for G4.

use std::fmt;
use std::str::FromStr;

use crate::lattice::ell_pow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    G2,
    G4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub ambient: Ambient,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl GroupElement {
    pub fn new(ambient: Ambient, x: i64, y: i64, z: i64) -> Self {
        GroupElement { ambient, x, y, z }
    }

    pub fn identity(ambient: Ambient) -> Self {
        GroupElement::new(ambient, 0, 0, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z == 0
    }

    /// The action of conjugation by `z^k` on the translation block: sign
    /// flips for G2, powers of the quarter turn for G4.
    fn twist(ambient: Ambient, k: i64, x: i64, y: i64) -> (i64, i64) {
        match ambient {
            Ambient::G2 => {
                if k.rem_euclid(2) == 0 {
                    (x, y)
                } else {
                    (-x, -y)
                }
            }
            Ambient::G4 => ell_pow(k, x, y),
        }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.ambient, other.ambient, "mixed ambient groups");
        let (tx, ty) = Self::twist(self.ambient, self.z, other.x, other.y);
        GroupElement::new(
            self.ambient,
            self.x.checked_add(tx).expect("exponent overflow"),
            self.y.checked_add(ty).expect("exponent overflow"),
            self.z.checked_add(other.z).expect("exponent overflow"),
        )
    }

    pub fn inverse(&self) -> GroupElement {
        let (tx, ty) = Self::twist(self.ambient, -self.z, self.x, self.y);
        GroupElement::new(self.ambient, -tx, -ty, -self.z)
    }

    /// `by^{-1} * self * by`.
    pub fn conjugate(&self, by: &GroupElement) -> GroupElement {
        by.inverse().mul(self).mul(by)
    }

    pub fn pow(&self, mut k: i64) -> GroupElement {
        let mut base = *self;
        if k < 0 {
            base = base.inverse();
            k = -k;
        }
        let mut acc = GroupElement::identity(self.ambient);
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        acc
    }

    /// The epimorphism onto Z reading off the `z`-exponent.
    pub fn phi(&self) -> i64 {
        self.z
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} y^{} z^{}", self.x, self.y, self.z)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("malformed element notation: {0}")]
pub struct ParseElementError(String);

/// Parses the `x^a y^b z^c` notation. Factors may be omitted, a bare
/// generator means exponent 1, and ambient tagging is the caller's choice.
pub fn parse_element(ambient: Ambient, s: &str) -> Result<GroupElement, ParseElementError> {
    let mut el = GroupElement::identity(ambient);
    let mut seen = [false; 3];
    for tok in s.split_whitespace().flat_map(|t| t.split('*')) {
        if tok.is_empty() {
            continue;
        }
        let (gen, exp) = match tok.split_once('^') {
            Some((g, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| ParseElementError(format!("bad exponent in {tok:?}")))?;
                (g, exp)
            }
            None => (tok, 1),
        };
        let slot = match gen {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => return Err(ParseElementError(format!("unknown generator {gen:?}"))),
        };
        if seen[slot] {
            return Err(ParseElementError(format!("repeated generator {gen:?}")));
        }
        if seen[slot..].iter().skip(1).any(|&s| s) {
            return Err(ParseElementError("generators out of x y z order".into()));
        }
        seen[slot] = true;
        match slot {
            0 => el.x = exp,
            1 => el.y = exp,
            _ => el.z = exp,
        }
    }
    Ok(el)
}

impl FromStr for GroupElement {
    type Err = ParseElementError;

    /// Parses with a `G2:`/`G4:` prefix, defaulting to G2.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("G2", rest)) => parse_element(Ambient::G2, rest),
            Some(("G4", rest)) => parse_element(Ambient::G4, rest),
            Some((tag, _)) => Err(ParseElementError(format!("unknown ambient {tag:?}"))),
            None => parse_element(Ambient::G2, s),
        }
    }
}

/// The three ambient generators.
pub fn generators(ambient: Ambient) -> [GroupElement; 3] {
    [
        GroupElement::new(ambient, 1, 0, 0),
        GroupElement::new(ambient, 0, 1, 0),
        GroupElement::new(ambient, 0, 0, 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ell;

    fn el(ambient: Ambient, x: i64, y: i64, z: i64) -> GroupElement {
        GroupElement::new(ambient, x, y, z)
    }

    fn grid(ambient: Ambient) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for x in -3..=3 {
            for y in -3..=3 {
                for z in -3..=3 {
                    out.push(el(ambient, x, y, z));
                }
            }
        }
        out
    }

    #[test]
    fn mul_examples() {
        let g2 = Ambient::G2;
        assert_eq!(el(g2, 1, 0, 1).mul(&el(g2, 1, 0, 0)), el(g2, 0, 0, 1));
        let g4 = Ambient::G4;
        assert_eq!(el(g4, 0, 0, 1).mul(&el(g4, 1, 0, 0)), el(g4, 0, 1, 1));
        for g in grid(g2) {
            assert_eq!(g.mul(&GroupElement::identity(g2)), g);
            assert_eq!(GroupElement::identity(g2).mul(&g), g);
        }
    }

    #[test]
    fn inverse_examples() {
        let g2 = Ambient::G2;
        assert_eq!(el(g2, 0, 0, 0).inverse(), el(g2, 0, 0, 0));
        assert_eq!(el(g2, 1, 2, 0).inverse(), el(g2, -1, -2, 0));
        assert_eq!(el(g2, 1, 0, 1).inverse(), el(g2, 1, 0, -1));
        for ambient in [Ambient::G2, Ambient::G4] {
            for g in grid(ambient) {
                assert!(g.mul(&g.inverse()).is_identity());
                assert!(g.inverse().mul(&g).is_identity());
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        let g2 = Ambient::G2;
        let g4 = Ambient::G4;
        let z2 = el(g2, 0, 0, 1);
        assert_eq!(el(g2, 1, 0, 0).conjugate(&GroupElement::identity(g2)), el(g2, 1, 0, 0));
        assert_eq!(el(g2, 1, 0, 0).conjugate(&z2), el(g2, -1, 0, 0));
        let z4 = el(g4, 0, 0, 1);
        assert_eq!(el(g4, 1, 0, 0).conjugate(&z4), el(g4, 0, -1, 0));
    }

    #[test]
    fn phi_is_a_homomorphism() {
        assert_eq!(el(Ambient::G2, 3, -2, 5).phi(), 5);
        for ambient in [Ambient::G2, Ambient::G4] {
            let gs = grid(ambient);
            for g1 in gs.iter().step_by(13) {
                for g2 in gs.iter().step_by(17) {
                    assert_eq!(g1.mul(g2).phi(), g1.phi() + g2.phi());
                }
            }
        }
    }

    #[test]
    fn associativity_on_grid() {
        for ambient in [Ambient::G2, Ambient::G4] {
            let gs = grid(ambient);
            for g1 in gs.iter().step_by(11) {
                for g2 in gs.iter().step_by(13) {
                    for g3 in gs.iter().step_by(17) {
                        assert_eq!(g1.mul(g2).mul(g3), g1.mul(&g2.mul(g3)));
                    }
                }
            }
        }
    }

    #[test]
    fn defining_relations() {
        let g2 = Ambient::G2;
        let [x, y, z] = generators(g2);
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(z.mul(&x).mul(&z.inverse()), x.inverse());
        assert_eq!(z.mul(&y).mul(&z.inverse()), y.inverse());

        let g4 = Ambient::G4;
        let [x, y, z] = generators(g4);
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(z.mul(&x).mul(&z.inverse()), y);
        assert_eq!(z.mul(&y).mul(&z.inverse()), x.inverse());
    }

    #[test]
    fn z_conjugation_is_ell_on_the_lattice() {
        let g4 = Ambient::G4;
        let z = el(g4, 0, 0, 1);
        for g in grid(g4).into_iter().filter(|g| g.z == 0) {
            let conj = z.mul(&g).mul(&z.inverse());
            let (lx, ly) = ell(g.x, g.y);
            assert_eq!(conj, el(g4, lx, ly, 0));
        }
    }

    #[test]
    fn even_z_block_is_abelian_in_g2() {
        // <x, y, z^2> is abelian with z^2 central in it.
        let g2 = Ambient::G2;
        let gens = [el(g2, 1, 0, 0), el(g2, 0, 1, 0), el(g2, 0, 0, 2)];
        for a in &gens {
            for b in &gens {
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn g4_lattice_elements_square_to_identity_under_z2_twist() {
        let g4 = Ambient::G4;
        let z2 = el(g4, 0, 0, 2);
        for g in grid(g4).into_iter().filter(|g| g.z == 0) {
            let twisted = z2.mul(&g).mul(&z2.inverse());
            assert!(g.mul(&twisted).is_identity());
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for g in grid(Ambient::G4).into_iter().step_by(7) {
            let s = g.to_string();
            assert_eq!(parse_element(Ambient::G4, &s), Ok(g));
        }
        assert_eq!(
            parse_element(Ambient::G2, "x y^-2"),
            Ok(el(Ambient::G2, 1, -2, 0))
        );
        assert!(parse_element(Ambient::G2, "w^2").is_err());
        assert!(parse_element(Ambient::G2, "z x").is_err());
        assert_eq!("G4: x^1 z^3".parse::<GroupElement>(), Ok(el(Ambient::G4, 1, 0, 3)));
    }
}
