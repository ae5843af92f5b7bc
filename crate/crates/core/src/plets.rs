//! Subgroups of finite index in pi_1(G2) and pi_1(G4) as 3-plets
//! `(a, H, nu)`: the minimal positive `z`-depth, the intersection with the
//! translation lattice, and the coset of the `z`-companion.
//!
//! This module is the structural oracle: it enumerates every index-`n`
//! subgroup, rebuilds generators from a plet, classifies the isomorphism
//! type, and computes conjugacy classes by orbit closure under
//! conjugation by the ambient generators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::group_model::{generators, Ambient, GroupElement};
use crate::lattice::{
    ell_pow, enumerate_ell_invariant, enumerate_sublattices2, hnf2, is_ell_invariant, CosetRep,
    Sublattice2,
};
use crate::numtheory::divisors;

/// Isomorphism type of a finite-index subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoType {
    Z3,
    G2,
    G4,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PletError {
    #[error("generators span a subgroup of infinite index")]
    InfiniteIndex,
    #[error("generators live in different ambient groups")]
    MixedAmbient,
    #[error("coset walk did not stabilize at the expected index")]
    IndexMismatch,
}

/// An `n`-essential 3-plet; `n = a * index(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plet {
    pub ambient: Ambient,
    pub a: u64,
    pub h: Sublattice2,
    pub nu: CosetRep,
}

impl Plet {
    pub fn new(ambient: Ambient, a: u64, h: Sublattice2, nu: CosetRep) -> Self {
        assert!(a >= 1);
        assert!(nu.u < h.c && nu.v < h.b, "nu is not a canonical coset rep");
        if ambient == Ambient::G4 && a % 2 == 1 {
            assert!(
                is_ell_invariant(&h),
                "odd z-depth in G4 requires an ell-invariant lattice"
            );
        }
        Plet { ambient, a, h, nu }
    }

    pub fn index(&self) -> u64 {
        self.a * self.h.index()
    }

    pub fn iso_type(&self) -> IsoType {
        match self.ambient {
            Ambient::G2 => {
                if self.a % 2 == 1 {
                    IsoType::G2
                } else {
                    IsoType::Z3
                }
            }
            Ambient::G4 => match self.a % 4 {
                1 | 3 => IsoType::G4,
                2 => IsoType::G2,
                _ => IsoType::Z3,
            },
        }
    }

    /// The coset of `Gamma` that the elements with `z`-exponent `m * a`
    /// occupy, as an explicit lattice vector.
    fn gamma_coset(&self, m: i64) -> (i64, i64) {
        let h = (self.nu.u as i64, self.nu.v as i64);
        match (self.ambient, self.a % 4) {
            (Ambient::G2, 1) | (Ambient::G2, 3) | (Ambient::G4, 2) => {
                if m.rem_euclid(2) == 1 {
                    h
                } else {
                    (0, 0)
                }
            }
            (Ambient::G2, _) | (Ambient::G4, 0) => (m * h.0, m * h.1),
            (Ambient::G4, r) => {
                // r is 1 or 3; the four cosets cycle with the twist l^r.
                let l = ell_pow(r as i64, h.0, h.1);
                match m.rem_euclid(4) {
                    0 => (0, 0),
                    1 => h,
                    2 => (h.0 + l.0, h.1 + l.1),
                    _ => l,
                }
            }
        }
    }

    /// Membership test for the subgroup this plet encodes.
    pub fn contains(&self, g: &GroupElement) -> bool {
        if g.ambient != self.ambient {
            return false;
        }
        let a = self.a as i64;
        if g.z % a != 0 {
            return false;
        }
        let (tx, ty) = self.gamma_coset(g.z / a);
        self.h.contains(g.x - tx, g.y - ty)
    }
}

/// A plet together with reconstructed generators and the isomorphism type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub plet: Plet,
    pub gens: [GroupElement; 3],
    pub iso_type: IsoType,
}

/// All `n`-essential 3-plets in deterministic order: ascending `a`, then
/// lattice order, then coset order.
pub fn enumerate_plets(ambient: Ambient, n: u64) -> Vec<Plet> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for a in divisors(n) {
        let m = n / a;
        let lattices: Vec<Sublattice2> = if ambient == Ambient::G4 && a % 2 == 1 {
            enumerate_ell_invariant(m).into_iter().map(|(h, _)| h).collect()
        } else {
            enumerate_sublattices2(m)
        };
        for h in lattices {
            for nu in h.cosets() {
                out.push(Plet::new(ambient, a, h, nu));
            }
        }
    }
    out
}

/// Generators `X, Y, Z` for the subgroup a plet encodes: the HNF basis of
/// `H` embedded in the lattice block, and `Z = h z^a` for the canonical
/// representative `h` of `nu`.
pub fn subgroup_from_plet(p: &Plet) -> SubgroupRecord {
    let gens = [
        GroupElement::new(p.ambient, p.h.c as i64, 0, 0),
        GroupElement::new(p.ambient, p.h.e as i64, p.h.b as i64, 0),
        GroupElement::new(p.ambient, p.nu.u as i64, p.nu.v as i64, p.a as i64),
    ];
    SubgroupRecord {
        plet: *p,
        gens,
        iso_type: p.iso_type(),
    }
}

/// Recomputes `(a, H, nu)` from a generator triple.
///
/// `a` is the gcd of the `z`-exponents, realized by an explicit product
/// `Z0`; `H` is spanned by the `z`-free parts of the generators and their
/// conjugates by `Z0`; `nu` is the coset of the lattice part of `Z0`.
pub fn invariants_of(gens: &[GroupElement; 3]) -> Result<Plet, PletError> {
    let ambient = gens[0].ambient;
    if gens.iter().any(|g| g.ambient != ambient) {
        return Err(PletError::MixedAmbient);
    }
    // Extended-gcd combination achieving the minimal positive z-exponent.
    let mut z0: Option<GroupElement> = None;
    for g in gens {
        if g.phi() == 0 {
            continue;
        }
        z0 = Some(match z0 {
            None => *g,
            Some(cur) => {
                let (_, s, t) = ext_gcd(cur.phi(), g.phi());
                cur.pow(s).mul(&g.pow(t))
            }
        });
    }
    let mut z0 = z0.ok_or(PletError::InfiniteIndex)?;
    if z0.phi() < 0 {
        z0 = z0.inverse();
    }
    let a = z0.phi();

    let mut vectors = Vec::new();
    for g in gens {
        let w = g.mul(&z0.pow(-(g.phi() / a)));
        debug_assert_eq!(w.phi(), 0);
        let mut w = w;
        for _ in 0..4 {
            vectors.push((w.x, w.y));
            w = w.conjugate(&z0);
        }
    }
    let h = hnf2(&vectors).ok_or(PletError::InfiniteIndex)?;
    let nu = h.reduce(z0.x, z0.y);
    Ok(Plet::new(ambient, a as u64, h, nu))
}

/// One of the three ambient generators, as a conjugation tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenTag {
    X,
    Y,
    Z,
}

/// The plet of `g^{-1} Delta g` for an ambient generator `g`, via the
/// closed-form action on `(a, H, nu)`. Debug builds cross-check against
/// generic conjugation of the reconstructed generators.
pub fn conjugate_plet(p: &Plet, by: GenTag) -> Plet {
    let result = conjugate_plet_rule(p, by);
    debug_assert_eq!(
        result,
        conjugate_plet_generic(p, by),
        "closed-form conjugation rule diverged from generic conjugation"
    );
    result
}

/// Closed-form action of conjugation on a plet.
pub fn conjugate_plet_rule(p: &Plet, by: GenTag) -> Plet {
    let h_vec = (p.nu.u as i64, p.nu.v as i64);
    match (p.ambient, by) {
        (Ambient::G2, GenTag::X) | (Ambient::G2, GenTag::Y) => {
            if p.a % 2 == 0 {
                *p
            } else {
                let t = if by == GenTag::X { (1, 0) } else { (0, 1) };
                let nu = p.h.reduce(h_vec.0 - 2 * t.0, h_vec.1 - 2 * t.1);
                Plet::new(p.ambient, p.a, p.h, nu)
            }
        }
        (Ambient::G2, GenTag::Z) => {
            let nu = p.h.reduce(-h_vec.0, -h_vec.1);
            Plet::new(p.ambient, p.a, p.h, nu)
        }
        (Ambient::G4, GenTag::X) | (Ambient::G4, GenTag::Y) => {
            let t = if by == GenTag::X { (1, 0) } else { (0, 1) };
            let l = ell_pow(p.a as i64, t.0, t.1);
            let nu = p.h.reduce(h_vec.0 + l.0 - t.0, h_vec.1 + l.1 - t.1);
            Plet::new(p.ambient, p.a, p.h, nu)
        }
        (Ambient::G4, GenTag::Z) => {
            let rotated: Vec<(i64, i64)> = p
                .h
                .basis()
                .iter()
                .map(|&(x, y)| ell_pow(1, x, y))
                .collect();
            let h = hnf2(&rotated).expect("rotated lattice keeps full rank");
            let (lx, ly) = ell_pow(3, h_vec.0, h_vec.1);
            let nu = h.reduce(lx, ly);
            Plet::new(p.ambient, p.a, h, nu)
        }
    }
}

/// Generic conjugation: conjugate the reconstructed generators and
/// re-extract the invariants.
pub fn conjugate_plet_generic(p: &Plet, by: GenTag) -> Plet {
    let [x, y, z] = generators(p.ambient);
    let g = match by {
        GenTag::X => x,
        GenTag::Y => y,
        GenTag::Z => z,
    };
    let rec = subgroup_from_plet(p);
    let conj = [
        rec.gens[0].conjugate(&g),
        rec.gens[1].conjugate(&g),
        rec.gens[2].conjugate(&g),
    ];
    invariants_of(&conj).expect("conjugate of a finite-index subgroup")
}

/// An orbit of plets under conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Plet,
    pub members: Vec<Plet>,
}

impl ConjugacyClass {
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn iso_type(&self) -> IsoType {
        self.representative.iso_type()
    }
}

/// Orbits of all `n`-essential plets under conjugation by `x`, `y`, `z`,
/// by breadth-first closure. The full plet set is finite and invariant,
/// so forward closure under the three permutations yields the orbits of
/// the whole group.
pub fn conjugacy_classes(ambient: Ambient, n: u64) -> Vec<ConjugacyClass> {
    let all = enumerate_plets(ambient, n);
    let mut visited: BTreeSet<Plet> = BTreeSet::new();
    let mut classes = Vec::new();
    for p in &all {
        if visited.contains(p) {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut queue = VecDeque::new();
        members.insert(*p);
        queue.push_back(*p);
        while let Some(q) = queue.pop_front() {
            for tag in [GenTag::X, GenTag::Y, GenTag::Z] {
                let next = conjugate_plet(&q, tag);
                if members.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        visited.extend(members.iter().copied());
        let members: Vec<Plet> = members.into_iter().collect();
        classes.push(ConjugacyClass {
            representative: members[0],
            members,
        });
    }
    classes
}

/// Subgroup and class tallies per isomorphism type.
pub fn count_by_type(ambient: Ambient, n: u64) -> BTreeMap<IsoType, (u64, u64)> {
    let mut out: BTreeMap<IsoType, (u64, u64)> = BTreeMap::new();
    for p in enumerate_plets(ambient, n) {
        out.entry(p.iso_type()).or_default().0 += 1;
    }
    for class in conjugacy_classes(ambient, n) {
        out.entry(class.iso_type()).or_default().1 += 1;
    }
    out
}

/// Guard for the subgroup construction: a bounded walk over the right
/// cosets of the subgroup must stabilize at exactly `index` cosets.
pub fn verify_index(p: &Plet) -> Result<(), PletError> {
    let n = p.index();
    let bound = 4 * n as usize;
    let mut reps: Vec<GroupElement> = vec![GroupElement::identity(p.ambient)];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let gens = generators(p.ambient);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let cand = reps[i].mul(g);
            let known = reps.iter().any(|r| p.contains(&cand.mul(&r.inverse())));
            if !known {
                reps.push(cand);
                if reps.len() > bound {
                    return Err(PletError::IndexMismatch);
                }
                queue.push_back(reps.len() - 1);
            }
        }
    }
    if reps.len() as u64 == n {
        Ok(())
    } else {
        Err(PletError::IndexMismatch)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}
