//! Randomized invariants for the group model and the lattice arithmetic.

use proptest::prelude::*;

use platycosm::group_model::generators;
use platycosm::lattice::hnf2;
use platycosm::{Ambient, GroupElement, Sublattice2};

fn element(ambient: Ambient) -> impl Strategy<Value = GroupElement> {
    (-30i64..=30, -30i64..=30, -30i64..=30).prop_map(move |(x, y, z)| {
        GroupElement::new(ambient, x, y, z)
    })
}

fn any_ambient() -> impl Strategy<Value = Ambient> {
    prop_oneof![Just(Ambient::G2), Just(Ambient::G4)]
}

fn sublattice() -> impl Strategy<Value = Sublattice2> {
    (1u64..=12, 1u64..=12).prop_flat_map(|(b, c)| (Just(b), Just(c), 0..c.max(1))).prop_map(
        |(b, c, e)| Sublattice2::new(b, c, e),
    )
}

proptest! {
    #[test]
    fn group_law_is_associative(
        ambient in any_ambient(),
        (gx, gy, gz) in ((-30i64..=30), (-30i64..=30), (-30i64..=30)),
        (hx, hy, hz) in ((-30i64..=30), (-30i64..=30), (-30i64..=30)),
        (kx, ky, kz) in ((-30i64..=30), (-30i64..=30), (-30i64..=30)),
    ) {
        let g = GroupElement::new(ambient, gx, gy, gz);
        let h = GroupElement::new(ambient, hx, hy, hz);
        let k = GroupElement::new(ambient, kx, ky, kz);
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
    }

    #[test]
    fn inverse_cancels(g in any_ambient().prop_flat_map(element)) {
        prop_assert!(g.mul(&g.inverse()).is_identity());
        prop_assert!(g.inverse().mul(&g).is_identity());
    }

    #[test]
    fn phi_is_a_homomorphism(
        ambient in any_ambient(),
        (gx, gy, gz) in ((-30i64..=30), (-30i64..=30), (-30i64..=30)),
        (hx, hy, hz) in ((-30i64..=30), (-30i64..=30), (-30i64..=30)),
    ) {
        let g = GroupElement::new(ambient, gx, gy, gz);
        let h = GroupElement::new(ambient, hx, hy, hz);
        prop_assert_eq!(g.mul(&h).phi(), g.phi() + h.phi());
    }

    #[test]
    fn defining_relations_hold_under_conjugation(
        ambient in any_ambient(),
        (tx, ty, tz) in ((-10i64..=10), (-10i64..=10), (-10i64..=10)),
    ) {
        // Relators stay trivial in every conjugate copy of the generators.
        let t = GroupElement::new(ambient, tx, ty, tz);
        let [x, y, z] = generators(ambient).map(|g| g.conjugate(&t));
        let comm = x.mul(&y).mul(&x.inverse()).mul(&y.inverse());
        prop_assert!(comm.is_identity());
        let zxz = z.mul(&x).mul(&z.inverse());
        let zyz = z.mul(&y).mul(&z.inverse());
        match ambient {
            Ambient::G2 => {
                prop_assert_eq!(zxz, x.inverse());
                prop_assert_eq!(zyz, y.inverse());
            }
            Ambient::G4 => {
                prop_assert_eq!(zxz, y);
                prop_assert_eq!(zyz, x.inverse());
            }
        }
    }

    #[test]
    fn reduce_lands_in_fundamental_domain(h in sublattice(), x in -100i64..=100, y in -100i64..=100) {
        let r = h.reduce(x, y);
        let (ru, rv) = (r.u as i64, r.v as i64);
        prop_assert!(h.contains(x - ru, y - rv));
        prop_assert_eq!(h.reduce(ru, rv), r);
    }

    #[test]
    fn hnf_spans_its_generators(h in sublattice(), s in -5i64..=5, t in -5i64..=5) {
        let [v1, v2] = h.basis();
        let w = (s * v1.0 + t * v2.0, s * v1.1 + t * v2.1);
        let rebuilt = hnf2(&[v1, v2, w]).unwrap();
        prop_assert_eq!(rebuilt, h);
        prop_assert!(h.contains(w.0, w.1));
    }
}
