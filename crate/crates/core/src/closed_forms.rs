//! Closed counting formulas for subgroups and conjugacy classes of given
//! finite index in the fundamental groups of the flat manifolds G1, G2
//! and G4, split by the isomorphism type of the subgroup.

use crate::numtheory::{at_ratio, divisors, omega, sigma2, tau};
use crate::plets::IsoType;

/// Ambient fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbientManifold {
    G1,
    G2,
    G4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    Subgroups,
    Classes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountQuery {
    pub ambient: AmbientManifold,
    pub subgroup_type: IsoType,
    pub n: u64,
    pub kind: CountKind,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CountError {
    #[error("subgroups of type {subgroup_type:?} do not exist in {ambient:?}")]
    NoSuchSubgroupType {
        ambient: AmbientManifold,
        subgroup_type: IsoType,
    },
}

/// The six legal (ambient, subgroup type) pairs.
pub const LEGAL_PAIRS: [(AmbientManifold, IsoType); 6] = [
    (AmbientManifold::G1, IsoType::Z3),
    (AmbientManifold::G2, IsoType::Z3),
    (AmbientManifold::G2, IsoType::G2),
    (AmbientManifold::G4, IsoType::Z3),
    (AmbientManifold::G4, IsoType::G2),
    (AmbientManifold::G4, IsoType::G4),
];

pub fn is_legal_pair(ambient: AmbientManifold, subgroup_type: IsoType) -> bool {
    LEGAL_PAIRS.contains(&(ambient, subgroup_type))
}

fn check_pair(ambient: AmbientManifold, subgroup_type: IsoType) -> Result<(), CountError> {
    if is_legal_pair(ambient, subgroup_type) {
        Ok(())
    } else {
        Err(CountError::NoSuchSubgroupType {
            ambient,
            subgroup_type,
        })
    }
}

/// `sum over a | n of a * tau(a)`, 0 when the ratio argument is fractional.
fn tau_weighted_sum_at(n: u64, k: u64) -> u64 {
    at_ratio(
        |m| divisors(m).into_iter().map(|a| a * tau(a)).sum(),
        n,
        k,
    )
}

/// `sum over a | n of tau(a)`, 0 when the ratio argument is fractional.
fn tau_sum_at(n: u64, k: u64) -> u64 {
    at_ratio(|m| divisors(m).into_iter().map(tau).sum(), n, k)
}

fn exact_div(value: u64, divisor: u64) -> u64 {
    assert!(
        value % divisor == 0,
        "count formula produced a non-integer: {value} / {divisor}"
    );
    value / divisor
}

/// Number of index-`n` subgroups of the given isomorphism type.
pub fn s_count(q: &CountQuery) -> Result<u64, CountError> {
    check_pair(q.ambient, q.subgroup_type)?;
    let n = q.n;
    assert!(n >= 1);
    Ok(match (q.ambient, q.subgroup_type) {
        (AmbientManifold::G1, IsoType::Z3) => omega(n),
        (AmbientManifold::G2, IsoType::G2) => omega(n) - at_ratio(omega, n, 2),
        (AmbientManifold::G2, IsoType::Z3) => at_ratio(omega, n, 2),
        (AmbientManifold::G4, IsoType::G4) => {
            tau_weighted_sum_at(n, 1) - tau_weighted_sum_at(n, 2)
        }
        (AmbientManifold::G4, IsoType::G2) => at_ratio(omega, n, 2) - at_ratio(omega, n, 4),
        (AmbientManifold::G4, IsoType::Z3) => at_ratio(omega, n, 4),
        _ => unreachable!("pair checked above"),
    })
}

/// Number of conjugacy classes of index-`n` subgroups of the given type;
/// equivalently the number of non-equivalent `n`-fold coverings with that
/// total space.
pub fn c_count(q: &CountQuery) -> Result<u64, CountError> {
    check_pair(q.ambient, q.subgroup_type)?;
    let n = q.n;
    assert!(n >= 1);
    Ok(match (q.ambient, q.subgroup_type) {
        (AmbientManifold::G1, IsoType::Z3) => omega(n),
        (AmbientManifold::G2, IsoType::G2) => {
            sigma2(n) + 2 * at_ratio(sigma2, n, 2) - 3 * at_ratio(sigma2, n, 4)
        }
        (AmbientManifold::G2, IsoType::Z3) => exact_div(
            at_ratio(omega, n, 2) + at_ratio(sigma2, n, 2) + 3 * at_ratio(sigma2, n, 4),
            2,
        ),
        (AmbientManifold::G4, IsoType::G4) => tau_sum_at(n, 1) - tau_sum_at(n, 4),
        (AmbientManifold::G4, IsoType::G2) => exact_div(
            at_ratio(sigma2, n, 2) + 2 * at_ratio(sigma2, n, 4) + tau_sum_at(n, 2)
                - 3 * at_ratio(sigma2, n, 8)
                - tau_sum_at(n, 8),
            2,
        ),
        (AmbientManifold::G4, IsoType::Z3) => exact_div(
            at_ratio(omega, n, 4)
                + at_ratio(sigma2, n, 4)
                + 3 * at_ratio(sigma2, n, 8)
                + 2 * tau_sum_at(n, 4)
                + 2 * tau_sum_at(n, 8),
            4,
        ),
        _ => unreachable!("pair checked above"),
    })
}

pub fn count(q: &CountQuery) -> Result<u64, CountError> {
    match q.kind {
        CountKind::Subgroups => s_count(q),
        CountKind::Classes => c_count(q),
    }
}

/// One row of the count table: a (kind, subgroup type, ambient) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub kind: CountKind,
    pub subgroup_type: IsoType,
    pub ambient: AmbientManifold,
}

impl TableRow {
    /// Stable machine-readable key, e.g. `s_G2_G2` or `c_Z3_G4`.
    pub fn key(&self) -> String {
        let kind = match self.kind {
            CountKind::Subgroups => "s",
            CountKind::Classes => "c",
        };
        let sub = match self.subgroup_type {
            IsoType::Z3 => "Z3",
            IsoType::G2 => "G2",
            IsoType::G4 => "G4",
        };
        let amb = match self.ambient {
            AmbientManifold::G1 => "G1",
            AmbientManifold::G2 => "G2",
            AmbientManifold::G4 => "G4",
        };
        format!("{kind}_{sub}_{amb}")
    }

    /// A cell is rendered blank where a divisibility condition already
    /// forces the count to zero.
    pub fn is_blank(&self, n: u64) -> bool {
        match (self.ambient, self.subgroup_type) {
            (AmbientManifold::G2, IsoType::Z3) => n % 2 != 0,
            (AmbientManifold::G4, IsoType::G2) => n % 2 != 0,
            (AmbientManifold::G4, IsoType::Z3) => n % 4 != 0,
            _ => false,
        }
    }
}

/// The ten rows of the reference table, in its layout order.
pub const TABLE1_ROWS: [TableRow; 10] = [
    TableRow { kind: CountKind::Subgroups, subgroup_type: IsoType::G2, ambient: AmbientManifold::G2 },
    TableRow { kind: CountKind::Classes, subgroup_type: IsoType::G2, ambient: AmbientManifold::G2 },
    TableRow { kind: CountKind::Subgroups, subgroup_type: IsoType::Z3, ambient: AmbientManifold::G2 },
    TableRow { kind: CountKind::Classes, subgroup_type: IsoType::Z3, ambient: AmbientManifold::G2 },
    TableRow { kind: CountKind::Subgroups, subgroup_type: IsoType::G4, ambient: AmbientManifold::G4 },
    TableRow { kind: CountKind::Classes, subgroup_type: IsoType::G4, ambient: AmbientManifold::G4 },
    TableRow { kind: CountKind::Subgroups, subgroup_type: IsoType::G2, ambient: AmbientManifold::G4 },
    TableRow { kind: CountKind::Classes, subgroup_type: IsoType::G2, ambient: AmbientManifold::G4 },
    TableRow { kind: CountKind::Subgroups, subgroup_type: IsoType::Z3, ambient: AmbientManifold::G4 },
    TableRow { kind: CountKind::Classes, subgroup_type: IsoType::Z3, ambient: AmbientManifold::G4 },
];

/// The full 10-row table of counts for `n = 1..=n_max`.
pub fn table1(n_max: u64) -> Vec<(TableRow, Vec<u64>)> {
    assert!(n_max >= 1);
    TABLE1_ROWS
        .iter()
        .map(|row| {
            let values = (1..=n_max)
                .map(|n| {
                    let q = CountQuery {
                        ambient: row.ambient,
                        subgroup_type: row.subgroup_type,
                        n,
                        kind: row.kind,
                    };
                    count(&q).expect("table rows are legal pairs")
                })
                .collect();
            (*row, values)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ambient: AmbientManifold, t: IsoType, n: u64) -> u64 {
        s_count(&CountQuery { ambient, subgroup_type: t, n, kind: CountKind::Subgroups }).unwrap()
    }

    fn c(ambient: AmbientManifold, t: IsoType, n: u64) -> u64 {
        c_count(&CountQuery { ambient, subgroup_type: t, n, kind: CountKind::Classes }).unwrap()
    }

    #[test]
    fn s_count_examples() {
        assert_eq!(s(AmbientManifold::G2, IsoType::G2, 6), 78);
        assert_eq!(s(AmbientManifold::G4, IsoType::G4, 13), 27);
        assert_eq!(s(AmbientManifold::G4, IsoType::Z3, 2), 0);
        assert_eq!(s(AmbientManifold::G1, IsoType::Z3, 4), 35);
    }

    #[test]
    fn c_count_examples() {
        assert_eq!(c(AmbientManifold::G2, IsoType::Z3, 12), 63);
        assert_eq!(c(AmbientManifold::G4, IsoType::G2, 16), 19);
        assert_eq!(c(AmbientManifold::G4, IsoType::Z3, 8), 5);
    }

    #[test]
    fn illegal_pair_is_an_error() {
        let q = CountQuery {
            ambient: AmbientManifold::G2,
            subgroup_type: IsoType::G4,
            n: 4,
            kind: CountKind::Subgroups,
        };
        assert!(matches!(s_count(&q), Err(CountError::NoSuchSubgroupType { .. })));
        assert!(matches!(c_count(&q), Err(CountError::NoSuchSubgroupType { .. })));
        let q = CountQuery { ambient: AmbientManifold::G1, subgroup_type: IsoType::G2, n: 2, kind: CountKind::Classes };
        assert!(c_count(&q).is_err());
    }

    #[test]
    fn totals_sum_to_omega_for_g2() {
        for n in 1..=200 {
            assert_eq!(
                s(AmbientManifold::G2, IsoType::G2, n) + s(AmbientManifold::G2, IsoType::Z3, n),
                crate::numtheory::omega(n)
            );
        }
    }

    #[test]
    fn parity_structure() {
        for n in (1..=99u64).step_by(2) {
            assert_eq!(s(AmbientManifold::G2, IsoType::Z3, n), 0);
            assert_eq!(c(AmbientManifold::G2, IsoType::Z3, n), 0);
            assert_eq!(s(AmbientManifold::G4, IsoType::G2, n), 0);
            assert_eq!(c(AmbientManifold::G4, IsoType::G2, n), 0);
        }
        for n in (2..=98u64).step_by(4) {
            assert_eq!(s(AmbientManifold::G4, IsoType::Z3, n), 0);
            assert_eq!(c(AmbientManifold::G4, IsoType::Z3, n), 0);
        }
    }

    #[test]
    fn table1_layout() {
        let table = table1(16);
        assert_eq!(table.len(), 10);
        let row = &table[8]; // s for Z3 in G4
        assert_eq!(row.0.key(), "s_Z3_G4");
        let nonzero: Vec<(usize, u64)> = row
            .1
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i + 1, v))
            .collect();
        assert_eq!(nonzero, vec![(4, 1), (8, 7), (12, 13), (16, 35)]);
        assert_eq!(table[5].1[9], 6); // c for G4 in G4 at n = 10
        for (row, values) in &table {
            let expected_blank = row.is_blank(1);
            assert_eq!(values[0] == 0, expected_blank, "n = 1 column for {}", row.key());
        }
    }
}
