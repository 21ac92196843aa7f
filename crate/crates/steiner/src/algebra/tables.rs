//! The imaginary-part multiplication tables of the quaternions and
//! octonions, and the check that a Steiner product reproduces them on basis
//! pairs under s_i <-> e_i (s1,s2,s3 <-> i,j,k for n = 3).

use num::One;

use crate::algebra::product::steiner_product;
use crate::algebra::vector::{DesignVector, Scalar};
use crate::design::OrientedSts;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DivisionTable {
    Quaternion,
    Octonion,
}

/// Im(e_i e_j) for i != j as (sign, index); the real part -1 on the diagonal
/// is outside the image of the Steiner product and is not compared.
fn table_entry(table: DivisionTable, i: u32, j: u32) -> (i8, u32) {
    match table {
        DivisionTable::Quaternion => QUATERNION[i as usize - 1][j as usize - 1],
        DivisionTable::Octonion => OCTONION[i as usize - 1][j as usize - 1],
    }
}

/// i*j = k, j*k = i, k*i = j.
const QUATERNION: [[(i8, u32); 3]; 3] = [
    [(0, 0), (1, 3), (-1, 2)],
    [(-1, 3), (0, 0), (1, 1)],
    [(1, 2), (-1, 1), (0, 0)],
];

/// e_i * e_j rows for the standard imaginary octonion basis.
const OCTONION: [[(i8, u32); 7]; 7] = [
    [(0, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (1, 7), (-1, 6)],
    [(-1, 3), (0, 0), (1, 1), (1, 6), (-1, 7), (-1, 4), (1, 5)],
    [(1, 2), (-1, 1), (0, 0), (-1, 7), (-1, 6), (1, 5), (1, 4)],
    [(-1, 5), (-1, 6), (1, 7), (0, 0), (1, 1), (1, 2), (-1, 3)],
    [(1, 4), (1, 7), (1, 6), (-1, 1), (0, 0), (-1, 3), (-1, 2)],
    [(-1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (0, 0), (1, 1)],
    [(1, 6), (-1, 5), (-1, 4), (1, 3), (1, 2), (-1, 1), (0, 0)],
];

/// True iff s_i x s_j equals the imaginary part of e_i e_j for every ordered
/// pair i != j.
pub fn multiplication_table_check(o: &OrientedSts, table: DivisionTable) -> Result<bool> {
    let n = o.n();
    let expected_n = match table {
        DivisionTable::Quaternion => 3,
        DivisionTable::Octonion => 7,
    };
    if n != expected_n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: expected_n,
        });
    }
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            if i == j {
                continue;
            }
            let product =
                steiner_product(o, &DesignVector::basis(n, i), &DesignVector::basis(n, j))?;
            let (sign, k) = table_entry(table, i, j);
            let mut expected = DesignVector::basis(n, k);
            if sign < 0 {
                expected = expected.scale(&(-Scalar::one()));
            }
            if product != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::builtin;

    #[test]
    fn tables_are_skew() {
        for i in 1..=7u32 {
            for j in 1..=7u32 {
                if i == j {
                    continue;
                }
                let (s1, k1) = table_entry(DivisionTable::Octonion, i, j);
                let (s2, k2) = table_entry(DivisionTable::Octonion, j, i);
                assert_eq!(k1, k2);
                assert_eq!(s1, -s2);
            }
        }
    }

    #[test]
    fn quaternion_table_matches_order_three() {
        let o = builtin::oriented("o1_3").unwrap();
        assert!(multiplication_table_check(&o, DivisionTable::Quaternion).unwrap());
        assert!(!multiplication_table_check(&o.reversed(), DivisionTable::Quaternion).unwrap());
    }

    #[test]
    fn octonion_table_matches_o1_7_only() {
        assert!(multiplication_table_check(
            &builtin::oriented("o1_7").unwrap(),
            DivisionTable::Octonion
        )
        .unwrap());
        for name in ["o2_7", "o3_7", "o4_7", "zd7"] {
            assert!(
                !multiplication_table_check(
                    &builtin::oriented(name).unwrap(),
                    DivisionTable::Octonion
                )
                .unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn dimension_mismatch() {
        let o = builtin::oriented("o1_9").unwrap();
        assert!(multiplication_table_check(&o, DivisionTable::Octonion).is_err());
    }
}
