//! Bundled systems: the unique systems of order 3, 7, 9 and the
//! representatives of their orientation classes, plus a few aliases used in
//! worked examples (`zd7`, `rg7a`, `rg7b`).

use crate::design::system::{validate_sts, OrientedSts, SteinerTripleSystem};
use crate::design::triple::Triple;
use crate::error::{Error, Result};

pub const STS7_TRIPLES: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

pub const STS9_TRIPLES: [[u32; 3]; 12] = [
    [1, 2, 3],
    [4, 5, 6],
    [7, 8, 9],
    [1, 4, 7],
    [2, 5, 8],
    [3, 6, 9],
    [1, 5, 9],
    [2, 6, 7],
    [3, 4, 8],
    [1, 6, 8],
    [2, 4, 9],
    [3, 5, 7],
];

const O1_3: [[u32; 3]; 1] = [[1, 2, 3]];

const O1_7: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 7, 5],
    [3, 6, 5],
    [3, 7, 4],
];
const O2_7: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];
const O3_7: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];
const O4_7: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// The orientation of the order-7 system used in the zero-divisor worked
/// example; also the second orientation of the rank-growth comparison.
const ZD7: [[u32; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

const O16_9: [[[u32; 3]; 12]; 16] = [
    // o1_9 .. o16_9
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 5, 7],
        [3, 6, 9],
        [4, 5, 6],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 5, 7],
        [3, 6, 9],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 5, 7],
        [3, 9, 6],
        [4, 5, 6],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 7, 5],
        [3, 8, 4],
        [3, 9, 6],
        [4, 5, 6],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 7, 5],
        [3, 8, 4],
        [3, 9, 6],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 5, 7],
        [3, 9, 6],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 5, 6],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 6, 5],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 7, 5],
        [3, 8, 4],
        [3, 9, 6],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 7, 5],
        [3, 8, 4],
        [3, 9, 6],
        [4, 6, 5],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 7, 6],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 5, 6],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 7, 6],
        [2, 8, 5],
        [3, 4, 8],
        [3, 5, 7],
        [3, 9, 6],
        [4, 6, 5],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 6, 7],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 6, 5],
        [7, 8, 9],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 7, 6],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 5, 6],
        [7, 9, 8],
    ],
    [
        [1, 2, 3],
        [1, 4, 7],
        [1, 5, 9],
        [1, 6, 8],
        [2, 4, 9],
        [2, 5, 8],
        [2, 7, 6],
        [3, 4, 8],
        [3, 7, 5],
        [3, 9, 6],
        [4, 6, 5],
        [7, 9, 8],
    ],
];

/// Automorphism-group orders of the oriented models, as published with the
/// classification they reproduce.
const O7_AUT_ORDERS: [usize; 4] = [21, 21, 3, 3];
const O9_AUT_ORDERS: [usize; 16] = [27, 9, 3, 3, 3, 1, 1, 1, 3, 3, 3, 3, 1, 1, 1, 1];

/// A bundled model, which may be unoriented or oriented.
#[derive(Clone, Debug)]
pub enum BuiltinModel {
    Unoriented(SteinerTripleSystem),
    Oriented(OrientedSts),
}

impl BuiltinModel {
    pub fn n(&self) -> usize {
        match self {
            BuiltinModel::Unoriented(s) => s.n(),
            BuiltinModel::Oriented(o) => o.n(),
        }
    }

    pub fn base(&self) -> &SteinerTripleSystem {
        match self {
            BuiltinModel::Unoriented(s) => s,
            BuiltinModel::Oriented(o) => o.base(),
        }
    }
}

fn sts(n: usize, triples: &[[u32; 3]]) -> SteinerTripleSystem {
    let ts: Vec<Triple> = triples
        .iter()
        .map(|&[a, b, c]| Triple::new(a, b, c).expect("builtin triple"))
        .collect();
    validate_sts(n, ts).expect("builtin system is valid")
}

fn oriented_model(n: usize, cycles: &[[u32; 3]]) -> OrientedSts {
    OrientedSts::from_cycles(n, cycles).expect("builtin orientation is valid")
}

/// Looks up a model by name: `sts3`, `sts7`, `sts9`, `o1_3`, `o1_7`..`o4_7`,
/// `o1_9`..`o16_9`, and the aliases `zd7`, `rg7a` (= `o2_7`), `rg7b` (= `zd7`).
pub fn builtin_model(name: &str) -> Result<BuiltinModel> {
    match name {
        "sts3" => return Ok(BuiltinModel::Unoriented(sts(3, &O1_3))),
        "sts7" => return Ok(BuiltinModel::Unoriented(sts(7, &STS7_TRIPLES))),
        "sts9" => return Ok(BuiltinModel::Unoriented(sts(9, &STS9_TRIPLES))),
        "o1_3" => return Ok(BuiltinModel::Oriented(oriented_model(3, &O1_3))),
        "o1_7" => return Ok(BuiltinModel::Oriented(oriented_model(7, &O1_7))),
        "o2_7" | "rg7a" => return Ok(BuiltinModel::Oriented(oriented_model(7, &O2_7))),
        "o3_7" => return Ok(BuiltinModel::Oriented(oriented_model(7, &O3_7))),
        "o4_7" => return Ok(BuiltinModel::Oriented(oriented_model(7, &O4_7))),
        "zd7" | "rg7b" => return Ok(BuiltinModel::Oriented(oriented_model(7, &ZD7))),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('o') {
        if let Some((k, n)) = rest.split_once("_9") {
            if n.is_empty() {
                if let Ok(k) = k.parse::<usize>() {
                    if (1..=16).contains(&k) {
                        return Ok(BuiltinModel::Oriented(oriented_model(9, &O16_9[k - 1])));
                    }
                }
            }
        }
    }
    Err(Error::UnknownModel(name.to_string()))
}

pub fn unoriented(name: &str) -> Result<SteinerTripleSystem> {
    match builtin_model(name)? {
        BuiltinModel::Unoriented(s) => Ok(s),
        BuiltinModel::Oriented(o) => Ok(o.base().clone()),
    }
}

pub fn oriented(name: &str) -> Result<OrientedSts> {
    match builtin_model(name)? {
        BuiltinModel::Oriented(o) => Ok(o),
        BuiltinModel::Unoriented(_) => Err(Error::UnknownModel(format!("{name} is not oriented"))),
    }
}

pub fn builtin_names() -> Vec<&'static str> {
    let mut names = vec![
        "sts3", "sts7", "sts9", "o1_3", "o1_7", "o2_7", "o3_7", "o4_7", "zd7", "rg7a", "rg7b",
    ];
    names.extend(O9_NAMES);
    names
}

const O9_NAMES: [&str; 16] = [
    "o1_9", "o2_9", "o3_9", "o4_9", "o5_9", "o6_9", "o7_9", "o8_9", "o9_9", "o10_9", "o11_9",
    "o12_9", "o13_9", "o14_9", "o15_9", "o16_9",
];

/// The oriented class representatives of the order-7 and order-9 systems with
/// the published orders of their automorphism groups. Used for the
/// model-to-class match table in classification reports.
pub fn reference_models(n: usize) -> Vec<(&'static str, OrientedSts, usize)> {
    match n {
        3 => vec![("o1_3", oriented_model(3, &O1_3), 3)],
        7 => ["o1_7", "o2_7", "o3_7", "o4_7"]
            .iter()
            .zip([&O1_7, &O2_7, &O3_7, &O4_7])
            .zip(O7_AUT_ORDERS)
            .map(|((name, cyc), ord)| (*name, oriented_model(7, cyc.as_slice()), ord))
            .collect(),
        9 => O9_NAMES
            .iter()
            .zip(O16_9.iter())
            .zip(O9_AUT_ORDERS)
            .map(|((name, cyc), ord)| (*name, oriented_model(9, cyc), ord))
            .collect(),
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtin_names_resolve() {
        for name in builtin_names() {
            assert!(builtin_model(name).is_ok(), "builtin {name} failed");
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            builtin_model("sts13"),
            Err(Error::UnknownModel(_))
        ));
        assert!(matches!(
            builtin_model("o17_9"),
            Err(Error::UnknownModel(_))
        ));
        assert!(matches!(builtin_model("o0_9"), Err(Error::UnknownModel(_))));
    }

    #[test]
    fn o1_7_cycles_as_published() {
        let o = oriented("o1_7").unwrap();
        let got: Vec<[u32; 3]> = o.cycles().iter().map(|c| c.labels()).collect();
        assert_eq!(
            got,
            vec![
                [1, 2, 3],
                [1, 4, 5],
                [1, 6, 7],
                [2, 4, 6],
                [2, 7, 5],
                [3, 6, 5],
                [3, 7, 4]
            ]
        );
    }

    #[test]
    fn aliases_agree() {
        assert_eq!(oriented("rg7a").unwrap(), oriented("o2_7").unwrap());
        assert_eq!(oriented("rg7b").unwrap(), oriented("zd7").unwrap());
        // The published order-9 list contains a duplicate entry.
        assert_eq!(oriented("o5_9").unwrap(), oriented("o9_9").unwrap());
    }

    #[test]
    fn sts9_matches_condensed_listing() {
        let s = unoriented("sts9").unwrap();
        assert_eq!(s.triples().len(), 12);
        assert_eq!(s.third_label(2, 6), 7);
        assert_eq!(s.third_label(7, 8), 9);
    }
}
