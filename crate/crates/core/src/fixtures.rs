//! Bundled algebras and seeded test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FiniteAlgebra, OperationTable};
use crate::partition::Partition;

fn binary(name: &str, n: usize, f: impl Fn(usize, usize) -> usize) -> OperationTable {
    OperationTable::from_fn(name, 2, n, |a| f(a[0], a[1]))
}

/// The 2-element group as a semigroup (addition mod 2).
pub fn z2_semigroup() -> FiniteAlgebra {
    FiniteAlgebra::new("Z2", 2, vec![binary("mul", 2, |x, y| (x + y) % 2)]).unwrap()
}

/// The 2-element semilattice as a semigroup (minimum).
pub fn s2_semigroup() -> FiniteAlgebra {
    FiniteAlgebra::new("S2", 2, vec![binary("mul", 2, |x, y| x.min(y))]).unwrap()
}

/// `Z2 × S2`; element `(i, j)` is `2i + j`.
pub fn z2s2() -> FiniteAlgebra {
    z2_semigroup()
        .direct_product(&s2_semigroup())
        .unwrap()
        .with_name("Z2xS2")
}

/// The three nontrivial proper congruences of `Z2 × S2`.
pub fn z2s2_beta() -> Partition {
    "0,1|2,3".parse().unwrap()
}

pub fn z2s2_delta() -> Partition {
    "0,2|1|3".parse().unwrap()
}

pub fn z2s2_theta() -> Partition {
    "0,2|1,3".parse().unwrap()
}

/// The cyclic group of order 4 in the group signature.
pub fn z4() -> FiniteAlgebra {
    FiniteAlgebra::new(
        "Z4",
        4,
        vec![
            binary("add", 4, |x, y| (x + y) % 4),
            OperationTable::from_fn("neg", 1, 4, |a| (4 - a[0]) % 4),
            OperationTable::new("zero", 0, vec![0]),
        ],
    )
    .unwrap()
}

pub fn trivial_semigroup() -> FiniteAlgebra {
    FiniteAlgebra::new("trivial", 1, vec![binary("mul", 1, |_, _| 0)]).unwrap()
}

/// A set with no operations.
pub fn set(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::new(format!("set{n}"), n, vec![]).unwrap()
}

/// The 2-element meet semilattice.
pub fn semilattice2() -> FiniteAlgebra {
    FiniteAlgebra::new("SL2", 2, vec![binary("meet", 2, |x, y| x.min(y))]).unwrap()
}

/// A 2-element algebra whose only operation is the first projection.
pub fn projection2() -> FiniteAlgebra {
    FiniteAlgebra::new("P2", 2, vec![binary("p", 2, |x, _| x)]).unwrap()
}

/// A 3-element algebra with a majority operation (first argument wins on
/// total disagreement).
pub fn majority3() -> FiniteAlgebra {
    let m = OperationTable::from_fn("maj", 3, 3, |a| if a[1] == a[2] { a[1] } else { a[0] });
    FiniteAlgebra::new("Maj3", 3, vec![m]).unwrap()
}

/// All 16 binary operations on a 2-element set.
pub fn two_element_groupoids() -> Vec<FiniteAlgebra> {
    (0..16usize)
        .map(|code| {
            let table = (0..4).map(|i| (code >> (3 - i)) & 1).collect();
            FiniteAlgebra::new(format!("G2_{code}"), 2, vec![OperationTable::new("f", 2, table)]).unwrap()
        })
        .collect()
}

/// `count` seeded-random binary operations on an `n`-element set.
pub fn random_groupoids(seed: u64, count: usize, n: usize) -> Vec<FiniteAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let table = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
            FiniteAlgebra::new(format!("G{n}_s{seed}_{i}"), n, vec![OperationTable::new("f", 2, table)]).unwrap()
        })
        .collect()
}

/// Seeded-random idempotent binary operations on an `n`-element set.
pub fn random_idempotent_groupoids(seed: u64, count: usize, n: usize) -> Vec<FiniteAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let table = (0..n * n)
                .map(|k| if k / n == k % n { k / n } else { rng.gen_range(0..n) })
                .collect();
            FiniteAlgebra::new(format!("I{n}_s{seed}_{i}"), n, vec![OperationTable::new("f", 2, table)]).unwrap()
        })
        .collect()
}

/// The bundled fixture files, by file name.
pub const BUNDLED: &[(&str, &str)] = &[
    ("z2s2.alg", include_str!("../fixtures/z2s2.alg")),
    ("z4.alg", include_str!("../fixtures/z4.alg")),
    ("set3.alg", include_str!("../fixtures/set3.alg")),
    ("sl2.alg", include_str!("../fixtures/sl2.alg")),
    ("maj3.alg", include_str!("../fixtures/maj3.alg")),
    ("trivial.alg", include_str!("../fixtures/trivial.alg")),
];
