//! The algebra `A(α)` of pairs in a congruence, its projection kernels, and
//! the diagonal congruences `Δ_{α,β}`.

use crate::algebra::{FiniteAlgebra, OperationTable};
use crate::congruence::generate_with;
use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};

/// The pairs of a relation in lexicographic order with a dense index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpace {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl PairSpace {
    pub fn new(alpha: &Partition) -> Self {
        let n = alpha.size();
        let mut pairs = Vec::new();
        let mut index = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                if alpha.related(x, y) {
                    index[x * n + y] = pairs.len();
                    pairs.push((x, y));
                }
            }
        }
        PairSpace { n, pairs, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        let i = *self.index.get(x * self.n + y)?;
        (i != usize::MAX).then_some(i)
    }

    /// Index of each diagonal pair `(x, x)`.
    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.index[x * self.n + x]).collect()
    }

    /// Coordinatewise evaluation of a basic operation on pair indices.
    pub(crate) fn apply(&self, alg: &FiniteAlgebra, op: usize, args: &[usize]) -> usize {
        let k = args.len();
        let mut left = [0usize; 8];
        let mut right = [0usize; 8];
        let (l, r) = if k <= 8 {
            for (i, &a) in args.iter().enumerate() {
                (left[i], right[i]) = self.pairs[a];
            }
            (alg.apply(op, &left[..k]), alg.apply(op, &right[..k]))
        } else {
            let lv: Vec<usize> = args.iter().map(|&a| self.pairs[a].0).collect();
            let rv: Vec<usize> = args.iter().map(|&a| self.pairs[a].1).collect();
            (alg.apply(op, &lv), alg.apply(op, &rv))
        };
        self.index[l * self.n + r]
    }

    /// Congruence of `A(α)` generated by pairs of pair-indices, computed
    /// without tabulating the derived operations.
    pub fn generate(&self, alg: &FiniteAlgebra, seed: impl Iterator<Item = (usize, usize)>) -> Partition {
        let arities: Vec<usize> = (0..alg.op_count()).map(|op| alg.arity(op)).collect();
        generate_with(
            self.len(),
            &arities,
            |op, args| self.apply(alg, op, args),
            UnionFind::new(self.len()),
            seed,
        )
    }

    /// `Δ_{α,β}`: generated by `((x,x),(z,z))` for `(x,z) ∈ β`.
    pub fn delta(&self, alg: &FiniteAlgebra, beta: &Partition) -> Partition {
        let diag = self.diagonal();
        let seed: Vec<(usize, usize)> = (0..self.n)
            .filter(|&z| beta.rep(z) != z)
            .map(|z| (diag[beta.rep(z)], diag[z]))
            .collect();
        self.generate(alg, seed.into_iter())
    }

    /// `β₁` (coordinate 1) or `β₂` (coordinate 2).
    pub fn lift(&self, beta: &Partition, coordinate: usize) -> Partition {
        let labels: Vec<usize> = self
            .pairs
            .iter()
            .map(|&(x, y)| beta.rep(if coordinate == 1 { x } else { y }))
            .collect();
        Partition::from_labels(&labels)
    }
}

/// `A(α)`: the subalgebra of `A²` with universe `α`.
#[derive(Clone, Debug)]
pub struct GraphAlgebra {
    pub alpha: Partition,
    pub space: PairSpace,
    pub algebra: FiniteAlgebra,
    pub eta1: Partition,
    pub eta2: Partition,
}

/// Largest derived algebra tabulated by `graph_algebra`.
pub const GRAPH_TABLE_LIMIT: usize = 1 << 22;

pub fn graph_algebra(alg: &FiniteAlgebra, alpha: &Partition) -> Result<GraphAlgebra> {
    if !alg.is_congruence(alpha) {
        return Err(Error::arg(format!("{alpha} is not a congruence of {}", alg.name())));
    }
    let space = PairSpace::new(alpha);
    let m = space.len();
    let mut ops = Vec::with_capacity(alg.op_count());
    for (op, o) in alg.operations().iter().enumerate() {
        let cells = crate::algebra::checked_pow(m, o.arity).filter(|&c| c <= GRAPH_TABLE_LIMIT);
        if cells.is_none() {
            return Err(Error::Budget {
                what: "graph algebra table",
                budget: GRAPH_TABLE_LIMIT,
                partial: m,
            });
        }
        ops.push(OperationTable::from_fn(o.name.clone(), o.arity, m, |args| space.apply(alg, op, args)));
    }
    let algebra = FiniteAlgebra::new(format!("{}({alpha})", alg.name()), m, ops)?;
    let eta1 = space.lift(&Partition::zero(alg.size()), 1);
    let eta2 = space.lift(&Partition::zero(alg.size()), 2);
    Ok(GraphAlgebra {
        alpha: alpha.clone(),
        space,
        algebra,
        eta1,
        eta2,
    })
}

impl GraphAlgebra {
    pub fn size(&self) -> usize {
        self.space.len()
    }

    pub fn lift(&self, beta: &Partition, coordinate: usize) -> Result<Partition> {
        if coordinate != 1 && coordinate != 2 {
            return Err(Error::arg("coordinate must be 1 or 2"));
        }
        if beta.size() != self.alpha.size() {
            return Err(Error::arg("partition size does not match base algebra"));
        }
        Ok(self.space.lift(beta, coordinate))
    }

    /// `Δ_{α,β}` on this `A(α)`.
    pub fn delta(&self, base: &FiniteAlgebra, beta: &Partition) -> Result<Partition> {
        if !base.is_congruence(beta) {
            return Err(Error::arg(format!("{beta} is not a congruence of {}", base.name())));
        }
        Ok(self.space.delta(base, beta))
    }

    /// Projection of a relation on `A(α)` onto coordinate 1 or 2 of the base.
    pub fn project(&self, rel: &Partition, coordinate: usize) -> Partition {
        let n = self.alpha.size();
        let mut uf = UnionFind::new(n);
        for (i, &r) in rel.reps().iter().enumerate() {
            let (a, b) = (self.space.pair(i), self.space.pair(r));
            if coordinate == 1 {
                uf.union(a.0, b.0);
            } else {
                uf.union(a.1, b.1);
            }
        }
        uf.into_partition()
    }

    /// Restriction of a relation to the diagonal, indexed by base elements.
    pub fn on_diagonal(&self, rel: &Partition) -> Partition {
        rel.restrict(&self.space.diagonal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sizes() {
        let a = fixtures::z2s2();
        assert_eq!(graph_algebra(&a, &fixtures::z2s2_beta()).unwrap().size(), 8);
        let g0 = graph_algebra(&a, &Partition::zero(4)).unwrap();
        assert_eq!(g0.size(), 4);
        assert_eq!(g0.algebra.operations()[0].table, a.operations()[0].table);
        let g1 = graph_algebra(&a, &Partition::one(4)).unwrap();
        assert_eq!(g1.algebra.operations(), a.direct_product(&a).unwrap().operations());
        assert!(graph_algebra(&a, &"0,3|1|2".parse().unwrap()).is_err());
    }

    #[test]
    fn kernels_and_diagonal() {
        let a = fixtures::z2s2();
        for alpha in [fixtures::z2s2_beta(), fixtures::z2s2_theta(), Partition::one(4)] {
            let g = graph_algebra(&a, &alpha).unwrap();
            assert!(g.eta1.meet(&g.eta2).unwrap().is_zero());
            assert!(g.algebra.is_congruence(&g.eta1));
            assert_eq!(g.lift(&Partition::zero(4), 1).unwrap(), g.eta1);
            assert!(g.lift(&Partition::one(4), 1).unwrap().is_one());
            let diag = g.space.diagonal();
            let mut sorted = diag.clone();
            sorted.sort();
            assert!(g.algebra.subalgebra(&sorted).is_ok());
        }
    }

    #[test]
    fn delta_below_lifts() {
        let a = fixtures::z2s2();
        let l = crate::congruence::con_lattice(&a, 100).unwrap();
        for alpha in l.congruences() {
            let g = graph_algebra(&a, alpha).unwrap();
            assert!(g.delta(&a, &Partition::zero(4)).unwrap().is_zero());
            for beta in l.congruences() {
                let d = g.delta(&a, beta).unwrap();
                assert!(g.algebra.is_congruence(&d));
                let both = g.lift(beta, 1).unwrap().meet(&g.lift(beta, 2).unwrap()).unwrap();
                assert!(d.leq(&both));
                // tabulated and lazy generation agree
                let diag = g.space.diagonal();
                let seed: Vec<(usize, usize)> = beta.pairs().into_iter().map(|(x, z)| (diag[x], diag[z])).collect();
                assert_eq!(crate::congruence::cg_set(&g.algebra, &seed).unwrap(), d);
            }
        }
    }

    #[test]
    fn projection_inverts_lift() {
        let a = fixtures::z2s2();
        let g = graph_algebra(&a, &fixtures::z2s2_beta()).unwrap();
        let d1 = g.lift(&fixtures::z2s2_delta(), 1).unwrap();
        assert_eq!(g.project(&d1, 1), fixtures::z2s2_delta());
    }
}
