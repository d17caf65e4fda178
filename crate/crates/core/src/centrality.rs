//! The centralizer relation `C(α,β;δ)`, commutators, annihilators and
//! solvability.
//!
//! Two independent implementations of the centralizer are provided. The
//! matrix method closes the generators of `M(α,β)` inside `A⁴` and scans the
//! quadruples. The Δ-method works in `A(β)`: the row pairs of `M(α,β)` form
//! a tolerance whose transitive closure is `Δ_{β,α}`, so `C(α,β;δ)` holds
//! iff no `Δ_{β,α}`-class contains both a `δ`-pair and a non-`δ`-pair.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::congruence::{cg, cg_above, CongruenceLattice};
use crate::constructions::graph::PairSpace;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subpower::{closure_with_origins, Closure, Origin};
use crate::term::Term;

/// Algebras up to this size get matrix-set witnesses on failure.
pub const WITNESS_SIZE_LIMIT: usize = 12;

pub(crate) fn require_congruence(alg: &FiniteAlgebra, p: &Partition, label: &str) -> Result<()> {
    if p.size() != alg.size() {
        return Err(Error::arg(format!(
            "{label} has size {}, algebra has size {}",
            p.size(),
            alg.size()
        )));
    }
    if let Some(v) = alg.compatibility_violation(p) {
        return Err(Error::arg(format!(
            "{label} = {p} is not a congruence: {}{:?} vs {}{:?}",
            v.op, v.left, v.op, v.right
        )));
    }
    Ok(())
}

/// `M(α,β)` as a generated subpower of `A⁴`; `(p,q,r,s)` is the matrix
/// `[[p,q],[r,s]]`.
#[derive(Clone, Debug)]
pub struct MatrixSet {
    pub alpha: Partition,
    pub beta: Partition,
    closure: Closure,
    generators: Vec<[usize; 4]>,
}

pub fn matrix_set(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition, budget: usize) -> Result<MatrixSet> {
    require_congruence(alg, alpha, "alpha")?;
    require_congruence(alg, beta, "beta")?;
    let mut gens: Vec<Vec<usize>> = alpha
        .pairs().into_iter()
        .map(|(a, b)| vec![a, a, b, b])
        .chain(beta.pairs().into_iter().map(|(u, v)| vec![u, v, u, v]))
        .collect();
    gens.sort();
    gens.dedup();
    let generators = gens.iter().map(|g| [g[0], g[1], g[2], g[3]]).collect();
    let closure = closure_with_origins(alg, 4, gens, budget)?;
    Ok(MatrixSet {
        alpha: alpha.clone(),
        beta: beta.clone(),
        closure,
        generators,
    })
}

impl MatrixSet {
    pub fn len(&self) -> usize {
        self.closure.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closure.is_empty()
    }

    pub fn quad(&self, i: usize) -> [usize; 4] {
        let e = &self.closure.elements[i];
        [e[0], e[1], e[2], e[3]]
    }

    /// Quadruples in closure order.
    pub fn quads(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        (0..self.len()).map(|i| self.quad(i))
    }

    pub fn sorted(&self) -> Vec<[usize; 4]> {
        let mut v: Vec<[usize; 4]> = self.quads().collect();
        v.sort();
        v
    }

    pub fn contains(&self, q: [usize; 4]) -> bool {
        self.closure.index_of(&q).is_some()
    }

    pub fn index_of(&self, q: [usize; 4]) -> Option<usize> {
        self.closure.index_of(&q)
    }

    /// Generators, sorted; variable `i` of a provenance term is generator `i`.
    pub fn generators(&self) -> &[[usize; 4]] {
        &self.generators
    }

    /// A term over the generators producing quadruple `i`.
    pub fn provenance(&self, i: usize) -> Term {
        match &self.closure.origins[i] {
            Origin::Generator(g) => Term::Var(*g),
            Origin::Apply(op, args) => Term::Op(*op, args.iter().map(|&a| self.provenance(a)).collect()),
        }
    }

    /// Lexicographically least `(p,q,r,s)` with `p δ q` and not `r δ s`.
    pub fn first_violation(&self, delta: &Partition) -> Option<[usize; 4]> {
        self.quads()
            .filter(|q| delta.related(q[0], q[1]) && !delta.related(q[2], q[3]))
            .min()
    }

    pub fn centralizes(&self, delta: &Partition) -> bool {
        self.first_violation(delta).is_none()
    }
}

/// A quadruple showing that a centrality fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralityWitness {
    pub quad: [usize; 4],
    pub role: String,
}

impl CentralityWitness {
    fn new(quad: [usize; 4]) -> Self {
        CentralityWitness {
            quad,
            role: "top row related, bottom row not".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralityCheck {
    pub holds: bool,
    pub witness: Option<CentralityWitness>,
}

/// `C(α,β;δ)` by the matrix method, with the least violating quadruple.
pub fn centralizes_matrix(
    alg: &FiniteAlgebra,
    alpha: &Partition,
    beta: &Partition,
    delta: &Partition,
    budget: usize,
) -> Result<CentralityCheck> {
    require_congruence(alg, delta, "delta")?;
    let m = matrix_set(alg, alpha, beta, budget)?;
    let witness = m.first_violation(delta).map(CentralityWitness::new);
    Ok(CentralityCheck {
        holds: witness.is_none(),
        witness,
    })
}

/// `C(α,β;δ)` by the Δ-method.
pub fn centralizes_delta(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition, delta: &Partition) -> Result<bool> {
    require_congruence(alg, alpha, "alpha")?;
    require_congruence(alg, beta, "beta")?;
    require_congruence(alg, delta, "delta")?;
    Ok(DeltaRelation::new(alg, alpha, beta).centralizes(delta))
}

/// `C(α,β;δ)`. Decided by the Δ-method; on failure in algebras of at most
/// [`WITNESS_SIZE_LIMIT`] elements the least violating matrix is attached.
pub fn centralizes(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition, delta: &Partition) -> Result<CentralityCheck> {
    if centralizes_delta(alg, alpha, beta, delta)? {
        return Ok(CentralityCheck {
            holds: true,
            witness: None,
        });
    }
    let witness = if alg.size() <= WITNESS_SIZE_LIMIT {
        let n = alg.size();
        let m = matrix_set(alg, alpha, beta, n * n * n * n)?;
        m.first_violation(delta).map(CentralityWitness::new)
    } else {
        None
    };
    Ok(CentralityCheck { holds: false, witness })
}

/// `Δ_{β,α}` on `A(β)`.
#[derive(Clone, Debug)]
pub struct DeltaRelation {
    space: PairSpace,
    classes: Partition,
}

impl DeltaRelation {
    pub fn new(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition) -> Self {
        let space = PairSpace::new(beta);
        let classes = space.delta(alg, alpha);
        DeltaRelation { space, classes }
    }

    pub(crate) fn from_parts(space: PairSpace, classes: Partition) -> Self {
        DeltaRelation { space, classes }
    }

    pub fn space(&self) -> &PairSpace {
        &self.space
    }

    pub fn classes(&self) -> &Partition {
        &self.classes
    }

    pub fn centralizes(&self, delta: &Partition) -> bool {
        self.classes.reps().iter().enumerate().all(|(i, &r)| {
            let (p, q) = self.space.pair(r);
            let (x, y) = self.space.pair(i);
            delta.related(p, q) == delta.related(x, y)
        })
    }

    /// Pairs forced into any `δ′ ≥ δ` with `C(α,β;δ′)`.
    fn forced(&self, delta: &Partition) -> Vec<(usize, usize)> {
        let m = self.space.len();
        let mut hit = vec![false; m];
        for i in 0..m {
            let (x, y) = self.space.pair(i);
            if delta.related(x, y) {
                hit[self.classes.rep(i)] = true;
            }
        }
        (0..m)
            .filter(|&i| hit[self.classes.rep(i)])
            .map(|i| self.space.pair(i))
            .filter(|&(x, y)| !delta.related(x, y))
            .collect()
    }

    /// Least `δ ≥ ε` with `C(α,β;δ)`.
    pub fn least_above(&self, alg: &FiniteAlgebra, eps: &Partition) -> Partition {
        let mut delta = eps.clone();
        loop {
            let add = self.forced(&delta);
            if add.is_empty() {
                return delta;
            }
            delta = cg_above(alg, &delta, &add);
        }
    }
}

/// Caches `Δ_{β,α}` per pair so that repeated queries on one algebra stay
/// cheap. Inputs are trusted to be congruences.
#[derive(Debug)]
pub struct Centralizer<'a> {
    alg: &'a FiniteAlgebra,
    deltas: HashMap<(Partition, Partition), DeltaRelation>,
}

impl<'a> Centralizer<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Self {
        Centralizer {
            alg,
            deltas: HashMap::new(),
        }
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    fn relation(&mut self, alpha: &Partition, beta: &Partition) -> &DeltaRelation {
        let alg = self.alg;
        self.deltas
            .entry((alpha.clone(), beta.clone()))
            .or_insert_with(|| DeltaRelation::new(alg, alpha, beta))
    }

    pub fn centralizes(&mut self, alpha: &Partition, beta: &Partition, delta: &Partition) -> bool {
        self.relation(alpha, beta).centralizes(delta)
    }

    pub fn commutator(&mut self, alpha: &Partition, beta: &Partition) -> Partition {
        let zero = Partition::zero(self.alg.size());
        self.relative_commutator(alpha, beta, &zero)
    }

    pub fn relative_commutator(&mut self, alpha: &Partition, beta: &Partition, eps: &Partition) -> Partition {
        let alg = self.alg;
        self.relation(alpha, beta).least_above(alg, eps)
    }
}

/// `[α,β]`: the least `δ` with `C(α,β;δ)`.
pub fn commutator(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition) -> Result<Partition> {
    relative_commutator(alg, alpha, beta, &Partition::zero(alg.size()))
}

/// `[α,β]_ε`: the least `δ ≥ ε` with `C(α,β;δ)`.
pub fn relative_commutator(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition, eps: &Partition) -> Result<Partition> {
    require_congruence(alg, alpha, "alpha")?;
    require_congruence(alg, beta, "beta")?;
    require_congruence(alg, eps, "eps")?;
    Ok(DeltaRelation::new(alg, alpha, beta).least_above(alg, eps))
}

/// The same fixpoint driven by the full matrix set.
pub fn relative_commutator_matrix(
    alg: &FiniteAlgebra,
    alpha: &Partition,
    beta: &Partition,
    eps: &Partition,
    budget: usize,
) -> Result<Partition> {
    require_congruence(alg, eps, "eps")?;
    let m = matrix_set(alg, alpha, beta, budget)?;
    let mut delta = eps.clone();
    loop {
        let add: Vec<(usize, usize)> = m
            .quads()
            .filter(|q| delta.related(q[0], q[1]) && !delta.related(q[2], q[3]))
            .map(|q| (q[2], q[3]))
            .collect();
        if add.is_empty() {
            return Ok(delta);
        }
        delta = cg_above(alg, &delta, &add);
    }
}

fn principal_congruences(alg: &FiniteAlgebra) -> Result<Vec<Partition>> {
    let n = alg.size();
    let mut out: Vec<Partition> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let p = cg(alg, a, b)?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// `(δ : β)_L`: the largest `γ` with `C(γ,β;δ)`.
pub fn left_annihilator(alg: &FiniteAlgebra, beta: &Partition, delta: &Partition) -> Result<Partition> {
    require_congruence(alg, beta, "beta")?;
    require_congruence(alg, delta, "delta")?;
    let mut c = Centralizer::new(alg);
    let mut acc = Partition::zero(alg.size());
    for p in principal_congruences(alg)? {
        if c.centralizes(&p, beta, delta) {
            acc = acc.join_unchecked(&p);
        }
    }
    Ok(acc)
}

/// Outcome of a right annihilator query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RightAnnihilator {
    Exists(Partition),
    /// `y` and `y2` are each centralized but their join is not.
    Missing { y: Partition, y2: Partition },
}

/// `(δ : β)_R`: the largest `γ` with `C(β,γ;δ)`, when it exists.
pub fn right_annihilator(alg: &FiniteAlgebra, beta: &Partition, delta: &Partition) -> Result<RightAnnihilator> {
    require_congruence(alg, beta, "beta")?;
    require_congruence(alg, delta, "delta")?;
    let mut c = Centralizer::new(alg);
    let mut acc = Partition::zero(alg.size());
    for p in principal_congruences(alg)? {
        if !c.centralizes(beta, &p, delta) {
            continue;
        }
        let next = acc.join_unchecked(&p);
        if !c.centralizes(beta, &next, delta) {
            return Ok(RightAnnihilator::Missing { y: acc, y2: p });
        }
        acc = next;
    }
    Ok(RightAnnihilator::Exists(acc))
}

/// `C(θ,θ;δ)`; with `δ ≤ θ` this is `δ ◁ θ`.
pub fn is_abelian_over(alg: &FiniteAlgebra, theta: &Partition, delta: &Partition) -> Result<bool> {
    centralizes_delta(alg, theta, theta, delta)
}

/// Whether `I[δ,θ]` has no abelian subinterval: `[y,y]_x = y` for all
/// `δ ≤ x < y ≤ θ`.
pub fn is_neutral_interval(alg: &FiniteAlgebra, lattice: &CongruenceLattice, delta: &Partition, theta: &Partition) -> Result<bool> {
    Ok(neutrality_violation(alg, lattice, delta, theta)?.is_none())
}

/// The first `(x, y)` in lattice order with `x < y` in the interval and
/// `[y,y]_x < y`.
pub fn neutrality_violation(
    alg: &FiniteAlgebra,
    lattice: &CongruenceLattice,
    delta: &Partition,
    theta: &Partition,
) -> Result<Option<(Partition, Partition)>> {
    let members = lattice.interval(delta, theta)?;
    let mut c = Centralizer::new(alg);
    for x in &members {
        for y in &members {
            if x.lt(y) && c.relative_commutator(y, y, x) != *y {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// A shortest `◁`-chain from `γ∧δ` up to `γ∨δ`, if one exists.
pub fn solvably_related(
    alg: &FiniteAlgebra,
    lattice: &CongruenceLattice,
    gamma: &Partition,
    delta: &Partition,
) -> Result<Option<Vec<Partition>>> {
    let lo = lattice.require(&gamma.meet(delta)?)?;
    let hi = lattice.require(&gamma.join(delta)?)?;
    let members = lattice.interval_indices(lo, hi)?;
    let mut c = Centralizer::new(alg);
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([lo]);
    prev.insert(lo, lo);
    while let Some(x) = queue.pop_front() {
        if x == hi {
            let mut chain = vec![x];
            let mut cur = x;
            while cur != lo {
                cur = prev[&cur];
                chain.push(cur);
            }
            chain.reverse();
            return Ok(Some(chain.into_iter().map(|i| lattice.get(i).clone()).collect()));
        }
        for &y in &members {
            if y != x && !prev.contains_key(&y) && lattice.leq(x, y) {
                let (px, py) = (lattice.get(x), lattice.get(y));
                if c.centralizes(py, py, px) {
                    prev.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::con_lattice;
    use crate::fixtures;

    fn z2s2() -> (FiniteAlgebra, Partition, Partition, Partition) {
        (fixtures::z2s2(), fixtures::z2s2_beta(), fixtures::z2s2_delta(), fixtures::z2s2_theta())
    }

    #[test]
    fn matrix_set_basics() {
        let (a, _, _, theta) = z2s2();
        let zero = Partition::zero(4);
        let m = matrix_set(&a, &zero, &zero, 1000).unwrap();
        assert_eq!(m.sorted(), (0..4).map(|x| [x, x, x, x]).collect::<Vec<_>>());
        let m = matrix_set(&a, &theta, &theta, 1000).unwrap();
        assert!(m.contains([0, 0, 2, 2]) && m.contains([0, 2, 0, 2]));
        for q in m.quads() {
            assert!(m.contains([q[2], q[3], q[0], q[1]]));
            assert!(m.contains([q[1], q[0], q[3], q[2]]));
        }
        for i in 0..m.len() {
            let t = m.provenance(i);
            let mut v = [0; 4];
            for (c, slot) in v.iter_mut().enumerate() {
                let assign: Vec<usize> = m.generators().iter().map(|g| g[c]).collect();
                *slot = a.eval_term(&t, &assign).unwrap();
            }
            assert_eq!(v, m.quad(i));
        }
    }

    #[test]
    fn matrix_set_one_theta_size() {
        // brute-force oracle: all (t(a,u), t(a,v), t(b,u), t(b,v)) closed up
        let (a, _, _, theta) = z2s2();
        let one = Partition::one(4);
        let m = matrix_set(&a, &one, &theta, 1000).unwrap();
        let mut set: std::collections::BTreeSet<[usize; 4]> = std::collections::BTreeSet::new();
        for x in 0..4 {
            for y in 0..4 {
                set.insert([x, x, y, y]);
                if theta.related(x, y) {
                    set.insert([x, y, x, y]);
                }
            }
        }
        loop {
            let cur: Vec<[usize; 4]> = set.iter().copied().collect();
            let before = set.len();
            for p in &cur {
                for q in &cur {
                    set.insert(std::array::from_fn(|i| a.apply(0, &[p[i], q[i]])));
                }
            }
            if set.len() == before {
                break;
            }
        }
        assert_eq!(m.sorted(), set.into_iter().collect::<Vec<_>>());
        assert_eq!(m.len(), 32);
    }

    #[test]
    fn critical_interval_is_abelian() {
        let (a, beta, delta, theta) = z2s2();
        assert!(centralizes(&a, &theta, &theta, &delta).unwrap().holds);
        let c = centralizes(&a, &beta, &theta, &delta).unwrap();
        assert!(!c.holds);
        let w = c.witness.unwrap();
        assert!(delta.related(w.quad[0], w.quad[1]) && !delta.related(w.quad[2], w.quad[3]));
        assert_eq!(w.quad, [0, 2, 1, 3]);
        assert!(is_abelian_over(&a, &theta, &delta).unwrap());
        assert!(!is_abelian_over(&a, &Partition::one(4), &Partition::zero(4)).unwrap());
        let l = con_lattice(&a, 100).unwrap();
        assert!(!is_neutral_interval(&a, &l, &delta, &theta).unwrap());
        assert!(is_neutral_interval(&a, &l, &delta, &delta).unwrap());
    }

    #[test]
    fn commutators_of_z2s2() {
        let (a, beta, delta, theta) = z2s2();
        let one = Partition::one(4);
        let zero = Partition::zero(4);
        let tt = commutator(&a, &theta, &theta).unwrap();
        assert!(tt.leq(&delta));
        assert_eq!(tt, zero);
        assert_eq!(relative_commutator(&a, &one, &theta, &delta).unwrap(), theta);
        assert_eq!(relative_commutator(&a, &beta, &theta, &one).unwrap(), one);
        assert_eq!(commutator(&a, &zero, &beta).unwrap(), zero);
        let l = con_lattice(&a, 100).unwrap();
        for x in l.congruences() {
            assert_eq!(centralizes_delta(&a, &theta, &theta, x).unwrap(), tt.leq(x));
        }
        assert!(commutator(&a, &"0,3|1|2".parse().unwrap(), &beta).is_err());
    }

    #[test]
    fn commutator_is_least_centralizing() {
        for alg in fixtures::random_groupoids(5, 15, 3).iter().chain([fixtures::z2s2(), fixtures::z4()].iter()) {
            let l = con_lattice(alg, 1000).unwrap();
            for x in l.congruences() {
                for y in l.congruences() {
                    let c = commutator(alg, x, y).unwrap();
                    assert_eq!(c, relative_commutator_matrix(alg, x, y, &Partition::zero(alg.size()), 1 << 16).unwrap());
                    assert!(c.leq(&x.meet(y).unwrap()));
                    assert!(centralizes_delta(alg, x, y, &c).unwrap());
                    let m = matrix_set(alg, x, y, 1 << 16).unwrap();
                    for d in l.congruences() {
                        let holds = centralizes_delta(alg, x, y, d).unwrap();
                        assert_eq!(holds, m.centralizes(d));
                        if holds {
                            assert!(c.leq(d));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn abelian_group() {
        let a = fixtures::z4();
        let one = Partition::one(4);
        let zero = Partition::zero(4);
        assert_eq!(commutator(&a, &one, &one).unwrap(), zero);
        assert_eq!(right_annihilator(&a, &one, &zero).unwrap(), RightAnnihilator::Exists(one.clone()));
        let l = con_lattice(&a, 100).unwrap();
        assert!(!is_neutral_interval(&a, &l, &zero, &one).unwrap());
    }

    #[test]
    fn annihilators() {
        let (a, beta, delta, theta) = z2s2();
        let zero = Partition::zero(4);
        let one = Partition::one(4);
        assert!(left_annihilator(&a, &zero, &zero).unwrap().is_one());
        assert!(left_annihilator(&a, &beta, &one).unwrap().is_one());
        let la = left_annihilator(&a, &theta, &delta).unwrap();
        assert!(theta.leq(&la));
        assert!(centralizes_delta(&a, &la, &theta, &delta).unwrap());
        assert_eq!(right_annihilator(&a, &zero, &zero).unwrap(), RightAnnihilator::Exists(one));
        let _ = beta;
    }

    #[test]
    fn solvability() {
        let (a, _, delta, theta) = z2s2();
        let l = con_lattice(&a, 100).unwrap();
        assert_eq!(solvably_related(&a, &l, &delta, &delta).unwrap().unwrap(), vec![delta.clone()]);
        assert_eq!(
            solvably_related(&a, &l, &delta, &theta).unwrap().unwrap(),
            vec![delta.clone(), theta.clone()]
        );
        let zero = Partition::zero(4);
        let one = Partition::one(4);
        let chain = solvably_related(&a, &l, &zero, &one).unwrap();
        // 0 ◁ δ ◁ θ but neither θ nor β reaches 1
        assert!(chain.is_none());
    }
}
