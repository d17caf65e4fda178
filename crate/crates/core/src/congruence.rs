//! Principal and generated congruences, congruence lattices, and pentagon
//! detection.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{checked_pow, increment, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};

/// Default cap on the number of congruences enumerated.
pub const DEFAULT_LATTICE_BUDGET: usize = 100_000;

/// The least congruence relating `a` and `b`.
pub fn cg(alg: &FiniteAlgebra, a: usize, b: usize) -> Result<Partition> {
    cg_set(alg, &[(a, b)])
}

/// The least congruence containing all of `pairs`.
pub fn cg_set(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Result<Partition> {
    let n = alg.size();
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
        return Err(Error::arg(format!("pair ({a},{b}) outside universe of size {n}")));
    }
    Ok(generate(alg, UnionFind::new(n), pairs.iter().copied()))
}

/// The least congruence above `base` containing `pairs`.
pub fn cg_above(alg: &FiniteAlgebra, base: &Partition, pairs: &[(usize, usize)]) -> Partition {
    let seed: Vec<(usize, usize)> = (0..base.size())
        .filter(|&i| base.rep(i) != i)
        .map(|i| (base.rep(i), i))
        .chain(pairs.iter().copied())
        .collect();
    generate(alg, UnionFind::new(alg.size()), seed.into_iter())
}

/// Worklist closure: every merged pair is pushed through every basic
/// translation until nothing new merges.
fn generate(alg: &FiniteAlgebra, uf: UnionFind, seed: impl Iterator<Item = (usize, usize)>) -> Partition {
    let arities: Vec<usize> = (0..alg.op_count()).map(|op| alg.arity(op)).collect();
    generate_with(alg.size(), &arities, |op, args| alg.apply(op, args), uf, seed)
}

/// Congruence generation on an algebra given only by an evaluation function,
/// so derived algebras need not be tabulated.
pub(crate) fn generate_with(
    n: usize,
    arities: &[usize],
    eval: impl Fn(usize, &[usize]) -> usize,
    mut uf: UnionFind,
    seed: impl Iterator<Item = (usize, usize)>,
) -> Partition {
    let mut work: Vec<(usize, usize)> = Vec::new();
    for (a, b) in seed {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    let mut args = Vec::new();
    while let Some((x, y)) = work.pop() {
        for (op, &k) in arities.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let others = checked_pow(n, k - 1).expect("arity too large");
            let mut rest = vec![0usize; k - 1];
            for _ in 0..others {
                for pos in 0..k {
                    args.clear();
                    args.extend_from_slice(&rest[..pos]);
                    args.push(x);
                    args.extend_from_slice(&rest[pos..]);
                    let u = eval(op, &args);
                    args[pos] = y;
                    let v = eval(op, &args);
                    if u != v && uf.union(u, v) {
                        work.push((u, v));
                    }
                }
                increment(&mut rest, n);
            }
        }
    }
    uf.into_partition()
}

/// All congruences of an algebra, ordered by decreasing block count and then
/// lexicographically by representative array (so index 0 is the equality
/// relation and the last index is the total relation).
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    size: usize,
    congruences: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl CongruenceLattice {
    /// Wraps an explicit list of congruences (sorted into canonical order).
    pub fn from_congruences(size: usize, mut congruences: Vec<Partition>) -> Self {
        congruences.sort_by(|a, b| {
            b.block_count()
                .cmp(&a.block_count())
                .then_with(|| a.reps().cmp(b.reps()))
        });
        congruences.dedup();
        let index = congruences
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CongruenceLattice {
            size,
            congruences,
            index,
        }
    }

    pub fn algebra_size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.congruences[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::arg(format!("{p} is not a congruence of this algebra")))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.congruences[i].leq(&self.congruences[j])
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let p = self.congruences[i].join_unchecked(&self.congruences[j]);
        self.index[&p]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let p = self.congruences[i].meet_unchecked(&self.congruences[j]);
        self.index[&p]
    }

    /// Members between `lo` and `hi`, in lattice order.
    pub fn interval(&self, lo: &Partition, hi: &Partition) -> Result<Vec<Partition>> {
        Ok(self
            .interval_indices(self.require(lo)?, self.require(hi)?)?
            .into_iter()
            .map(|i| self.congruences[i].clone())
            .collect())
    }

    pub fn interval_indices(&self, lo: usize, hi: usize) -> Result<Vec<usize>> {
        if !self.leq(lo, hi) {
            return Err(Error::arg(format!(
                "{} is not below {}",
                self.congruences[lo], self.congruences[hi]
            )));
        }
        Ok((0..self.len())
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect())
    }

    /// Upper covers of each element.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                let above: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.leq(i, j)).collect();
                above
                    .iter()
                    .copied()
                    .filter(|&j| !above.iter().any(|&k| k != j && self.leq(k, j)))
                    .collect()
            })
            .collect()
    }

    /// A triple `(x, y, z)` violating the modular law, if any.
    pub fn modularity_violation(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.len() {
            for z in 0..self.len() {
                if x == z || !self.leq(x, z) {
                    continue;
                }
                for y in 0..self.len() {
                    let lhs = self.join(x, self.meet(y, z));
                    let rhs = self.meet(self.join(x, y), z);
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_violation().is_none()
    }

    /// Every labelled pentagon, sorted lexicographically by
    /// `(bottom, beta, delta, theta, top)` indices.
    pub fn find_pentagons(&self, anchor: &PentagonAnchor) -> Vec<Pentagon> {
        let mut out = Vec::new();
        for delta in 0..self.len() {
            if anchor.delta.is_some_and(|d| d != delta) {
                continue;
            }
            for theta in 0..self.len() {
                if theta == delta || !self.leq(delta, theta) || anchor.theta.is_some_and(|t| t != theta) {
                    continue;
                }
                for beta in 0..self.len() {
                    if anchor.beta.is_some_and(|b| b != beta) {
                        continue;
                    }
                    let bottom = self.meet(beta, theta);
                    if bottom != self.meet(beta, delta) {
                        continue;
                    }
                    let top = self.join(beta, delta);
                    if top != self.join(beta, theta) {
                        continue;
                    }
                    let five = [bottom, beta, delta, theta, top];
                    let distinct: HashSet<usize> = five.iter().copied().collect();
                    if distinct.len() != 5 {
                        continue;
                    }
                    if anchor.bottom.is_some_and(|b| b != bottom) || anchor.top.is_some_and(|t| t != top) {
                        continue;
                    }
                    out.push(Pentagon {
                        bottom,
                        beta,
                        delta,
                        theta,
                        top,
                    });
                }
            }
        }
        out.sort_by_key(|p| p.indices());
        out
    }

    pub fn pentagon_partitions(&self, p: &Pentagon) -> LabeledPentagon {
        LabeledPentagon {
            bottom: self.congruences[p.bottom].clone(),
            beta: self.congruences[p.beta].clone(),
            delta: self.congruences[p.delta].clone(),
            theta: self.congruences[p.theta].clone(),
            top: self.congruences[p.top].clone(),
        }
    }
}

/// The full congruence lattice: principal congruences closed under joins.
pub fn con_lattice(alg: &FiniteAlgebra, budget: usize) -> Result<CongruenceLattice> {
    let n = alg.size();
    let mut principal: Vec<Partition> = Vec::new();
    let mut seen: HashSet<Partition> = HashSet::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let p = cg(alg, a, b)?;
            if seen.insert(p.clone()) {
                principal.push(p);
            }
        }
    }
    let mut all: Vec<Partition> = vec![Partition::zero(n)];
    let mut members: HashSet<Partition> = all.iter().cloned().collect();
    for p in &principal {
        if members.insert(p.clone()) {
            all.push(p.clone());
        }
    }
    let mut frontier: Vec<Partition> = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for p in &principal {
                let j = x.join_unchecked(p);
                if !members.contains(&j) {
                    if members.len() >= budget {
                        return Err(Error::Budget {
                            what: "congruence lattice",
                            budget,
                            partial: members.len(),
                        });
                    }
                    members.insert(j.clone());
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    Ok(CongruenceLattice::from_congruences(n, all))
}

/// A labelled pentagon by lattice indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pentagon {
    pub bottom: usize,
    pub beta: usize,
    pub delta: usize,
    pub theta: usize,
    pub top: usize,
}

impl Pentagon {
    pub fn indices(&self) -> [usize; 5] {
        [self.bottom, self.beta, self.delta, self.theta, self.top]
    }
}

/// A pentagon given by its five congruences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPentagon {
    pub bottom: Partition,
    pub beta: Partition,
    pub delta: Partition,
    pub theta: Partition,
    pub top: Partition,
}

impl LabeledPentagon {
    /// Builds the pentagon generated by `beta`, `delta`, `theta` and checks
    /// its shape.
    pub fn generated(beta: Partition, delta: Partition, theta: Partition) -> Result<Self> {
        let p = LabeledPentagon {
            bottom: beta.meet(&theta)?,
            top: beta.join(&delta)?,
            beta,
            delta,
            theta,
        };
        p.check_shape()?;
        Ok(p)
    }

    pub fn check_shape(&self) -> Result<()> {
        let ok = self.delta.lt(&self.theta)
            && self.beta.meet_unchecked(&self.theta) == self.bottom
            && self.beta.meet_unchecked(&self.delta) == self.bottom
            && self.beta.join_unchecked(&self.delta) == self.top
            && self.beta.join_unchecked(&self.theta) == self.top;
        let five = [&self.bottom, &self.beta, &self.delta, &self.theta, &self.top];
        let distinct: HashSet<&Partition> = five.into_iter().collect();
        if ok && distinct.len() == 5 {
            Ok(())
        } else {
            Err(Error::arg("congruences do not form a pentagon"))
        }
    }
}

/// Optional constraints pinning pentagon labels to lattice indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PentagonAnchor {
    pub bottom: Option<usize>,
    pub beta: Option<usize>,
    pub delta: Option<usize>,
    pub theta: Option<usize>,
    pub top: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn principal_congruences_of_z2s2() {
        let a = fixtures::z2s2();
        assert_eq!(cg(&a, 0, 2).unwrap(), fixtures::z2s2_delta());
        assert_eq!(cg(&a, 0, 1).unwrap(), fixtures::z2s2_beta());
        assert_eq!(cg(&a, 3, 3).unwrap(), Partition::zero(4));
        assert_eq!(cg_set(&a, &[(0, 2), (1, 3)]).unwrap(), fixtures::z2s2_theta());
        assert_eq!(cg_set(&a, &[]).unwrap(), Partition::zero(4));
        assert_eq!(cg_set(&a, &[(1, 0)]).unwrap(), cg(&a, 0, 1).unwrap());
        assert!(cg(&a, 0, 9).is_err());
    }

    #[test]
    fn z2s2_lattice_is_n5() {
        let a = fixtures::z2s2();
        let l = con_lattice(&a, DEFAULT_LATTICE_BUDGET).unwrap();
        let texts: Vec<String> = l.congruences().iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["0|1|2|3", "0,2|1|3", "0,1|2,3", "0,2|1,3", "0,1,2,3"]);
        assert!(!l.is_modular());
        let ps = l.find_pentagons(&PentagonAnchor::default());
        assert_eq!(ps.len(), 1);
        let lp = l.pentagon_partitions(&ps[0]);
        assert_eq!(lp.beta, fixtures::z2s2_beta());
        assert_eq!(lp.delta, fixtures::z2s2_delta());
        assert_eq!(lp.theta, fixtures::z2s2_theta());
        assert!(lp.bottom.is_zero() && lp.top.is_one());
        assert_eq!(
            l.interval(&fixtures::z2s2_delta(), &fixtures::z2s2_theta()).unwrap(),
            vec![fixtures::z2s2_delta(), fixtures::z2s2_theta()]
        );
        assert_eq!(l.interval(&Partition::zero(4), &Partition::one(4)).unwrap().len(), 5);
        assert!(l.interval(&fixtures::z2s2_theta(), &fixtures::z2s2_delta()).is_err());
        let d = fixtures::z2s2_delta();
        assert_eq!(l.interval(&d, &d).unwrap(), vec![d]);
    }

    #[test]
    fn small_lattices() {
        let t = con_lattice(&fixtures::trivial_semigroup(), 10).unwrap();
        assert_eq!(t.len(), 1);
        let s = con_lattice(&fixtures::set(3), 10).unwrap();
        assert_eq!(s.len(), 5);
        // the partition lattice of a 3-set is M3 and modular
        assert!(s.is_modular());
        assert!(s.find_pentagons(&PentagonAnchor::default()).is_empty());
        let z4 = con_lattice(&fixtures::z4(), 10).unwrap();
        assert_eq!(z4.len(), 3);
        assert!(z4.find_pentagons(&PentagonAnchor::default()).is_empty());
        assert!(matches!(con_lattice(&fixtures::set(4), 5), Err(Error::Budget { .. })));
    }

    #[test]
    fn brute_force_pentagon_count_on_set4() {
        // Partition lattice of a 4-set (Bell(4) = 15), not modular.
        let l = con_lattice(&fixtures::set(4), 100).unwrap();
        assert_eq!(l.len(), 15);
        let fast = l.find_pentagons(&PentagonAnchor::default());
        let mut brute = Vec::new();
        let m = l.len();
        for b in 0..m {
            for be in 0..m {
                for d in 0..m {
                    for th in 0..m {
                        for tp in 0..m {
                            let five = [b, be, d, th, tp];
                            let distinct: HashSet<usize> = five.iter().copied().collect();
                            if distinct.len() == 5
                                && l.leq(d, th)
                                && l.meet(be, th) == b
                                && l.meet(be, d) == b
                                && l.join(be, d) == tp
                                && l.join(be, th) == tp
                            {
                                brute.push(five);
                            }
                        }
                    }
                }
            }
        }
        brute.sort();
        let got: Vec<[usize; 5]> = fast.iter().map(Pentagon::indices).collect();
        assert_eq!(got, brute);
        assert!(!got.is_empty());
        assert!(!l.is_modular());
    }

    #[test]
    fn anchors_filter() {
        let a = fixtures::z2s2();
        let l = con_lattice(&a, 100).unwrap();
        let d = l.index_of(&fixtures::z2s2_delta()).unwrap();
        let b = l.index_of(&fixtures::z2s2_beta()).unwrap();
        assert_eq!(l.find_pentagons(&PentagonAnchor { delta: Some(d), ..Default::default() }).len(), 1);
        assert!(l.find_pentagons(&PentagonAnchor { delta: Some(b), ..Default::default() }).is_empty());
    }

    #[test]
    fn lattice_members_are_congruences_and_meet_closed() {
        for alg in fixtures::random_groupoids(11, 20, 3).iter().chain([fixtures::z2s2(), fixtures::z4()].iter()) {
            let l = con_lattice(alg, 1000).unwrap();
            for p in l.congruences() {
                assert!(alg.is_congruence(p));
            }
            for i in 0..l.len() {
                for j in 0..l.len() {
                    let m = l.get(i).meet(l.get(j)).unwrap();
                    assert!(l.index_of(&m).is_some());
                }
            }
            assert!(l.get(0).is_zero() && l.get(l.top()).is_one());
            // no pentagon iff modular
            assert_eq!(l.find_pentagons(&PentagonAnchor::default()).is_empty(), l.is_modular());
        }
    }

    #[test]
    fn generated_congruence_is_least() {
        // brute force: every congruence containing the pair contains cg
        for alg in fixtures::random_groupoids(3, 10, 3) {
            let l = con_lattice(&alg, 1000).unwrap();
            for a in 0..3 {
                for b in 0..3 {
                    let c = cg(&alg, a, b).unwrap();
                    assert!(c.related(a, b));
                    for p in l.congruences() {
                        if p.related(a, b) {
                            assert!(c.leq(p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn labeled_pentagon_shape() {
        let lp = LabeledPentagon::generated(fixtures::z2s2_beta(), fixtures::z2s2_delta(), fixtures::z2s2_theta()).unwrap();
        assert!(lp.bottom.is_zero());
        assert!(LabeledPentagon::generated(fixtures::z2s2_delta(), fixtures::z2s2_beta(), fixtures::z2s2_theta()).is_err());
    }
}
