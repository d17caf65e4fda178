//! The ten commutator properties and the refinement quasi-identity, checked
//! over every congruence of one algebra.
//!
//! A pass only says the property holds on this algebra. A failure is a
//! counterexample for the variety the algebra generates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::centrality::{centralizes_matrix, relative_commutator_matrix, Centralizer, DeltaRelation, WITNESS_SIZE_LIMIT};
use crate::congruence::{con_lattice, CongruenceLattice};
use crate::constructions::PairSpace;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subpower::DEFAULT_CLOSURE_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Commutativity,
    LeftDistributivity,
    RightDistributivity,
    RightSemidistributivity,
    RightAnnihilators,
    RelativeRightAnnihilators,
    Symmetry,
    Determined,
    Stability,
    WeakStability,
    RefinementQuasiIdentity,
}

impl Property {
    pub const TEN: [Property; 10] = [
        Property::Commutativity,
        Property::LeftDistributivity,
        Property::RightDistributivity,
        Property::RightSemidistributivity,
        Property::RightAnnihilators,
        Property::RelativeRightAnnihilators,
        Property::Symmetry,
        Property::Determined,
        Property::Stability,
        Property::WeakStability,
    ];

    /// 1 through 10 in the usual order; the quasi-identity is 11.
    pub fn id(self) -> usize {
        self as usize + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Property::Commutativity => "commutativity",
            Property::LeftDistributivity => "left-distributivity",
            Property::RightDistributivity => "right-distributivity",
            Property::RightSemidistributivity => "right-semidistributivity",
            Property::RightAnnihilators => "right-annihilators",
            Property::RelativeRightAnnihilators => "relative-right-annihilators",
            Property::Symmetry => "symmetry",
            Property::Determined => "determined",
            Property::Stability => "stability",
            Property::WeakStability => "weak-stability",
            Property::RefinementQuasiIdentity => "refinement-quasi-identity",
        }
    }

    /// Labels of the congruences in a witness.
    fn labels(self) -> &'static [&'static str] {
        match self {
            Property::Commutativity => &["x", "y"],
            Property::LeftDistributivity | Property::RightDistributivity => &["x", "y", "z"],
            Property::RightSemidistributivity | Property::RightAnnihilators => &["x", "y", "y'"],
            Property::RelativeRightAnnihilators => &["x", "z", "y", "y'"],
            Property::Symmetry | Property::Determined => &["x", "y", "z"],
            Property::Stability | Property::WeakStability => &["x", "y", "z", "z'"],
            Property::RefinementQuasiIdentity => &["alpha", "beta"],
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::TEN
            .into_iter()
            .chain([Property::RefinementQuasiIdentity])
            .find(|p| p.name() == s || p.id().to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub congruences: Vec<(String, Partition)>,
    /// Commutators and centralities evaluated at the witness.
    pub values: Vec<(String, String)>,
}

impl Witness {
    fn partitions(&self) -> Vec<Partition> {
        self.congruences.iter().map(|(_, p)| p.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: Property,
    pub id: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub triples_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckAll {
    pub algebra: String,
    pub congruences: usize,
    pub reports: Vec<PropertyReport>,
}

impl CheckAll {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }

    pub fn get(&self, p: Property) -> Option<&PropertyReport> {
        self.reports.iter().find(|r| r.property == p)
    }
}

/// Commutators and centralities over a whole congruence lattice, computed
/// on demand and memoized.
///
/// `Δ_{β,α}` is assembled as the join of `Δ_{β,Cg(a,b)} = Cg((a,a),(b,b))`
/// over a spanning set of pairs of `α`; the principal pieces are cached per `β`.
#[derive(Debug)]
pub struct PropertyTables<'a> {
    alg: &'a FiniteAlgebra,
    pub lattice: CongruenceLattice,
    join: Vec<usize>,
    meet: Vec<usize>,
    spaces: Vec<Option<PairSpace>>,
    principal: HashMap<(usize, usize, usize), Partition>,
    rel: HashMap<(usize, usize), DeltaRelation>,
    comm: Vec<Option<usize>>,
    /// 0 unknown, 1 false, 2 true.
    cent: Vec<u8>,
}

impl<'a> PropertyTables<'a> {
    pub fn new(alg: &'a FiniteAlgebra, lattice_budget: usize) -> Result<Self> {
        let lattice = con_lattice(alg, lattice_budget)?;
        Ok(Self::from_lattice(alg, lattice))
    }

    pub fn from_lattice(alg: &'a FiniteAlgebra, lattice: CongruenceLattice) -> Self {
        let l = lattice.len();
        let mut join = vec![0; l * l];
        let mut meet = vec![0; l * l];
        for i in 0..l {
            for j in i..l {
                let (a, b) = (lattice.join(i, j), lattice.meet(i, j));
                join[i * l + j] = a;
                join[j * l + i] = a;
                meet[i * l + j] = b;
                meet[j * l + i] = b;
            }
        }
        PropertyTables {
            alg,
            lattice,
            join,
            meet,
            spaces: vec![None; l],
            principal: HashMap::new(),
            rel: HashMap::new(),
            comm: vec![None; l * l],
            cent: vec![0; l * l * l],
        }
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice.leq(i, j)
    }

    /// `Δ_{β,α}` on `A(β)` for `α = i`, `β = j`.
    fn relation(&mut self, i: usize, j: usize) -> &DeltaRelation {
        if !self.rel.contains_key(&(i, j)) {
            let alg = self.alg;
            let beta = self.lattice.get(j).clone();
            let space = self.spaces[j].get_or_insert_with(|| PairSpace::new(&beta)).clone();
            let alpha = self.lattice.get(i).clone();
            let mut classes = Partition::zero(space.len());
            for z in 0..alpha.size() {
                let r = alpha.rep(z);
                if r == z {
                    continue;
                }
                let piece = self.principal.entry((j, r, z)).or_insert_with(|| {
                    let seed = space.index_of(r, r).zip(space.index_of(z, z));
                    space.generate(alg, seed.into_iter())
                });
                classes = classes.join_unchecked(piece);
            }
            self.rel.insert((i, j), DeltaRelation::from_parts(space, classes));
        }
        &self.rel[&(i, j)]
    }

    pub fn commutator(&mut self, i: usize, j: usize) -> usize {
        let l = self.len();
        if let Some(c) = self.comm[i * l + j] {
            return c;
        }
        let alg = self.alg;
        let zero = Partition::zero(alg.size());
        let p = self.relation(i, j).least_above(alg, &zero);
        let c = self.lattice.index_of(&p).expect("a commutator is a congruence");
        self.comm[i * l + j] = Some(c);
        c
    }

    pub fn centralizes(&mut self, i: usize, j: usize, k: usize) -> bool {
        let l = self.len();
        let at = (i * l + j) * l + k;
        if self.cent[at] == 0 {
            let delta = self.lattice.get(k).clone();
            let holds = self.relation(i, j).centralizes(&delta);
            self.cent[at] = if holds { 2 } else { 1 };
        }
        self.cent[at] == 2
    }

    /// `Δ_{β,α}` meets both kernels trivially on `A(β)`, for `α = i`, `β = j`.
    fn disjoint(&mut self, i: usize, j: usize) -> bool {
        let r = self.relation(i, j);
        let (space, classes) = (r.space(), r.classes());
        let mut first = std::collections::HashSet::new();
        let mut second = std::collections::HashSet::new();
        classes.reps().iter().enumerate().all(|(x, &rep)| {
            let (a, b) = space.pair(x);
            first.insert((rep, a)) && second.insert((rep, b))
        })
    }

    fn tuples(&self, k: usize) -> impl Iterator<Item = Vec<usize>> {
        let l = self.len();
        let total = l.pow(k as u32);
        (0..total).map(move |mut t| {
            let mut v = vec![0; k];
            for slot in v.iter_mut().rev() {
                *slot = t % l;
                t /= l;
            }
            v
        })
    }

    fn violated(&mut self, p: Property, t: &[usize]) -> bool {
        match p {
            Property::Commutativity => self.commutator(t[0], t[1]) != self.commutator(t[1], t[0]),
            Property::LeftDistributivity => {
                let xy = self.join(t[0], t[1]);
                let lhs = self.commutator(xy, t[2]);
                let (a, b) = (self.commutator(t[0], t[2]), self.commutator(t[1], t[2]));
                lhs != self.join(a, b)
            }
            Property::RightDistributivity => {
                let yz = self.join(t[1], t[2]);
                let lhs = self.commutator(t[0], yz);
                let (a, b) = (self.commutator(t[0], t[1]), self.commutator(t[0], t[2]));
                lhs != self.join(a, b)
            }
            Property::RightSemidistributivity => {
                let a = self.commutator(t[0], t[1]);
                if a != self.commutator(t[0], t[2]) {
                    return false;
                }
                let yy = self.join(t[1], t[2]);
                a != self.commutator(t[0], yy)
            }
            Property::RightAnnihilators => {
                let z = self.lattice.bottom();
                if self.commutator(t[0], t[1]) != z || self.commutator(t[0], t[2]) != z {
                    return false;
                }
                let yy = self.join(t[1], t[2]);
                self.commutator(t[0], yy) != z
            }
            Property::RelativeRightAnnihilators => {
                if !self.centralizes(t[0], t[2], t[1]) || !self.centralizes(t[0], t[3], t[1]) {
                    return false;
                }
                let yy = self.join(t[2], t[3]);
                !self.centralizes(t[0], yy, t[1])
            }
            Property::Symmetry => self.centralizes(t[0], t[1], t[2]) != self.centralizes(t[1], t[0], t[2]),
            Property::Determined => {
                let c = self.commutator(t[0], t[1]);
                self.centralizes(t[0], t[1], t[2]) != self.leq(c, t[2])
            }
            Property::Stability => {
                self.leq(t[2], t[3]) && self.centralizes(t[0], t[1], t[2]) && !self.centralizes(t[0], t[1], t[3])
            }
            Property::WeakStability => {
                self.leq(t[2], t[3])
                    && self.leq(t[3], self.meet(t[0], t[1]))
                    && self.centralizes(t[0], t[1], t[2])
                    && !self.centralizes(t[0], t[1], t[3])
            }
            Property::RefinementQuasiIdentity => false,
        }
    }

    /// False when no completion of `prefix` (one short of full length) can
    /// violate `p`.
    fn viable(&mut self, p: Property, t: &[usize]) -> bool {
        match p {
            Property::RightAnnihilators if t.len() == 2 => self.commutator(t[0], t[1]) == self.lattice.bottom(),
            Property::RelativeRightAnnihilators => self.centralizes(t[0], t[2], t[1]),
            Property::Stability => self.centralizes(t[0], t[1], t[2]),
            Property::WeakStability => {
                self.leq(t[2], self.meet(t[0], t[1])) && self.centralizes(t[0], t[1], t[2])
            }
            _ => true,
        }
    }

    /// Scans tuples in lexicographic index order; the first violation is the witness.
    pub fn check(&mut self, p: Property) -> PropertyReport {
        if p == Property::RefinementQuasiIdentity {
            return self.check_quasi_identity();
        }
        let k = p.labels().len();
        let l = self.len();
        let mut checked = 0;
        let mut t = Vec::with_capacity(k);
        for prefix in self.tuples(k - 1) {
            if !self.viable(p, &prefix) {
                continue;
            }
            t.clear();
            t.extend_from_slice(&prefix);
            t.push(0);
            for last in 0..l {
                t[k - 1] = last;
                checked += 1;
                if self.violated(p, &t) {
                    return PropertyReport {
                        property: p,
                        id: p.id(),
                        holds: false,
                        witness: Some(self.witness(p, &t)),
                        triples_checked: checked,
                    };
                }
            }
        }
        PropertyReport {
            property: p,
            id: p.id(),
            holds: true,
            witness: None,
            triples_checked: checked,
        }
    }

    fn witness(&mut self, p: Property, t: &[usize]) -> Witness {
        let congruences = p
            .labels()
            .iter()
            .zip(t)
            .map(|(l, &i)| (l.to_string(), self.lattice.get(i).clone()))
            .collect();
        let names = p.labels();
        let mut comms: Vec<(usize, usize, String)> = Vec::new();
        let mut cents: Vec<(usize, usize, usize, String)> = Vec::new();
        match p {
            Property::Commutativity => {
                comms.push((t[0], t[1], "[x,y]".into()));
                comms.push((t[1], t[0], "[y,x]".into()));
            }
            Property::LeftDistributivity => {
                comms.push((self.join(t[0], t[1]), t[2], "[x+y,z]".into()));
                comms.push((t[0], t[2], "[x,z]".into()));
                comms.push((t[1], t[2], "[y,z]".into()));
            }
            Property::RightDistributivity | Property::RightSemidistributivity | Property::RightAnnihilators => {
                let (y, z) = (names[1], names[2]);
                comms.push((t[0], t[1], format!("[x,{y}]")));
                comms.push((t[0], t[2], format!("[x,{z}]")));
                comms.push((t[0], self.join(t[1], t[2]), format!("[x,{y}+{z}]")));
            }
            Property::Determined => {
                comms.push((t[0], t[1], "[x,y]".into()));
                cents.push((t[0], t[1], t[2], "C(x,y;z)".into()));
            }
            Property::RelativeRightAnnihilators => {
                cents.push((t[0], t[2], t[1], "C(x,y;z)".into()));
                cents.push((t[0], t[3], t[1], "C(x,y';z)".into()));
                cents.push((t[0], self.join(t[2], t[3]), t[1], "C(x,y+y';z)".into()));
            }
            Property::Symmetry => {
                cents.push((t[0], t[1], t[2], "C(x,y;z)".into()));
                cents.push((t[1], t[0], t[2], "C(y,x;z)".into()));
            }
            Property::Stability | Property::WeakStability => {
                cents.push((t[0], t[1], t[2], "C(x,y;z)".into()));
                cents.push((t[0], t[1], t[3], "C(x,y;z')".into()));
            }
            Property::RefinementQuasiIdentity => {}
        }
        let mut values = Vec::new();
        for (a, b, label) in comms {
            let c = self.commutator(a, b);
            values.push((label, self.lattice.get(c).to_string()));
        }
        for (a, b, d, label) in cents {
            values.push((label, self.centralizes(a, b, d).to_string()));
        }
        Witness { congruences, values }
    }

    /// `[β,α] = 0 ∧ [α,α∧β] = 0 ⟹ [α,β] = 0`, together with the agreement of
    /// the commutator conditions and the `Δ`-disjointness conditions.
    pub fn check_quasi_identity(&mut self) -> PropertyReport {
        let l = self.len();
        let z = self.lattice.bottom();
        let mut checked = 0;
        for a in 0..l {
            for b in 0..l {
                checked += 1;
                let ab = self.meet(a, b);
                let qa = self.commutator(b, a) == z && self.commutator(a, ab) == z;
                let qc = self.commutator(a, b) == z && self.commutator(b, ab) == z;
                let qb = self.disjoint(b, a);
                let qd = self.disjoint(a, b);
                let implication = !qa || self.commutator(a, b) == z;
                if !(implication && qa == qb && qb == qc && qc == qd) {
                    let c = self.commutator(a, b);
                    let values = [("(a)", qa), ("(b)", qb), ("(c)", qc), ("(d)", qd), ("implication", implication)]
                        .into_iter()
                        .map(|(k, v)| (k.to_string(), v.to_string()))
                        .chain([("[alpha,beta]".to_string(), self.lattice.get(c).to_string())])
                        .collect();
                    return PropertyReport {
                        property: Property::RefinementQuasiIdentity,
                        id: Property::RefinementQuasiIdentity.id(),
                        holds: false,
                        witness: Some(Witness {
                            congruences: vec![
                                ("alpha".into(), self.lattice.get(a).clone()),
                                ("beta".into(), self.lattice.get(b).clone()),
                            ],
                            values,
                        }),
                        triples_checked: checked,
                    };
                }
            }
        }
        PropertyReport {
            property: Property::RefinementQuasiIdentity,
            id: Property::RefinementQuasiIdentity.id(),
            holds: true,
            witness: None,
            triples_checked: checked,
        }
    }
}

/// `Δ_{α,β} ∧ η₁ = 0` and `Δ_{α,β} ∧ η₂ = 0` on `A(α)`.
pub fn delta_disjoint(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition) -> bool {
    let space = PairSpace::new(alpha);
    let delta = space.delta(alg, beta);
    let zero = Partition::zero(alg.size());
    let eta1 = space.lift(&zero, 1);
    let eta2 = space.lift(&zero, 2);
    delta.meet_unchecked(&eta1).is_zero() && delta.meet_unchecked(&eta2).is_zero()
}

macro_rules! checks {
    ($($f:ident => $p:ident),* $(,)?) => {
        $(
            pub fn $f(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<PropertyReport> {
                Ok(PropertyTables::new(alg, lattice_budget)?.check(Property::$p))
            }
        )*
    };
}

checks! {
    check_commutativity => Commutativity,
    check_left_distributivity => LeftDistributivity,
    check_right_distributivity => RightDistributivity,
    check_right_semidistributivity => RightSemidistributivity,
    check_right_annihilators => RightAnnihilators,
    check_relative_right_annihilators => RelativeRightAnnihilators,
    check_centralizer_symmetry => Symmetry,
    check_centralizer_determined => Determined,
    check_stability => Stability,
    check_weak_stability => WeakStability,
}

pub fn check_refinement_quasiidentity(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<PropertyReport> {
    Ok(PropertyTables::new(alg, lattice_budget)?.check_quasi_identity())
}

pub fn check_all(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<CheckAll> {
    let mut t = PropertyTables::new(alg, lattice_budget)?;
    let mut reports: Vec<PropertyReport> = Property::TEN.iter().map(|&p| t.check(p)).collect();
    reports.push(t.check_quasi_identity());
    Ok(CheckAll {
        algebra: alg.name().to_string(),
        congruences: t.len(),
        reports,
    })
}

/// Re-evaluates a reported violation from scratch, by the matrix method when
/// the algebra is small enough and by a fresh `Δ` computation otherwise.
pub fn recheck_violation(alg: &FiniteAlgebra, report: &PropertyReport) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let cs = w.partitions();
    let matrix = alg.size() <= WITNESS_SIZE_LIMIT;
    let mut cz = Centralizer::new(alg);
    let zero = Partition::zero(alg.size());
    let mut comm = |a: &Partition, b: &Partition| -> Result<Partition> {
        if matrix {
            relative_commutator_matrix(alg, a, b, &zero, DEFAULT_CLOSURE_BUDGET)
        } else {
            Ok(cz.commutator(a, b))
        }
    };
    let cent = |a: &Partition, b: &Partition, d: &Partition| -> Result<bool> {
        if matrix {
            Ok(centralizes_matrix(alg, a, b, d, DEFAULT_CLOSURE_BUDGET)?.holds)
        } else {
            Ok(DeltaRelation::new(alg, a, b).centralizes(d))
        }
    };
    let j = |a: &Partition, b: &Partition| a.join(b);
    let t = &cs;
    if report.property == Property::RefinementQuasiIdentity {
        let ab = t[0].meet(&t[1])?;
        let qa = comm(&t[1], &t[0])?.is_zero() && comm(&t[0], &ab)?.is_zero();
        let qc = comm(&t[0], &t[1])?.is_zero() && comm(&t[1], &ab)?.is_zero();
        let qb = delta_disjoint(alg, &t[0], &t[1]);
        let qd = delta_disjoint(alg, &t[1], &t[0]);
        return Ok(!(qa == qb && qb == qc && qc == qd && (!qa || qc)));
    }
    Ok(match report.property {
        Property::Commutativity => comm(&t[0], &t[1])? != comm(&t[1], &t[0])?,
        Property::LeftDistributivity => comm(&j(&t[0], &t[1])?, &t[2])? != comm(&t[0], &t[2])?.join(&comm(&t[1], &t[2])?)?,
        Property::RightDistributivity => comm(&t[0], &j(&t[1], &t[2])?)? != comm(&t[0], &t[1])?.join(&comm(&t[0], &t[2])?)?,
        Property::RightSemidistributivity => {
            let a = comm(&t[0], &t[1])?;
            a == comm(&t[0], &t[2])? && a != comm(&t[0], &j(&t[1], &t[2])?)?
        }
        Property::RightAnnihilators => {
            comm(&t[0], &t[1])?.is_zero() && comm(&t[0], &t[2])?.is_zero() && !comm(&t[0], &j(&t[1], &t[2])?)?.is_zero()
        }
        Property::RelativeRightAnnihilators => {
            cent(&t[0], &t[2], &t[1])? && cent(&t[0], &t[3], &t[1])? && !cent(&t[0], &j(&t[2], &t[3])?, &t[1])?
        }
        Property::Symmetry => cent(&t[0], &t[1], &t[2])? != cent(&t[1], &t[0], &t[2])?,
        Property::Determined => cent(&t[0], &t[1], &t[2])? != comm(&t[0], &t[1])?.leq(&t[2]),
        Property::Stability => t[2].leq(&t[3]) && cent(&t[0], &t[1], &t[2])? && !cent(&t[0], &t[1], &t[3])?,
        Property::WeakStability => {
            t[2].leq(&t[3])
                && t[3].leq(&t[0].meet(&t[1])?)
                && cent(&t[0], &t[1], &t[2])?
                && !cent(&t[0], &t[1], &t[3])?
        }
        Property::RefinementQuasiIdentity => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::DEFAULT_LATTICE_BUDGET;
    use crate::fixtures;

    #[test]
    fn z4_and_trivial_pass() {
        for alg in [fixtures::z4(), fixtures::trivial_semigroup()] {
            let r = check_all(&alg, DEFAULT_LATTICE_BUDGET).unwrap();
            assert!(r.all_hold(), "{}: {:?}", alg.name(), r.reports.iter().filter(|r| !r.holds).collect::<Vec<_>>());
        }
    }

    #[test]
    fn z2s2_failures_recheck() {
        let a = fixtures::z2s2();
        let r = check_all(&a, DEFAULT_LATTICE_BUDGET).unwrap();
        assert!(r.get(Property::RefinementQuasiIdentity).unwrap().holds);
        for rep in r.reports.iter().filter(|r| !r.holds) {
            assert!(recheck_violation(&a, rep).unwrap(), "{}", rep.property);
        }
        assert!(!r.get(Property::Symmetry).unwrap().holds);
    }

    #[test]
    fn basic_implications() {
        for seed in 0..5 {
            for alg in fixtures::random_groupoids(seed, 4, 3) {
                let r = check_all(&alg, DEFAULT_LATTICE_BUDGET).unwrap();
                let determined = r.get(Property::Determined).unwrap().holds;
                let stability = r.get(Property::Stability).unwrap().holds;
                assert!(!determined || stability);
                let weak = r.get(Property::WeakStability).unwrap().holds;
                assert!(!stability || weak);
            }
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::TEN {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            assert_eq!(p.id().to_string().parse::<Property>().unwrap(), p);
        }
    }
}
