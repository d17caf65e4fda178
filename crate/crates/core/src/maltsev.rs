//! Free algebras of the variety generated by a finite algebra, and term
//! conditions decided on them.
//!
//! The `k`-generated free algebra is the subalgebra of `A^(n^k)` generated by
//! the projections, so its elements are exactly the `k`-ary term operations
//! of `A`. Difference-term conditions are decided in `F(x,y)/[θ,θ]` with
//! `θ = Cg(x,y)`: there `θ/[θ,θ]` is abelian and maps onto every principal
//! abelian congruence of an algebra in the variety, so a ternary term is a
//! right (left) difference term iff `t(x̄,x̄,ȳ) = ȳ` (`t(x̄,ȳ,ȳ) = x̄`) there.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{checked_pow, increment, FiniteAlgebra, OperationTable};
use crate::centrality::commutator;
use crate::congruence::{cg, con_lattice};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subpower::{closure_partial, Origin};
use crate::term::Term;

pub const DEFAULT_FREE_BUDGET: usize = 50_000;

/// The free algebra on `k` generators in `HSP(A)`.
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    pub base: FiniteAlgebra,
    pub rank: usize,
    /// Element `i` is the term operation whose value at the `c`-th assignment
    /// (lexicographic, first variable most significant) is `elements[i][c]`.
    pub elements: Vec<Vec<usize>>,
    origins: Vec<Origin>,
    /// Element index of each projection.
    pub generators: Vec<usize>,
    /// Generator slot in the closure -> variable.
    slot_var: Vec<usize>,
    /// False when the budget ran out; the elements are then a partial list.
    pub complete: bool,
    pub rounds: usize,
}

fn projections(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    let len = checked_pow(n, k).ok_or_else(|| Error::arg("free algebra coordinates overflow"))?;
    let mut out = vec![Vec::with_capacity(len); k];
    let mut digits = vec![0; k];
    for _ in 0..len {
        for (j, v) in out.iter_mut().enumerate() {
            v.push(digits[j]);
        }
        increment(&mut digits, n);
    }
    Ok(out)
}

/// Errors on budget exhaustion; see `free_algebra_partial` for the prefix.
pub fn free_algebra(alg: &FiniteAlgebra, k: usize, budget: usize) -> Result<FreeAlgebra> {
    let f = free_algebra_partial(alg, k, budget)?;
    if !f.complete {
        return Err(Error::Budget {
            what: "free algebra",
            budget,
            partial: f.elements.len(),
        });
    }
    Ok(f)
}

pub fn free_algebra_partial(alg: &FiniteAlgebra, k: usize, budget: usize) -> Result<FreeAlgebra> {
    if k == 0 {
        return Err(Error::arg("rank must be at least 1"));
    }
    let n = alg.size();
    let proj = projections(n, k)?;
    let mut sorted = proj.clone();
    sorted.sort();
    sorted.dedup();
    let slot_var: Vec<usize> = sorted
        .iter()
        .map(|g| proj.iter().position(|p| p == g).unwrap_or(0))
        .collect();
    let power = proj[0].len();
    let (c, status, rounds) = closure_partial(alg, power, proj.clone(), budget)?;
    let complete = match status {
        Ok(()) => true,
        Err(Error::Budget { .. }) => false,
        Err(e) => return Err(e),
    };
    let generators = proj.iter().map(|p| c.index_of(p).unwrap_or(0)).collect();
    Ok(FreeAlgebra {
        base: alg.clone(),
        rank: k,
        elements: c.elements,
        origins: c.origins,
        generators,
        slot_var,
        complete,
        rounds,
    })
}

impl FreeAlgebra {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, v: &[usize]) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    /// A term over `x0..x{k-1}` whose term operation is element `i`.
    pub fn provenance(&self, i: usize) -> Term {
        match &self.origins[i] {
            Origin::Generator(g) => Term::Var(self.slot_var[*g]),
            Origin::Apply(op, args) => Term::Op(*op, args.iter().map(|&a| self.provenance(a)).collect()),
        }
    }

    /// The free algebra as a finite algebra on element indices.
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let lookup: std::collections::HashMap<&[usize], usize> =
            self.elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let m = self.len();
        let power = self.elements.first().map_or(0, Vec::len);
        let mut ops = Vec::new();
        for (op, o) in self.base.operations().iter().enumerate() {
            let mut missing = false;
            let table = OperationTable::from_fn(o.name.clone(), o.arity, m, |args| {
                let v: Vec<usize> = (0..power)
                    .map(|c| {
                        let a: Vec<usize> = args.iter().map(|&i| self.elements[i][c]).collect();
                        self.base.apply(op, &a)
                    })
                    .collect();
                lookup.get(v.as_slice()).copied().unwrap_or_else(|| {
                    missing = true;
                    0
                })
            });
            if missing {
                return Err(Error::Validation("free algebra is not closed".into()));
            }
            ops.push(table);
        }
        FiniteAlgebra::new(format!("F{}({})", self.rank, self.base.name()), m, ops)
    }
}

/// `F(x,y)/[θ,θ]` with `θ = Cg(x,y)`.
#[derive(Clone, Debug)]
pub struct FreeAbelianQuotient {
    pub free: FreeAlgebra,
    /// Element of `F` -> element of `F̄`.
    pub map: Vec<usize>,
    pub fbar: FiniteAlgebra,
    pub xbar: usize,
    pub ybar: usize,
    pub theta_bar: Partition,
}

pub fn free_abelian_quotient(alg: &FiniteAlgebra, budget: usize) -> Result<FreeAbelianQuotient> {
    let free = free_algebra(alg, 2, budget)?;
    let f = free.to_algebra()?;
    let (x, y) = (free.generators[0], free.generators[1]);
    let theta = cg(&f, x, y)?;
    let tt = commutator(&f, &theta, &theta)?;
    let (fbar, map) = f.quotient(&tt)?;
    let theta_bar = theta.image(&map, fbar.size());
    if !commutator(&fbar, &theta_bar, &theta_bar)?.is_zero() {
        return Err(Error::Validation("[theta,theta] is not 0 in the quotient".into()));
    }
    Ok(FreeAbelianQuotient {
        xbar: map[x],
        ybar: map[y],
        free,
        map,
        fbar,
        theta_bar,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermKind {
    RightMaltsev,
    LeftMaltsev,
    Maltsev,
    RightDifference,
    LeftDifference,
    WeakDifference,
    Difference,
    Taylor,
}

impl TermKind {
    pub const ALL: [TermKind; 8] = [
        TermKind::RightMaltsev,
        TermKind::LeftMaltsev,
        TermKind::Maltsev,
        TermKind::RightDifference,
        TermKind::LeftDifference,
        TermKind::WeakDifference,
        TermKind::Difference,
        TermKind::Taylor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TermKind::RightMaltsev => "right-maltsev",
            TermKind::LeftMaltsev => "left-maltsev",
            TermKind::Maltsev => "maltsev",
            TermKind::RightDifference => "right-difference",
            TermKind::LeftDifference => "left-difference",
            TermKind::WeakDifference => "weak-difference",
            TermKind::Difference => "difference",
            TermKind::Taylor => "taylor",
        }
    }
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TermKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown term kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub check: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCertificate {
    /// Prefix notation over the algebra's operation names.
    pub term: String,
    pub arity: usize,
    pub kinds: Vec<TermKind>,
    pub evidence: Vec<Evidence>,
}

impl TermCertificate {
    pub fn has(&self, kind: TermKind) -> bool {
        self.kinds.contains(&kind)
    }
}

/// Classifies ternary term operations given by their tables.
#[derive(Debug)]
pub struct TermClassifier<'a> {
    alg: &'a FiniteAlgebra,
    fq: FreeAbelianQuotient,
}

impl<'a> TermClassifier<'a> {
    pub fn new(alg: &'a FiniteAlgebra, budget: usize) -> Result<Self> {
        Ok(TermClassifier {
            alg,
            fq: free_abelian_quotient(alg, budget)?,
        })
    }

    pub fn quotient(&self) -> &FreeAbelianQuotient {
        &self.fq
    }

    /// Evaluates `t(u,v,w)` for binary term operations `u`, `v`, `w` given
    /// as elements of `F(x,y)` and returns the image in `F̄`.
    fn in_fbar(&self, table: &[usize], args: [usize; 3]) -> Result<usize> {
        let n = self.alg.size();
        let f = &self.fq.free;
        let v: Vec<usize> = (0..n * n)
            .map(|c| {
                let [a, b, d] = args.map(|e| f.elements[e][c]);
                table[(a * n + b) * n + d]
            })
            .collect();
        let i = f
            .index_of(&v)
            .ok_or_else(|| Error::Validation("term value outside the free algebra".into()))?;
        Ok(self.fq.map[i])
    }

    /// Every kind except taylor, from a ternary table indexed `(a·n+b)·n+c`.
    pub fn kinds(&self, table: &[usize]) -> Result<(Vec<TermKind>, Vec<Evidence>)> {
        let n = self.alg.size();
        let at = |a: usize, b: usize, c: usize| table[(a * n + b) * n + c];
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        let rm = pairs().all(|(a, b)| at(a, a, b) == b);
        let lm = pairs().all(|(a, b)| at(a, b, b) == a);
        let (x, y) = (self.fq.free.generators[0], self.fq.free.generators[1]);
        let rd = self.in_fbar(table, [x, x, y])? == self.fq.ybar;
        let ld = self.in_fbar(table, [x, y, y])? == self.fq.xbar;
        let mut kinds = Vec::new();
        for (k, holds) in [
            (TermKind::RightMaltsev, rm),
            (TermKind::LeftMaltsev, lm),
            (TermKind::Maltsev, rm && lm),
            (TermKind::RightDifference, rd),
            (TermKind::LeftDifference, ld),
            (TermKind::WeakDifference, rd && ld),
            (TermKind::Difference, rm && ld),
        ] {
            if holds {
                kinds.push(k);
            }
        }
        let evidence = vec![
            Evidence { check: "t(x,x,y) = y on A".into(), holds: rm },
            Evidence { check: "t(x,y,y) = x on A".into(), holds: lm },
            Evidence { check: "t(x,x,y) = y in F(x,y)/[theta,theta]".into(), holds: rd },
            Evidence { check: "t(x,y,y) = x in F(x,y)/[theta,theta]".into(), holds: ld },
        ];
        Ok((kinds, evidence))
    }

    pub fn certificate(&self, term: &Term) -> Result<TermCertificate> {
        let table = self.alg.term_table(term, 3)?;
        let (mut kinds, mut evidence) = self.kinds(&table)?;
        let taylor = taylor_from_table(self.alg, &table, 3);
        evidence.push(Evidence {
            check: "Taylor identities".into(),
            holds: taylor.holds,
        });
        if taylor.holds {
            kinds.push(TermKind::Taylor);
        }
        Ok(TermCertificate {
            term: term.to_prefix(self.alg, 3),
            arity: 3,
            kinds,
            evidence,
        })
    }
}

/// Requires a ternary term.
pub fn classify_term(alg: &FiniteAlgebra, t: &Term, budget: usize) -> Result<TermCertificate> {
    if t.max_var().is_some_and(|v| v > 2) {
        return Err(Error::arg("difference-type terms are ternary"));
    }
    TermClassifier::new(alg, budget)?.certificate(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum TermSearch {
    Found { kind: TermKind, certificate: TermCertificate },
    /// Exact: every ternary term operation was examined.
    None { kind: TermKind, term_operations: usize },
    /// The free algebra did not close; terms up to `depth` rounds were examined.
    Inconclusive { kind: TermKind, depth: usize, examined: usize },
}

/// Scans the ternary term operations in closure order.
pub fn find_term(alg: &FiniteAlgebra, kind: TermKind, budget: usize) -> Result<TermSearch> {
    let f3 = free_algebra_partial(alg, 3, budget)?;
    let needs_fbar = matches!(
        kind,
        TermKind::RightDifference | TermKind::LeftDifference | TermKind::WeakDifference | TermKind::Difference
    );
    let classifier = if needs_fbar { Some(TermClassifier::new(alg, budget)?) } else { None };
    let n = alg.size();
    for (i, table) in f3.elements.iter().enumerate() {
        let hit = match kind {
            TermKind::Taylor => taylor_from_table(alg, table, 3).holds,
            TermKind::RightMaltsev | TermKind::LeftMaltsev | TermKind::Maltsev => {
                let at = |a: usize, b: usize, c: usize| table[(a * n + b) * n + c];
                let rm = (0..n).all(|a| (0..n).all(|b| at(a, a, b) == b));
                let lm = (0..n).all(|a| (0..n).all(|b| at(a, b, b) == a));
                match kind {
                    TermKind::RightMaltsev => rm,
                    TermKind::LeftMaltsev => lm,
                    _ => rm && lm,
                }
            }
            _ => classifier.as_ref().map_or(Ok(false), |c| c.kinds(table).map(|(k, _)| k.contains(&kind)))?,
        };
        if hit {
            let term = f3.provenance(i);
            let certificate = match &classifier {
                Some(c) => c.certificate(&term)?,
                None => match TermClassifier::new(alg, budget) {
                    Ok(c) => c.certificate(&term)?,
                    Err(_) => TermCertificate {
                        term: term.to_prefix(alg, 3),
                        arity: 3,
                        kinds: vec![kind],
                        evidence: vec![Evidence { check: format!("{kind} identities on A"), holds: true }],
                    },
                },
            };
            return Ok(TermSearch::Found { kind, certificate });
        }
    }
    Ok(if f3.complete {
        TermSearch::None {
            kind,
            term_operations: f3.len(),
        }
    } else {
        TermSearch::Inconclusive {
            kind,
            depth: f3.rounds,
            examined: f3.len(),
        }
    })
}

/// Idempotence plus, for each place `i`, an identity `T(w) ≈ T(z)` with
/// `wᵢ = x`, `zᵢ = y`. Words are over `{x,y}`: from any identity with a
/// disagreement at `i`, substituting `x` for every variable except the one
/// at `zᵢ` gives an identity of this form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorCheck {
    pub holds: bool,
    pub idempotent: bool,
    /// Per place, the least `(w, z)` found, as words such as `"xxy"`.
    pub witnesses: Vec<Option<(String, String)>>,
}

pub fn is_taylor_term(alg: &FiniteAlgebra, t: &Term, arity: usize) -> Result<TaylorCheck> {
    if t.max_var().is_some_and(|v| v >= arity) {
        return Err(Error::arg("term uses a variable beyond its arity"));
    }
    let table = alg.term_table(t, arity)?;
    Ok(taylor_from_table(alg, &table, arity))
}

fn word(bits: usize, m: usize) -> String {
    (0..m).map(|i| if bits >> (m - 1 - i) & 1 == 1 { 'y' } else { 'x' }).collect()
}

pub(crate) fn taylor_from_table(alg: &FiniteAlgebra, table: &[usize], m: usize) -> TaylorCheck {
    let n = alg.size();
    let index = |bits: usize, a: usize, b: usize| {
        (0..m).fold(0, |acc, i| acc * n + if bits >> (m - 1 - i) & 1 == 1 { b } else { a })
    };
    let idempotent = (0..n).all(|a| table[index(0, a, a)] == a);
    let words = 1usize << m;
    let equal = |w: usize, z: usize| (0..n).all(|a| (0..n).all(|b| table[index(w, a, b)] == table[index(z, a, b)]));
    let witnesses: Vec<Option<(String, String)>> = (0..m)
        .map(|i| {
            let bit = 1 << (m - 1 - i);
            (0..words)
                .filter(|w| w & bit == 0)
                .flat_map(|w| (0..words).filter(move |z| z & bit != 0).map(move |z| (w, z)))
                .find(|&(w, z)| equal(w, z))
                .map(|(w, z)| (word(w, m), word(z, m)))
        })
        .collect();
    TaylorCheck {
        holds: idempotent && witnesses.iter().all(Option::is_some),
        idempotent,
        witnesses,
    }
}

/// A two-element quotient of a subalgebra where every operation is a projection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionQuotient {
    pub subuniverse: Vec<usize>,
    /// On the subalgebra, indexed by position in `subuniverse`.
    pub congruence: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorDecision {
    pub holds: bool,
    pub subuniverses: usize,
    pub counterexample: Option<ProjectionQuotient>,
}

/// Largest universe for which every subset is closed.
pub const SUBUNIVERSE_LIMIT: usize = 20;

fn close_subset(alg: &FiniteAlgebra, mut set: Vec<bool>) -> Vec<bool> {
    loop {
        let members: Vec<usize> = (0..set.len()).filter(|&i| set[i]).collect();
        let mut grew = false;
        for op in 0..alg.op_count() {
            let k = alg.arity(op);
            let Some(total) = checked_pow(members.len(), k) else { continue };
            let mut idx = vec![0; k];
            let mut args = vec![0; k];
            for _ in 0..total {
                for (a, &i) in args.iter_mut().zip(&idx) {
                    *a = members[i];
                }
                let v = alg.apply(op, &args);
                if !set[v] {
                    set[v] = true;
                    grew = true;
                }
                increment(&mut idx, members.len());
            }
        }
        if !grew {
            return set;
        }
    }
}

fn is_projection(alg: &FiniteAlgebra, op: usize) -> bool {
    let k = alg.arity(op);
    (0..k).any(|i| {
        let mut args = vec![0; k];
        (0..1usize << k).all(|bits| {
            for (j, a) in args.iter_mut().enumerate() {
                *a = bits >> j & 1;
            }
            alg.apply(op, &args) == args[i]
        })
    })
}

/// For idempotent `alg`: true iff no subalgebra has a two-element quotient
/// on which every operation is a projection.
pub fn has_taylor_term_idempotent(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<TaylorDecision> {
    if !alg.is_idempotent() {
        return Err(Error::pre(format!("{} is not idempotent", alg.name())));
    }
    let n = alg.size();
    if n > SUBUNIVERSE_LIMIT {
        return Err(Error::Budget {
            what: "subuniverse enumeration",
            budget: SUBUNIVERSE_LIMIT,
            partial: 0,
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for mask in 1u32..(1u32 << n) {
        let set = close_subset(alg, (0..n).map(|i| mask >> i & 1 == 1).collect());
        let universe: Vec<usize> = (0..n).filter(|&i| set[i]).collect();
        if universe.len() >= 2 {
            seen.insert(universe);
        }
    }
    let count = seen.len();
    for universe in seen {
        let sub = alg.subalgebra(&universe)?;
        for theta in con_lattice(&sub, lattice_budget)?.congruences() {
            if theta.block_count() != 2 {
                continue;
            }
            let (q, _) = sub.quotient(theta)?;
            if (0..q.op_count()).all(|op| is_projection(&q, op)) {
                return Ok(TaylorDecision {
                    holds: false,
                    subuniverses: count,
                    counterexample: Some(ProjectionQuotient {
                        subuniverse: universe,
                        congruence: theta.clone(),
                    }),
                });
            }
        }
    }
    Ok(TaylorDecision {
        holds: true,
        subuniverses: count,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const B: usize = DEFAULT_FREE_BUDGET;

    #[test]
    fn provenance_reevaluates() {
        for alg in [fixtures::z2s2(), fixtures::semilattice2(), fixtures::z4()] {
            let f = free_algebra(&alg, 2, B).unwrap();
            for i in 0..f.len() {
                let t = f.provenance(i);
                assert_eq!(alg.term_table(&t, 2).unwrap(), f.elements[i]);
            }
        }
    }

    #[test]
    fn small_free_algebras() {
        assert_eq!(free_algebra(&fixtures::semilattice2(), 2, B).unwrap().len(), 3);
        assert_eq!(free_algebra(&fixtures::trivial_semigroup(), 3, B).unwrap().len(), 1);
        assert_eq!(free_algebra(&fixtures::z4(), 1, B).unwrap().len(), 4);
        let f = free_algebra(&fixtures::z2s2(), 2, B).unwrap();
        let g = f.to_algebra().unwrap();
        let x = f.generators[0];
        let xxx = g.apply(0, &[g.apply(0, &[x, x]), x]);
        assert_eq!(xxx, x);
    }

    #[test]
    fn budget_gives_partial_list() {
        let f = free_algebra_partial(&fixtures::z4(), 2, 3).unwrap();
        assert!(!f.complete);
        assert!(free_algebra(&fixtures::z4(), 2, 3).is_err());
    }

    #[test]
    fn z4_quotient_is_free_algebra() {
        let q = free_abelian_quotient(&fixtures::z4(), B).unwrap();
        assert_eq!(q.fbar.size(), q.free.len());
        let t = free_abelian_quotient(&fixtures::trivial_semigroup(), B).unwrap();
        assert_eq!(t.fbar.size(), 1);
    }

    #[test]
    fn classify_group_term_and_projection() {
        let a = fixtures::z4();
        let t = Term::parse("(add (add x (neg y)) z)", &a, 3).unwrap();
        let c = classify_term(&a, &t, B).unwrap();
        for k in [TermKind::Maltsev, TermKind::Difference, TermKind::WeakDifference, TermKind::Taylor] {
            assert!(c.has(k), "{k}");
        }
        let p = classify_term(&a, &Term::Var(2), B).unwrap();
        assert!(p.has(TermKind::RightMaltsev));
        assert!(!p.has(TermKind::LeftMaltsev));
        assert!(!p.has(TermKind::Difference));
    }

    #[test]
    fn z2s2_terms() {
        let a = fixtures::z2s2();
        assert!(matches!(find_term(&a, TermKind::Difference, B).unwrap(), TermSearch::None { .. }));
        match find_term(&a, TermKind::WeakDifference, B).unwrap() {
            TermSearch::Found { certificate, .. } => assert!(certificate.has(TermKind::WeakDifference)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn z4_maltsev_found() {
        let a = fixtures::z4();
        let TermSearch::Found { certificate, .. } = find_term(&a, TermKind::Maltsev, B).unwrap() else {
            panic!()
        };
        let t = Term::parse(&certificate.term, &a, 3).unwrap();
        assert!(is_taylor_term(&a, &t, 3).unwrap().holds);
        let table = a.term_table(&t, 3).unwrap();
        assert!((0..4).all(|x| (0..4).all(|y| (0..4).all(|z| table[(x * 4 + y) * 4 + z] == (x + 4 - y + z) % 4))));
    }

    #[test]
    fn taylor_terms() {
        let a = fixtures::z2s2();
        let name = &a.operations()[0].name;
        let t = Term::parse(&format!("({name} ({name} x y) z)"), &a, 3).unwrap();
        let c = is_taylor_term(&a, &t, 3).unwrap();
        assert!(c.holds);
        assert!(!is_taylor_term(&a, &Term::Var(0), 3).unwrap().holds);
    }

    #[test]
    fn idempotent_taylor_decisions() {
        assert!(has_taylor_term_idempotent(&fixtures::semilattice2(), 1000).unwrap().holds);
        assert!(has_taylor_term_idempotent(&fixtures::majority3(), 1000).unwrap().holds);
        let p = has_taylor_term_idempotent(&fixtures::projection2(), 1000).unwrap();
        assert!(!p.holds);
        assert_eq!(p.counterexample.unwrap().subuniverse, vec![0, 1]);
        assert!(matches!(
            has_taylor_term_idempotent(&fixtures::z2s2(), 1000),
            Err(Error::Precondition(_))
        ));
    }
}
