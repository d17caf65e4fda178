use serde::{Deserialize, Serialize};

use super::{graph_algebra, labeled, transport, Checks, PentagonReport};
use crate::algebra::FiniteAlgebra;
use crate::centrality::{matrix_set, require_congruence, Centralizer};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subpower::DEFAULT_CLOSURE_BUDGET;

/// `A/[δ,γ]` with the images of `γ` and `δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalized {
    pub algebra: FiniteAlgebra,
    pub eps: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    pub report: PentagonReport,
}

/// From `[γ,δ] ≰ [δ,γ]`, produce `α`, `β` in a quotient with `[β,α] = 0 < [α,β]`.
pub fn normalize_noncommutativity(alg: &FiniteAlgebra, gamma: &Partition, delta: &Partition) -> Result<Normalized> {
    require_congruence(alg, gamma, "gamma")?;
    require_congruence(alg, delta, "delta")?;
    let mut cz = Centralizer::new(alg);
    let gd = cz.commutator(gamma, delta);
    let eps = cz.commutator(delta, gamma);
    if gd.leq(&eps) {
        return Err(Error::pre("[gamma,delta] <= [delta,gamma]"));
    }
    let (q, map) = alg.quotient(&eps)?;
    let m = q.size();
    let alpha = gamma.image(&map, m);
    let beta = delta.image(&map, m);
    let mut qz = Centralizer::new(&q);
    let ba = qz.commutator(&beta, &alpha);
    let ab = qz.commutator(&alpha, &beta);
    let mut checks = Checks::default();
    checks.check("[beta,alpha] = 0", ba.is_zero());
    checks.check("[alpha,beta] > 0", !ab.is_zero());
    let report = PentagonReport {
        input: labeled(&[("gamma", gamma), ("delta", delta)]),
        algebra: q.clone(),
        labels: labeled(&[("eps", &eps), ("alpha", &alpha), ("beta", &beta), ("[alpha,beta]", &ab)]),
        assertions: checks.into_vec(),
    };
    Ok(Normalized {
        algebra: q,
        eps,
        alpha,
        beta,
        report,
    })
}

fn require_noncommuting(cz: &mut Centralizer, alpha: &Partition, beta: &Partition) -> Result<()> {
    if !cz.commutator(beta, alpha).is_zero() {
        return Err(Error::pre("[beta,alpha] is not 0"));
    }
    if cz.commutator(alpha, beta).is_zero() {
        return Err(Error::pre("[alpha,beta] is 0"));
    }
    Ok(())
}

fn diagonal_singletons(rel: &Partition, diagonal: &[usize]) -> bool {
    let mut count = vec![0usize; rel.size()];
    for &r in rel.reps() {
        count[r] += 1;
    }
    diagonal.iter().all(|&d| count[rel.rep(d)] == 1)
}

/// The gadget in `A(α)` where `[η₁,Δ] ∨ [η₂,Δ] < [η₁∨η₂,Δ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub report: PentagonReport,
    pub pairs: Vec<(usize, usize)>,
    /// Base elements `x ≠ y` with `(x,x)` and `(y,y)` related in the larger commutator.
    pub witness: Option<(usize, usize)>,
    /// For the right gadget: the transported quadruple, as indices into `pairs`.
    pub quad: Option<[usize; 4]>,
}

/// Requires `[β,α] = 0 < [α,β]`.
pub fn left_distributivity_gadget(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition) -> Result<Gadget> {
    require_congruence(alg, alpha, "alpha")?;
    require_congruence(alg, beta, "beta")?;
    require_noncommuting(&mut Centralizer::new(alg), alpha, beta)?;
    let g = graph_algebra(alg, alpha)?;
    let delta = g.delta(alg, beta)?;
    let diag = g.space.diagonal();
    let mut gz = Centralizer::new(&g.algebra);
    let c1 = gz.commutator(&g.eta1, &delta);
    let c2 = gz.commutator(&g.eta2, &delta);
    let low = c1.join(&c2)?;
    let eta = g.eta1.join(&g.eta2)?;
    let high = gz.commutator(&eta, &delta);
    let mut checks = Checks::default();
    checks.check("diagonal is a union of singleton classes of the smaller join", diagonal_singletons(&low, &diag));
    let on_diag = g.on_diagonal(&high);
    checks.check("larger commutator is not equality on the diagonal", !on_diag.is_zero());
    checks.check("smaller join < larger commutator", low.lt(&high));
    let witness = on_diag.pairs().into_iter().find(|&(x, y)| x < y);
    Ok(Gadget {
        report: PentagonReport {
            input: labeled(&[("alpha", alpha), ("beta", beta)]),
            algebra: g.algebra.clone(),
            labels: labeled(&[
                ("eta1", &g.eta1),
                ("eta2", &g.eta2),
                ("Delta", &delta),
                ("[eta1,Delta] join [eta2,Delta]", &low),
                ("[eta1 join eta2,Delta]", &high),
            ]),
            assertions: checks.into_vec(),
        },
        pairs: g.space.pairs().to_vec(),
        witness,
        quad: None,
    })
}

/// Requires `β ≤ α` and `[β,α] = 0 < [α,β]`.
pub fn right_distributivity_gadget(alg: &FiniteAlgebra, alpha: &Partition, beta: &Partition) -> Result<Gadget> {
    require_congruence(alg, alpha, "alpha")?;
    require_congruence(alg, beta, "beta")?;
    if !beta.leq(alpha) {
        return Err(Error::pre("beta is not below alpha"));
    }
    require_noncommuting(&mut Centralizer::new(alg), alpha, beta)?;
    let g = graph_algebra(alg, alpha)?;
    let delta = g.delta(alg, beta)?;
    let beta2 = g.lift(beta, 2)?;
    let diag = g.space.diagonal();
    let mut gz = Centralizer::new(&g.algebra);
    let c12 = gz.commutator(&g.eta1, &g.eta2);
    let c1d = gz.commutator(&g.eta1, &delta);
    let low = c12.join(&c1d)?;
    let high = gz.commutator(&g.eta1, &beta2);
    let mut checks = Checks::default();
    checks.check("eta2 join Delta = beta2", g.eta2.join_unchecked(&delta) == beta2);
    checks.check("[eta1,eta2] = 0", c12.is_zero());
    checks.check("diagonal is a union of singleton classes of the smaller join", diagonal_singletons(&low, &diag));

    let m = matrix_set(alg, alpha, beta, DEFAULT_CLOSURE_BUDGET)?;
    let found = m
        .quads()
        .enumerate()
        .filter(|(_, q)| q[0] == q[1] && q[2] != q[3])
        .min_by_key(|&(_, q)| q);
    let Some((idx, [p, q, r, s])) = found else {
        return Err(Error::Validation("no quadruple with p = q and r != s".into()));
    };
    let at = |x: usize, y: usize| g.space.index_of(x, y);
    let lift = |t: [usize; 4]| Some([at(t[2], t[0])?, at(t[2], t[1])?, at(t[2], t[2])?, at(t[2], t[3])?]);
    let leaves_ok = m.generators().iter().all(|&t| match lift(t) {
        Some([a, b, c, d]) => (a == b && c == d && g.eta1.related(a, c)) || (a == c && b == d && beta2.related(a, b)),
        None => false,
    });
    checks.check("transported generators generate M(eta1,beta2)", leaves_ok);
    let image = transport(&m, idx, &g.algebra, lift)?;
    let expected = lift([p, q, r, s]).ok_or_else(|| Error::Validation("quadruple leaves A(alpha)".into()))?;
    checks.check("transported term reproduces the quadruple", image == expected);
    let (rr, rs) = (expected[2], expected[3]);
    checks.check("((r,r),(r,s)) lies in [eta1,beta2]", high.related(rr, rs));
    checks.check("(r,s) is off the diagonal", r != s);
    checks.check("smaller join < [eta1,beta2]", low.lt(&high));
    Ok(Gadget {
        report: PentagonReport {
            input: labeled(&[("alpha", alpha), ("beta", beta)]),
            algebra: g.algebra.clone(),
            labels: labeled(&[
                ("eta1", &g.eta1),
                ("eta2", &g.eta2),
                ("Delta", &delta),
                ("beta2", &beta2),
                ("[eta1,eta2] join [eta1,Delta]", &low),
                ("[eta1,beta2]", &high),
            ]),
            assertions: checks.into_vec(),
        },
        pairs: g.space.pairs().to_vec(),
        witness: Some((r, s)),
        quad: Some(expected),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pipeline::lemma410_pipeline;
    use crate::fixtures;

    fn normalized() -> Normalized {
        let l = lemma410_pipeline(&fixtures::z2s2(), crate::congruence::DEFAULT_LATTICE_BUDGET)
            .unwrap()
            .expect("pipeline applies to Z2 x S2");
        let (b, map) = l.algebra.quotient(&l.delta).unwrap();
        let m = b.size();
        normalize_noncommutativity(&b, &l.alpha.image(&map, m), &l.theta.image(&map, m)).unwrap()
    }

    #[test]
    fn normalization_checks() {
        let n = normalized();
        assert!(n.report.all_hold(), "{:?}", n.report.failed());
    }

    #[test]
    fn left_gadget_checks() {
        let n = normalized();
        let g = left_distributivity_gadget(&n.algebra, &n.alpha, &n.beta).unwrap();
        assert!(g.report.all_hold(), "{:?}", g.report.failed());
        assert!(g.witness.is_some());
    }

    #[test]
    fn right_gadget_checks() {
        let n = normalized();
        let g = right_distributivity_gadget(&n.algebra, &n.alpha, &n.beta).unwrap();
        assert!(g.report.all_hold(), "{:?}", g.report.failed());
    }

    #[test]
    fn commuting_pair_is_rejected() {
        let a = fixtures::z4();
        let one = Partition::one(4);
        assert!(matches!(left_distributivity_gadget(&a, &one, &one), Err(Error::Precondition(_))));
    }
}
