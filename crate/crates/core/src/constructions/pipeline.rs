use serde::{Deserialize, Serialize};

use super::{better_pentagon, herringbone, labeled, Checks, HerringboneState, PentagonReport};
use crate::algebra::FiniteAlgebra;
use crate::centrality::Centralizer;
use crate::congruence::{con_lattice, LabeledPentagon, PentagonAnchor};
use crate::error::Result;
use crate::partition::Partition;

/// Congruences `δ < θ < α` with `[α,θ] = 0`, `C(θ,α;δ)` and `[α,x]_δ = x`
/// for every `x` in `I[δ,θ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma410 {
    pub source: LabeledPentagon,
    pub case: u8,
    /// Case 2: the congruence `x` with `[x,x]_δ < x` that was used.
    pub x: Option<Partition>,
    pub algebra: FiniteAlgebra,
    pub alpha: Partition,
    pub beta: Partition,
    pub delta: Partition,
    pub theta: Partition,
    pub report: PentagonReport,
}

fn conclusions(
    alg: &FiniteAlgebra,
    budget: usize,
    alpha: &Partition,
    delta: &Partition,
    theta: &Partition,
    checks: &mut Checks,
) -> Result<bool> {
    let lattice = con_lattice(alg, budget)?;
    let mut cz = Centralizer::new(alg);
    let a = checks.check("[alpha,theta] = 0", cz.commutator(alpha, theta).is_zero());
    let b = checks.check("C(theta,alpha;delta)", cz.centralizes(theta, alpha, delta));
    let c = checks.check(
        "[alpha,x]_delta = x on I[delta,theta]",
        lattice
            .interval(delta, theta)?
            .iter()
            .all(|x| cz.relative_commutator(alpha, x, delta) == *x),
    );
    Ok(a && b && c)
}

/// Runs the two cases over the pentagons of `Con(alg)` in order and returns
/// the first whose conclusions all verify.
pub fn lemma410_pipeline(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<Option<Lemma410>> {
    let lattice = con_lattice(alg, lattice_budget)?;
    let mut cz = Centralizer::new(alg);
    for p in lattice.find_pentagons(&PentagonAnchor::default()) {
        let lp = lattice.pentagon_partitions(&p);
        if lp.bottom.is_zero() && cz.commutator(&lp.top, &lp.top).is_zero() && cz.centralizes(&lp.theta, &lp.top, &lp.delta)
        {
            let mut checks = Checks::default();
            if conclusions(alg, lattice_budget, &lp.top, &lp.delta, &lp.theta, &mut checks)? {
                return Ok(Some(Lemma410 {
                    report: PentagonReport {
                        input: pentagon_labels(&lp),
                        algebra: alg.clone(),
                        labels: labeled(&[("alpha", &lp.top), ("delta", &lp.delta), ("theta", &lp.theta)]),
                        assertions: checks.into_vec(),
                    },
                    case: 1,
                    x: None,
                    algebra: alg.clone(),
                    alpha: lp.top.clone(),
                    beta: lp.beta.clone(),
                    delta: lp.delta.clone(),
                    theta: lp.theta.clone(),
                    source: lp,
                }));
            }
        }
        for x in lattice.interval(&lp.delta, &lp.theta)? {
            let dx = cz.relative_commutator(&x, &x, &lp.delta);
            if !dx.lt(&x) {
                continue;
            }
            let Ok(shrunk) = LabeledPentagon::generated(lp.beta.clone(), dx.clone(), x.clone()) else {
                continue;
            };
            if cz.centralizes(&shrunk.beta, &shrunk.theta, &shrunk.delta) {
                continue;
            }
            let bp = better_pentagon(alg, &shrunk)?;
            let mut checks = Checks::default();
            let base_ok = bp.report.all_hold();
            checks.check("better pentagon verified", base_ok);
            let alpha = bp.beta.join(&bp.theta)?;
            if base_ok && conclusions(&bp.algebra, lattice_budget, &alpha, &bp.delta, &bp.theta, &mut checks)? {
                return Ok(Some(Lemma410 {
                    report: PentagonReport {
                        input: pentagon_labels(&shrunk),
                        algebra: bp.algebra.clone(),
                        labels: labeled(&[
                            ("alpha", &alpha),
                            ("beta", &bp.beta),
                            ("delta", &bp.delta),
                            ("theta", &bp.theta),
                        ]),
                        assertions: checks.into_vec(),
                    },
                    source: lp,
                    case: 2,
                    x: Some(x),
                    algebra: bp.algebra,
                    alpha,
                    beta: bp.beta,
                    delta: bp.delta,
                    theta: bp.theta,
                }));
            }
        }
    }
    Ok(None)
}

fn pentagon_labels(p: &LabeledPentagon) -> Vec<(String, Partition)> {
    labeled(&[
        ("bottom", &p.bottom),
        ("beta", &p.beta),
        ("delta", &p.delta),
        ("theta", &p.theta),
        ("top", &p.top),
    ])
}

/// Three congruences `x`, `y`, `z` with `[x,y] = [x,z] = 0 < [x,y∨z]`,
/// reached from a pentagon through `b = B/δ` and the herringbone algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdFailure {
    pub lemma: Lemma410,
    pub b: FiniteAlgebra,
    pub theta_bar: Partition,
    pub alpha_bar: Partition,
    pub herringbone: HerringboneState,
}

impl SdFailure {
    pub fn all_hold(&self) -> bool {
        self.lemma.report.all_hold() && self.herringbone.all_hold()
    }
}

pub fn semidistributivity_failure(alg: &FiniteAlgebra, lattice_budget: usize) -> Result<Option<SdFailure>> {
    let Some(lemma) = lemma410_pipeline(alg, lattice_budget)? else {
        return Ok(None);
    };
    let (b, map) = lemma.algebra.quotient(&lemma.delta)?;
    let m = b.size();
    let theta_bar = lemma.theta.image(&map, m);
    let alpha_bar = lemma.alpha.image(&map, m);
    let state = herringbone(&b, &theta_bar, &alpha_bar)?;
    Ok(Some(SdFailure {
        lemma,
        b,
        theta_bar,
        alpha_bar,
        herringbone: state,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::DEFAULT_LATTICE_BUDGET;
    use crate::fixtures;

    #[test]
    fn z2s2_goes_through_case_two() {
        let l = lemma410_pipeline(&fixtures::z2s2(), DEFAULT_LATTICE_BUDGET).unwrap().unwrap();
        assert_eq!(l.case, 2);
        assert_eq!(l.x.as_ref(), Some(&fixtures::z2s2_theta()));
        assert!(l.report.all_hold(), "{:?}", l.report.failed());
    }

    #[test]
    fn modular_lattice_has_nothing() {
        assert!(lemma410_pipeline(&fixtures::z4(), DEFAULT_LATTICE_BUDGET).unwrap().is_none());
    }

    #[test]
    fn sdfail_on_z2s2() {
        let f = semidistributivity_failure(&fixtures::z2s2(), DEFAULT_LATTICE_BUDGET).unwrap().unwrap();
        assert!(f.all_hold());
        assert!(f.herringbone.e.size() <= 64);
    }
}
